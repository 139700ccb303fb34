#include <doctest.h>

#include "oracles.hpp"
#include "redmod/extensions.hpp"
#include "redmod/torsion.hpp"

using namespace redmod;

TEST_CASE("multiplicative closures") {
  const FiniteRing z6 = make_zn(6);
  CHECK(mult_set_closure(z6, {z6.element_at(3)}).ids() ==
        oracle::ids({1, 3}));
  CHECK(mult_set_closure(z6, {}).ids() == oracle::ids({1}));
  const FiniteRing z8 = make_zn(8);
  CHECK(mult_set_closure(z8, {z8.element_at(3)}).ids() ==
        oracle::ids({1, 3}));
  // a nilpotent generator pulls 0 into the closure
  CHECK(mult_set_closure(z8, {z8.element_at(2)}).contains_id(0));
}

TEST_CASE("ring localization") {
  const FiniteRing z6 = make_zn(6);
  const LocalizedRing l = localize(z6, mult_set_closure(z6, {z6.element_at(3)}));
  CHECK(l.class_count() == 2);
  CHECK_FALSE(l.canonical_map_bijective());
  CHECK(l.canonical_map(0) == l.zero_class());
  CHECK(l.canonical_map(z6.one_id()) == l.one_class());

  // inverting units changes nothing
  const FiniteRing z8 = make_zn(8);
  const MultSet units = mult_set_closure(z8, {z8.element_at(3), z8.element_at(5)});
  CHECK(units.ids() == oracle::ids({1, 3, 5, 7}));
  const LocalizedRing lu = localize(z8, units);
  CHECK(lu.class_count() == 8);
  CHECK(lu.canonical_map_bijective());

  // the trivial localization is the identity
  const LocalizedRing l1 = localize(z8, mult_set_closure(z8, {}));
  CHECK(l1.class_count() == 8);
  CHECK(l1.canonical_map_bijective());
}

TEST_CASE("module localization") {
  const FiniteRing z6 = make_zn(6);
  const LocalizedModule lm = localize_module(
      regular_module(z6), mult_set_closure(z6, {z6.element_at(3)}));
  CHECK(lm.class_count() == 2);
  CHECK(lm.canonical_map(0) == lm.zero_class());
}

TEST_CASE("trivial localization is the identity everywhere small") {
  for (std::uint64_t n : {2, 5, 6, 8, 9, 12}) {
    const FiniteRing R = make_zn(n);
    const MultSet S = mult_set_closure(R, {});
    const LocalizedRing l = localize(R, S);
    CHECK(l.class_count() == R.order());
    CHECK(l.canonical_map_bijective());
    for (const Ideal& I : enumerate_ideals(R)) {
      const PresentedModule M = cyclic_quotient(R, I);
      const LocalizedModule lm = localize_module(M, S);
      CHECK(lm.class_count() == M.size());
    }
  }
}

TEST_CASE("localization audit computes both directions") {
  const FiniteRing z8 = make_zn(8);
  const PresentedModule z4_over_z8 =
      cyclic_quotient(z8, ideal_generate(z8, {z8.element_at(4)}));
  const LocalizationAudit triv =
      localization_audit(z4_over_z8, mult_set_closure(z8, {}), 2);
  CHECK(triv.base_eps);
  CHECK(triv.localized_eps);
  CHECK(triv.biconditional);

  const FiniteRing z6 = make_zn(6);
  const LocalizationAudit a6 = localization_audit(
      regular_module(z6), mult_set_closure(z6, {z6.element_at(3)}), 1);
  CHECK(a6.base_eps);
  CHECK(a6.localized_eps);
  CHECK(a6.biconditional);

  const FiniteRing z16 = make_zn(16);
  const LocalizationAudit a16 =
      localization_audit(regular_module(z16), mult_set_closure(z16, {}), 2);
  CHECK_FALSE(a16.base_eps);
  CHECK_FALSE(a16.localized_eps);
  CHECK(a16.biconditional);

  // a genuine biconditional failure: S = {1,4} over Z_12 has no zero in it,
  // yet 4 kills 3, so Z_12 does not embed and the converse breaks
  const FiniteRing z12 = make_zn(12);
  const MultSet s4 = mult_set_closure(z12, {z12.element_at(4)});
  CHECK_FALSE(s4.contains_id(0));
  const LocalizationAudit a12 =
      localization_audit(regular_module(z12), s4, 1);
  CHECK_FALSE(a12.base_eps);
  CHECK(a12.localized_eps);
  CHECK_FALSE(a12.biconditional);
  CHECK(a12.note.find("does not embed") != std::string::npos);
}

TEST_CASE("scalar restriction re-presents the module") {
  const FiniteRing z8 = make_zn(8);
  const FiniteRing z4 = make_zn(4);
  const RingHom f = ring_hom_make(z8, z4, {{z4.one(), z4.zero()}});

  const PresentedModule m4 = regular_module(z4);
  const PresentedModule restricted = restrict_scalars(f, m4);
  CHECK(restricted.ring() == z8);
  CHECK(restricted.size() == 4);
  CHECK(is_eps_reduced(restricted, 2).reduced);
  CHECK_FALSE(is_reduced(restricted).reduced);

  const ScalarAudit audit = scalar_audit(f, m4, 2);
  CHECK(audit.target_eps);
  CHECK(audit.restricted_eps);
  CHECK(audit.restriction_ok);
  REQUIRE(audit.extension_ok.has_value());
  CHECK(*audit.extension_ok);

  // identity restriction is the identity operation
  const RingHom id = identity_hom(z8);
  const PresentedModule m8 = regular_module(z8);
  const PresentedModule same = restrict_scalars(id, m8);
  CHECK(same.size() == m8.size());
  CHECK(is_reduced(same).reduced == is_reduced(m8).reduced);

  // a non-surjective hom: F_4 restricted to Z_2 needs two generators
  const FiniteRing f4 = ring_make({{2, {1, 1, 1}}});
  const FiniteRing z2 = make_zn(2);
  const auto homs = enumerate_ring_homs(z2, f4);
  REQUIRE_FALSE(homs.empty());
  CHECK_FALSE(homs.front().surjective());
  const PresentedModule rf4 = restrict_scalars(homs.front(), regular_module(f4));
  CHECK(rf4.size() == 4);
  CHECK(rf4.generator_count() == 2);
}

TEST_CASE("scalar audit holds across enumerated homs") {
  const std::vector<FiniteRing> sources = {make_zn(8), make_zn(12)};
  for (const FiniteRing& R : sources)
    for (std::uint64_t m = 2; m <= R.order(); ++m) {
      if (R.order() % m != 0) continue;
      const FiniteRing S = make_zn(m);
      for (const RingHom& f : enumerate_ring_homs(R, S))
        for (std::uint32_t t = 1; t <= 2; ++t) {
          const ScalarAudit audit = scalar_audit(f, regular_module(S), t);
          CHECK(audit.restriction_ok);
          if (audit.extension_ok) CHECK(*audit.extension_ok);
        }
    }
}

TEST_CASE("polynomial identity at bounded degree") {
  const FiniteRing z12 = make_zn(12);
  const PolyGlnReport p12 = poly_gln_check(z12, z12.element_at(2), 2, 2);
  CHECK(p12.identity_ok);
  CHECK(p12.corollary_ok);
  CHECK(p12.lhs_size == 1);

  const FiniteRing z16 = make_zn(16);
  const PolyGlnReport p16 = poly_gln_check(z16, z16.element_at(2), 2, 1);
  CHECK(p16.identity_ok);
  CHECK(p16.lhs_size == 16);

  const FiniteRing f4 = ring_make({{2, {1, 1, 1}}});
  const PolyGlnReport pf = poly_gln_check(f4, f4.canonicalize({{0, 1}}), 1, 2);
  CHECK(pf.identity_ok);
  CHECK(pf.lhs_size == 1);

  CHECK_THROWS_AS(poly_gln_check(make_zn(32), make_zn(32).element_at(2), 1, 3),
                  OrderBudgetExceeded);
}
