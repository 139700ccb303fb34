#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "redmod/torsion.hpp"

using namespace redmod;

namespace {

PresentedModule reg(std::uint64_t n) { return regular_module(make_zn(n)); }

PresentedModule z8_mod_4() {
  const FiniteRing z8 = make_zn(8);
  return cyclic_quotient(z8, ideal_generate(z8, {z8.element_at(4)}));
}

std::vector<ModId> full(const PresentedModule& M) {
  std::vector<ModId> ids(M.size());
  for (std::uint64_t i = 0; i < M.size(); ++i) ids[i] = static_cast<ModId>(i);
  return ids;
}

}  // namespace

TEST_CASE("torsion submodules") {
  const PresentedModule m12 = reg(12);
  CHECK(gamma(m12, m12.ring().element_at(2)).ids() ==
        oracle::mids({0, 3, 6, 9}));
  CHECK(gamma(m12, m12.ring().element_at(5)).ids() == oracle::mids({0}));
  CHECK(gamma(m12, m12.ring().zero()).size() == m12.size());

  // fixpoint route agrees with the brute-force oracle everywhere small
  for (std::uint64_t n : {4, 6, 8, 9, 12, 16}) {
    const PresentedModule m = reg(n);
    for (std::uint64_t a = 0; a < n; ++a)
      CHECK(gamma(m, m.ring().element_at(static_cast<ElemId>(a))).ids() ==
            oracle::gamma_brute(m, static_cast<ElemId>(a)));
  }
}

TEST_CASE("generalised locally nilradical values") {
  const PresentedModule m8 = reg(8);
  CHECK(gln(m8, m8.ring().element_at(2), 2).ids() == oracle::mids({0, 4}));

  const PresentedModule m16 = reg(16);
  CHECK(gln(m16, m16.ring().element_at(4), 2).ids() == oracle::mids({0}));
  CHECK(gln(m16, m16.ring().element_at(2), 2).ids() ==
        oracle::mids({0, 4, 8, 12}));

  const PresentedModule m12 = reg(12);
  CHECK(gln(m12, m12.ring().element_at(2), 2).ids() == oracle::mids({0}));

  // monotone in t
  for (std::uint64_t a = 0; a < 12; ++a)
    for (std::uint32_t t = 1; t <= 3; ++t) {
      const auto big = gln(m12, m12.ring().element_at(a), 1).ids();
      const auto small = gln(m12, m12.ring().element_at(a), t).ids();
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
}

TEST_CASE("reducedness with witnesses") {
  const PresentedModule m16 = reg(16);
  CHECK(is_at_reduced(m16, m16.ring().element_at(4), 2).reduced);

  const AtReducedReport bad = is_at_reduced(m16, m16.ring().element_at(2), 2);
  CHECK_FALSE(bad.reduced);
  REQUIRE(bad.witness.has_value());
  {
    // the witness pair satisfies a^k m = 0 with k >= t while a^t m != 0
    const auto& [m, k] = *bad.witness;
    const FiniteRing& R = m16.ring();
    CHECK(k >= 2);
    const ModId mid = m16.index_of(m);
    CHECK(m16.scalar_id(R.pow_id(2, k), mid) == 0);
    CHECK(m16.scalar_id(R.pow_id(2, 2), mid) != 0);
  }

  const PresentedModule m9 = reg(9);
  CHECK(is_at_reduced(m9, m9.ring().element_at(3), 2).reduced);
  CHECK_FALSE(is_at_reduced(m9, m9.ring().element_at(3), 1).reduced);

  CHECK(is_at_reduced(m16, m16.ring().zero(), 3).reduced);

  // oracle agreement across a grid
  for (std::uint64_t n : {4, 6, 8, 9, 12}) {
    const PresentedModule m = reg(n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint32_t t = 1; t <= 3; ++t)
        CHECK(is_at_reduced(m, m.ring().element_at(a), t).reduced ==
              oracle::at_reduced_brute(m, static_cast<ElemId>(a), t));
  }
}

TEST_CASE("universal reducedness") {
  const PresentedModule z4_over_z8 = z8_mod_4();
  CHECK(is_eps_reduced(z4_over_z8, 2).reduced);
  CHECK_FALSE(is_reduced(z4_over_z8).reduced);

  const PresentedModule m16 = reg(16);
  const EpsReducedReport er = is_eps_reduced(m16, 2);
  CHECK_FALSE(er.reduced);
  REQUIRE(er.witness.has_value());
  CHECK(m16.ring().index_of(*er.witness) == 2);

  const PresentedModule f4m = regular_module(ring_make({{2, {1, 1, 1}}}));
  CHECK(is_reduced(f4m).reduced);

  // implication square on a small grid
  for (std::uint64_t n : {4, 6, 8, 9, 12}) {
    const PresentedModule m = reg(n);
    for (std::uint32_t t = 1; t <= 3; ++t) {
      const bool red = is_reduced(m).reduced;
      const bool eps = is_eps_reduced(m, t).reduced;
      if (red) CHECK(eps);
      for (std::uint64_t a = 0; a < n; ++a) {
        const bool a1 = is_at_reduced(m, m.ring().element_at(a), 1).reduced;
        const bool at = is_at_reduced(m, m.ring().element_at(a), t).reduced;
        if (eps) CHECK(at);
        if (a1) CHECK(at);
      }
    }
  }
}

TEST_CASE("equivalence routes agree and report correctly") {
  const PresentedModule m16 = reg(16);
  const ReducednessReport all_false =
      verify_equivalences(m16, m16.ring().element_at(2), 2);
  CHECK(all_false.consistent);
  CHECK_FALSE(all_false.definitional);
  CHECK_FALSE(all_false.gln_zero);
  CHECK_FALSE(all_false.ann_stabilizes);
  CHECK_FALSE(all_false.hom_card_matches);
  CHECK_FALSE(all_false.hom_limit_matches);
  CHECK_FALSE(all_false.gamma_equals_ann_t);
  CHECK_FALSE(all_false.sequence_exact);

  const ReducednessReport all_true =
      verify_equivalences(m16, m16.ring().element_at(4), 2);
  CHECK(all_true.consistent);
  CHECK(all_true.definitional);
  CHECK(all_true.gln_zero);
  CHECK(all_true.sequence_exact);

  CHECK(verify_equivalences(reg(9), make_zn(9).element_at(3), 2).consistent);

  // stabilization never exceeds the module size
  for (std::uint64_t n : {6, 8, 16}) {
    const PresentedModule m = reg(n);
    for (std::uint64_t a = 0; a < n; ++a) {
      const auto rep = verify_equivalences(m, m.ring().element_at(a), 1);
      CHECK(rep.stabilization_index <= m.size());
    }
  }
}

TEST_CASE("evaluation recovers the torsion submodule at stabilization") {
  // Hom(R/(a)^k, M) evaluated at the generator coset exhausts the
  // a-torsion submodule once k reaches the annihilator chain's
  // stabilization index.
  const std::vector<FiniteRing> rings = {make_zn(8), make_zn(12),
                                         make_zn(16),
                                         ring_make({{4, {0, 0, 1}}})};
  for (const FiniteRing& R : rings) {
    const PresentedModule m = regular_module(R);
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      const RingElement ae = R.element_at(static_cast<ElemId>(a));
      const auto rep = verify_equivalences(m, ae, 1);
      const Ideal Ik =
          ideal_power(ideal_generate(R, {ae}), rep.stabilization_index);
      const PresentedModule src = cyclic_quotient(R, Ik);
      const ModId gen = src.index_of(src.project(ModVec{R.one()}));
      std::vector<ModId> evals;
      for (const ModuleHom& f : hom_set(src, m))
        evals.push_back(f.apply_id(gen));
      std::sort(evals.begin(), evals.end());
      CHECK(evals == gamma(m, ae).ids());
    }
  }
}

TEST_CASE("torsion over polynomial quotients and products") {
  // Z4[x]/(x^2): x is nilpotent, so its torsion fills the ring
  const FiniteRing q = ring_make({{4, {0, 0, 1}}});
  const PresentedModule mq = regular_module(q);
  const RingElement x = q.canonicalize({{0, 1}});
  CHECK(gamma(mq, x).size() == q.order());
  CHECK(gln(mq, x, 1).size() == 4);   // the multiples of x
  CHECK(gln(mq, x, 2).size() == 1);   // x^2 = 0
  CHECK(is_at_reduced(mq, x, 2).reduced);
  CHECK_FALSE(is_at_reduced(mq, x, 1).reduced);
  CHECK(verify_equivalences(mq, x, 1).consistent);
  CHECK(verify_equivalences(mq, x, 2).consistent);

  // Z4 x Z2: (2,0) squares to zero, so everything is (2,0)-torsion
  const FiniteRing p = ring_make({{4, {0, 1}}, {2, {0, 1}}});
  const PresentedModule mp = regular_module(p);
  const RingElement e = p.canonicalize({{2}, {0}});
  CHECK(gamma(mp, e).size() == p.order());
  CHECK(gln(mp, e, 1).size() == 2);  // {(0,0), (2,0)}
  CHECK(gln(mp, e, 2).size() == 1);
  CHECK(is_eps_reduced(mp, 2).reduced);
  CHECK_FALSE(is_reduced(mp).reduced);
}

TEST_CASE("nilradical stratification") {
  for (std::uint64_t n : {6, 8, 9, 12, 16, 24}) {
    const StratifyReport sr = stratify_audit(make_zn(n));
    CHECK(sr.matches);
  }
  CHECK(stratify_audit(ring_make({{2, {1, 1, 1}}})).matches);
  CHECK(stratify_audit(ring_make({{4, {0, 0, 1}}})).matches);
}

TEST_CASE("functor audit checks the radical package") {
  const PresentedModule m8 = reg(8);
  const FunctorAuditReport fr =
      functor_audit(m8, m8.ring().element_at(2), 2);
  CHECK(fr.all_ok());
  CHECK(fr.factor_strict);  // the submodule 2Z_8 witnesses non-left-exactness

  // the strictness instance, explicitly
  const Submodule n = submodule_generate(m8, {m8.element_at(2)});
  const Submodule gln_n = gln_of_submodule(n, m8.ring().element_at(2), 2);
  CHECK(gln_n.ids() == oracle::mids({0}));
  const auto gln_m = gln(m8, m8.ring().element_at(2), 2).ids();
  std::vector<ModId> meet;
  std::set_intersection(n.ids().begin(), n.ids().end(), gln_m.begin(),
                        gln_m.end(), std::back_inserter(meet));
  CHECK(meet == oracle::mids({0, 4}));

  // radical: gln of the quotient by gln vanishes
  const PresentedModule m16 = reg(16);
  const Submodule g16 = gln(m16, m16.ring().element_at(2), 2);
  const PresentedModule q = quotient_module(m16, g16);
  CHECK(gln(q, q.ring().element_at(2), 2).ids() == oracle::mids({0}));

  // composition: the exponent-t functor is the t-fold exponent-1 iterate
  std::vector<ModId> carrier = full(m16);
  carrier = gln_ids_within(m16, carrier, 2, 1);
  carrier = gln_ids_within(m16, carrier, 2, 1);
  CHECK(carrier == gln(m16, m16.ring().element_at(2), 2).ids());

  // audits pass across a small grid
  for (std::uint64_t n2 : {6, 9, 12}) {
    const PresentedModule m = reg(n2);
    for (std::uint64_t a = 0; a < n2; ++a)
      CHECK(functor_audit(m, m.ring().element_at(a), 2).all_ok());
  }
}

TEST_CASE("sweeps are observationally equal to standalone audits") {
  const PresentedModule m = reg(8);
  std::vector<ElemId> scalars = {0, 1, 2, 4};
  const std::vector<std::uint32_t> ts = {1, 2};
  const auto swept = functor_audit_sweep(m, scalars, ts);
  std::size_t idx = 0;
  for (ElemId a : scalars)
    for (std::uint32_t t : ts) {
      const FunctorAuditReport solo =
          functor_audit(m, m.ring().element_at(a), t);
      const FunctorAuditReport& batch = swept[idx++];
      CHECK(solo.all_ok() == batch.all_ok());
      CHECK(solo.factor_strict == batch.factor_strict);
    }

  for (ElemId a : scalars) {
    const auto swept_eq =
        verify_equivalences_sweep(m, m.ring().element_at(a), ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto solo = verify_equivalences(m, m.ring().element_at(a), ts[i]);
      CHECK(solo.consistent == swept_eq[i].consistent);
      CHECK(solo.definitional == swept_eq[i].definitional);
      CHECK(solo.gln_zero == swept_eq[i].gln_zero);
    }
  }
}

TEST_CASE("direct sum additivity") {
  const FiniteRing z8 = make_zn(8);
  const SumAuditReport sr =
      sum_audit({z8_mod_4(), regular_module(z8)}, z8.element_at(2), 2);
  CHECK(sr.additive);
  CHECK(sr.sum_gln_size == 2);  // {(0,0), (0,4)}

  CHECK(sum_audit({regular_module(z8)}, z8.element_at(2), 2).additive);

  const FiniteRing z2 = make_zn(2);
  CHECK(sum_audit({regular_module(z2), regular_module(z2)}, z2.one(), 1)
            .additive);
}
