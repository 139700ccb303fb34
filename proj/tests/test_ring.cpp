#include <doctest.h>

#include "oracles.hpp"
#include "redmod/catalog.hpp"
#include "redmod/ring.hpp"

using namespace redmod;

namespace {

FiniteRing f4() { return ring_make({{2, {1, 1, 1}}}); }

std::vector<FiniteRing> small_rings() {
  return {make_zn(2),
          make_zn(4),
          make_zn(6),
          make_zn(8),
          make_zn(9),
          make_zn(12),
          f4(),
          ring_make({{4, {0, 0, 1}}}),
          ring_make({{2, {0, 1}}, {3, {0, 1}}}),
          ring_make({{4, {0, 1}}, {2, {0, 1}}})};
}

}  // namespace

TEST_CASE("ring construction and enumeration") {
  const FiniteRing z8 = make_zn(8);
  CHECK(z8.order() == 8);
  CHECK(z8.name() == "Z8");
  for (ElemId i = 0; i < 8; ++i)
    CHECK(z8.index_of(z8.element_at(i)) == i);

  const FiniteRing q = f4();
  CHECK(q.order() == 4);
  CHECK(q.name() == "Z2[x]/(x^2+x+1)");
  CHECK(oracle::zero_divisor_free(q));

  const FiniteRing prod = ring_make({{2, {0, 1}}, {3, {0, 1}}});
  CHECK(prod.order() == 6);
}

TEST_CASE("ring construction rejects bad presentations") {
  CHECK_THROWS_AS(ring_make({{1, {0, 1}}}), ModulusTooSmall);
  CHECK_THROWS_AS(ring_make({{4, {3}}}), NonMonicPolynomial);
  CHECK_THROWS_AS(ring_make({{4, {0, 2}}}), NonMonicPolynomial);
  CHECK_THROWS_AS(ring_make({{20011, {0, 1}}}), OrderBudgetExceeded);
}

TEST_CASE("arithmetic matches hand-reduced examples") {
  const FiniteRing z8 = make_zn(8);
  const RingElement five = z8.element_at(5), seven = z8.element_at(7);
  CHECK(z8.index_of(z8.add(five, seven)) == 4);
  CHECK(z8.index_of(z8.pow(z8.element_at(3), 2)) == 1);
  CHECK(z8.index_of(z8.pow(z8.element_at(3), 0)) == 1);

  const FiniteRing q = f4();
  // x * x reduces to x + 1 modulo x^2 + x + 1 over Z_2
  const RingElement x = q.canonicalize({{0, 1}});
  const RingElement xx = q.mul(x, x);
  CHECK(xx == q.canonicalize({{1, 1}}));
}

TEST_CASE("canonicalization is idempotent and reduces literals") {
  const FiniteRing z8 = make_zn(8);
  CHECK(z8.canonicalize({{13}}) == z8.element_at(5));
  CHECK(z8.canonicalize({{-3}}) == z8.element_at(5));
  const FiniteRing q = f4();
  // x^2 reduces to x + 1
  CHECK(q.canonicalize({{0, 0, 1}}) == q.canonicalize({{1, 1}}));
  for (const FiniteRing& R : small_rings())
    for (ElemId i = 0; i < R.order(); ++i) {
      const RingElement e = R.element_at(i);
      std::vector<std::vector<std::int64_t>> raw;
      std::size_t off = 0;
      for (const RingComponent& c : R.components()) {
        std::vector<std::int64_t> comp;
        for (std::size_t j = 0; j < c.degree(); ++j)
          comp.push_back(static_cast<std::int64_t>(e.coeffs()[off + j]));
        raw.push_back(comp);
        off += c.degree();
      }
      CHECK(R.canonicalize(raw) == e);
    }
}

TEST_CASE("ring axioms hold exhaustively on every catalog ring") {
  std::vector<FiniteRing> rings = small_rings();
  for (const CatalogRing& entry : build_catalog(CatalogConfig{}).rings)
    rings.push_back(entry.ring);
  for (const FiniteRing& R : rings) {
    REQUIRE(R.order() <= 64);
    const std::uint64_t n = R.order();
    CHECK(R.zero_id() != R.one_id());
    for (ElemId a = 0; a < n; ++a) {
      CHECK(R.add_id(a, R.zero_id()) == a);
      CHECK(R.mul_id(a, R.one_id()) == a);
      CHECK(R.add_id(a, R.neg_id(a)) == R.zero_id());
      for (ElemId b = 0; b < n; ++b) {
        CHECK(R.add_id(a, b) == R.add_id(b, a));
        CHECK(R.mul_id(a, b) == R.mul_id(b, a));
        for (ElemId c = 0; c < n; ++c) {
          CHECK(R.add_id(R.add_id(a, b), c) == R.add_id(a, R.add_id(b, c)));
          CHECK(R.mul_id(R.mul_id(a, b), c) == R.mul_id(a, R.mul_id(b, c)));
          CHECK(R.mul_id(a, R.add_id(b, c)) ==
                R.add_id(R.mul_id(a, b), R.mul_id(a, c)));
        }
      }
    }
  }
}

TEST_CASE("arithmetic beyond the lookup-table threshold") {
  // rings above 512 elements compute coefficientwise instead of from
  // tables; pin that path against plain modular arithmetic
  const FiniteRing big = make_zn(625);
  CHECK(big.order() == 625);
  for (std::uint64_t a = 0; a < 625; a += 37)
    for (std::uint64_t b = 0; b < 625; b += 41) {
      CHECK(big.add_id(static_cast<ElemId>(a), static_cast<ElemId>(b)) ==
            (a + b) % 625);
      CHECK(big.mul_id(static_cast<ElemId>(a), static_cast<ElemId>(b)) ==
            (a * b) % 625);
      CHECK(big.add_id(static_cast<ElemId>(a),
                       big.neg_id(static_cast<ElemId>(a))) == 0);
    }
  CHECK(big.pow_id(3, 5) == 243);
  CHECK(big.pow_id(5, 4) == 0);

  // polynomial reduction on a degree-6 quotient of order 729:
  // x^3 * x^3 = x^6 = -(1 + x) = 2 + 2x over Z_3
  const FiniteRing q = ring_make({{3, {1, 1, 0, 0, 0, 0, 1}}});
  CHECK(q.order() == 729);
  const RingElement x3 = q.canonicalize({{0, 0, 0, 1}});
  CHECK(q.mul(x3, x3) == q.canonicalize({{2, 2}}));
  // sampled associativity and distributivity off the table path
  for (ElemId a = 1; a < q.order(); a = static_cast<ElemId>(a * 5 + 3))
    for (ElemId b = 2; b < q.order(); b = static_cast<ElemId>(b * 7 + 11)) {
      const ElemId c = q.add_id(a, b);
      CHECK(q.mul_id(a, q.add_id(b, c)) ==
            q.add_id(q.mul_id(a, b), q.mul_id(a, c)));
      CHECK(q.mul_id(q.mul_id(a, b), c) == q.mul_id(a, q.mul_id(b, c)));
    }
}

TEST_CASE("classify agrees with exhaustive scans") {
  const FiniteRing z8 = make_zn(8);
  const Classification c8 = classify(z8);
  std::vector<ElemId> units, nil;
  for (const RingElement& u : c8.units) units.push_back(z8.index_of(u));
  for (const RingElement& e : c8.nilpotents) nil.push_back(z8.index_of(e));
  CHECK(units == oracle::ids({1, 3, 5, 7}));
  CHECK(nil == oracle::ids({0, 2, 4, 6}));
  CHECK(units == oracle::units_by_scan(z8));
  CHECK(nil == oracle::nilpotents_by_power(z8));
  CHECK_FALSE(c8.is_domain);

  const Classification cf4 = classify(f4());
  CHECK(cf4.is_field);
  CHECK(cf4.units.size() == 3);
  CHECK(cf4.nilpotents.size() == 1);

  const Classification c6 = classify(make_zn(6));
  CHECK_FALSE(c6.is_domain);
  CHECK(c6.nilpotents.size() == 1);

  for (const FiniteRing& R : small_rings()) {
    const Classification c = classify(R);
    CHECK(c.is_domain == c.is_field);
    std::vector<RingElement> expected;
    for (ElemId id : oracle::units_by_scan(R))
      expected.push_back(R.element_at(id));
    CHECK(c.units == expected);
  }
}

TEST_CASE("element validation catches foreign elements") {
  const FiniteRing z8 = make_zn(8);
  const FiniteRing z6 = make_zn(6);
  const RingElement seven = z8.element_at(7);
  CHECK_THROWS_AS(z6.add(seven, z6.element_at(1)), RingMismatch);
  const FiniteRing q = f4();
  CHECK_THROWS_AS(z8.mul(q.element_at(2), q.element_at(2)), RingMismatch);
}

TEST_CASE("ring homomorphisms: construction and verification") {
  const FiniteRing z8 = make_zn(8);
  const FiniteRing z4 = make_zn(4);
  const RingHom f =
      ring_hom_make(z8, z4, {{z4.one(), z4.zero()}});
  CHECK(f.surjective());
  CHECK(z4.index_of(f.apply(z8.element_at(6))) == 2);

  const RingHom id6 = identity_hom(make_zn(6));
  CHECK(id6.surjective());

  // 1 -> 1 cannot define a map Z_4 -> Z_8: additive orders obstruct
  CHECK_THROWS_AS(ring_hom_make(z4, z8, {{z8.one(), z8.zero()}}),
                  NotAHomomorphism);
}

TEST_CASE("hom enumeration finds the CRT isomorphism") {
  const FiniteRing z6 = make_zn(6);
  const FiniteRing prod = ring_make({{2, {0, 1}}, {3, {0, 1}}});
  const auto homs = enumerate_ring_homs(z6, prod);
  bool found_bijective = false;
  for (const RingHom& f : homs)
    if (f.surjective()) found_bijective = true;
  CHECK(found_bijective);
  // the identity is always enumerated
  CHECK(!enumerate_ring_homs(z6, z6).empty());
}
