#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "redmod/ring.hpp"

namespace redmod {

/// An ideal materialized as its full, sorted element set, tagged with the
/// generator list that produced it. Equality is set equality of elements.
class Ideal {
 public:
  Ideal() = default;
  Ideal(FiniteRing ring, std::vector<RingElement> generators,
        std::vector<ElemId> element_ids);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return generators_; }
  const std::vector<ElemId>& element_ids() const { return ids_; }
  std::vector<RingElement> elements() const;
  std::size_t size() const { return ids_.size(); }

  bool contains_id(ElemId id) const;
  bool contains(const RingElement& e) const;
  bool is_zero() const { return ids_.size() == 1; }
  bool is_whole_ring() const { return ids_.size() == ring_.order(); }

  bool operator==(const Ideal& other) const;
  std::string name() const;  // "(g1,g2,...)" from the generator tags

 private:
  FiniteRing ring_;
  std::vector<RingElement> generators_;
  std::vector<ElemId> ids_;  // sorted
};

/// Smallest additively closed, multiplication-absorbing subset containing
/// the generators, computed by closure to fixpoint.
Ideal ideal_generate(const FiniteRing& R, const std::vector<RingElement>& gens);

/// {r in R : r*b = 0}.
Ideal annihilator_ideal(const FiniteRing& R, const RingElement& b);

/// Ideal generated by all t-fold products of the generators of I.
Ideal ideal_power(const Ideal& I, std::uint32_t t);

struct SemiprimalityReport {
  bool semiprime = false;
  bool prime = false;
  std::optional<RingElement> semiprime_witness;                  // a: a^2 in I, a not
  std::optional<std::pair<RingElement, RingElement>> prime_witness;
};

/// semiprime: a^2 in I implies a in I; cross-checked against the all-powers
/// loop, which must agree. prime: proper and ab in I implies a or b in I.
/// The whole ring is reported semiprime and not prime.
SemiprimalityReport semiprimality(const Ideal& I);

/// The ideal of all nilpotent elements.
Ideal nilradical(const FiniteRing& R);

/// The complete ideal lattice: fixpoint of pairwise sums starting from all
/// principal ideals. Deterministic order: by size, then elementwise.
std::vector<Ideal> enumerate_ideals(const FiniteRing& R);

}  // namespace redmod
