#include "redmod/ideal.hpp"

#include <algorithm>

namespace redmod {

Ideal::Ideal(FiniteRing ring, std::vector<RingElement> generators,
             std::vector<ElemId> element_ids)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      ids_(std::move(element_ids)) {}

std::vector<RingElement> Ideal::elements() const {
  std::vector<RingElement> out;
  out.reserve(ids_.size());
  for (ElemId id : ids_) out.push_back(ring_.element_at(id));
  return out;
}

bool Ideal::contains_id(ElemId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Ideal::contains(const RingElement& e) const {
  return contains_id(ring_.index_of(e));
}

bool Ideal::operator==(const Ideal& other) const {
  return ring_ == other.ring_ && ids_ == other.ids_;
}

std::string Ideal::name() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += ring_.element_str(generators_[i]);
  }
  out += ")";
  return out;
}

namespace {

// Closure of a seed set under addition and multiplication by every ring
// element. Since r*(x+y) and products re-enter the set, one worklist pass
// suffices.
std::vector<ElemId> span_closure(const FiniteRing& R,
                                 const std::vector<ElemId>& seed) {
  const std::uint64_t n = R.order();
  std::vector<bool> in(n, false);
  std::vector<ElemId> work;
  in[0] = true;
  work.push_back(0);
  auto push = [&](ElemId x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  for (ElemId g : seed) push(g);
  for (std::size_t head = 0; head < work.size(); ++head) {
    const ElemId x = work[head];
    for (std::uint64_t r = 0; r < n; ++r)
      push(R.mul_id(static_cast<ElemId>(r), x));
    for (std::size_t other = 0; other < work.size(); ++other)
      push(R.add_id(x, work[other]));
  }
  std::vector<ElemId> out;
  for (std::uint64_t i = 0; i < n; ++i)
    if (in[i]) out.push_back(static_cast<ElemId>(i));
  return out;
}

}  // namespace

Ideal ideal_generate(const FiniteRing& R,
                     const std::vector<RingElement>& gens) {
  std::vector<ElemId> seed;
  for (const RingElement& g : gens) seed.push_back(R.index_of(g));
  return Ideal(R, gens, span_closure(R, seed));
}

Ideal annihilator_ideal(const FiniteRing& R, const RingElement& b) {
  const ElemId bid = R.index_of(b);
  std::vector<ElemId> ids;
  std::vector<RingElement> gens;
  for (std::uint64_t i = 0; i < R.order(); ++i)
    if (R.mul_id(static_cast<ElemId>(i), bid) == 0)
      ids.push_back(static_cast<ElemId>(i));
  for (ElemId id : ids)
    if (id != 0) gens.push_back(R.element_at(id));
  return Ideal(R, gens, std::move(ids));
}

Ideal ideal_power(const Ideal& I, std::uint32_t t) {
  if (t < 1) throw BadConfig("ideal power requires t >= 1");
  const FiniteRing& R = I.ring();
  if (t == 1) return I;
  // all t-fold products of generators, with repetition
  std::vector<ElemId> gen_ids;
  for (const RingElement& g : I.generators()) gen_ids.push_back(R.index_of(g));
  std::vector<ElemId> prods = {R.one_id()};
  for (std::uint32_t step = 0; step < t; ++step) {
    std::vector<ElemId> next;
    for (ElemId p : prods)
      for (ElemId g : gen_ids) next.push_back(R.mul_id(p, g));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    prods = std::move(next);
  }
  std::vector<RingElement> gens;
  for (ElemId p : prods) gens.push_back(R.element_at(p));
  return ideal_generate(R, gens);
}

SemiprimalityReport semiprimality(const Ideal& I) {
  const FiniteRing& R = I.ring();
  const std::uint64_t n = R.order();
  SemiprimalityReport out;

  out.semiprime = true;
  for (std::uint64_t i = 0; i < n; ++i) {
    const ElemId a = static_cast<ElemId>(i);
    if (I.contains_id(R.mul_id(a, a)) && !I.contains_id(a)) {
      out.semiprime = false;
      out.semiprime_witness = R.element_at(a);
      break;
    }
  }

  // all-powers loop; for commutative rings it must agree with the square
  // test
  bool radical = true;
  for (std::uint64_t i = 0; i < n && radical; ++i) {
    const ElemId a = static_cast<ElemId>(i);
    if (I.contains_id(a)) continue;
    ElemId p = a;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (I.contains_id(p)) {
        radical = false;
        break;
      }
      p = R.mul_id(p, a);
    }
  }
  if (radical != out.semiprime)
    throw std::logic_error("semiprime square test disagrees with power test");

  if (I.is_whole_ring()) {
    out.prime = false;
    return out;
  }
  out.prime = true;
  for (std::uint64_t i = 0; i < n && out.prime; ++i) {
    const ElemId a = static_cast<ElemId>(i);
    if (I.contains_id(a)) continue;
    for (std::uint64_t j = 0; j < n; ++j) {
      const ElemId b = static_cast<ElemId>(j);
      if (I.contains_id(b)) continue;
      if (I.contains_id(R.mul_id(a, b))) {
        out.prime = false;
        out.prime_witness = {R.element_at(a), R.element_at(b)};
        break;
      }
    }
  }
  return out;
}

Ideal nilradical(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  std::vector<ElemId> ids;
  for (std::uint64_t i = 0; i < n; ++i) {
    const ElemId a = static_cast<ElemId>(i);
    ElemId p = a;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (p == 0) {
        ids.push_back(a);
        break;
      }
      p = R.mul_id(p, a);
    }
  }
  std::vector<RingElement> gens;
  for (ElemId id : ids)
    if (id != 0) gens.push_back(R.element_at(id));
  Ideal out(R, gens, std::move(ids));
  return out;
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  if (n > max_enumerated_elements())
    throw OrderBudgetExceeded("ideal enumeration exceeds budget");

  // keyed by element-id set; value keeps the first generator tag found
  std::vector<std::vector<ElemId>> sets;
  std::vector<std::vector<RingElement>> tags;
  auto add_set = [&](std::vector<ElemId> ids, std::vector<RingElement> gens) {
    for (const auto& s : sets)
      if (s == ids) return false;
    sets.push_back(std::move(ids));
    tags.push_back(std::move(gens));
    return true;
  };

  for (std::uint64_t i = 0; i < n; ++i) {
    const RingElement g = R.element_at(static_cast<ElemId>(i));
    Ideal I = ideal_generate(R, i == 0 ? std::vector<RingElement>{}
                                       : std::vector<RingElement>{g});
    add_set(I.element_ids(), I.generators());
  }

  // pairwise sums to fixpoint; the sum of two materialized ideals is the
  // closure of their union
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = sets.size();
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b) {
        std::vector<ElemId> merged;
        std::set_union(sets[a].begin(), sets[a].end(), sets[b].begin(),
                       sets[b].end(), std::back_inserter(merged));
        if (merged == sets[a] || merged == sets[b]) continue;
        std::vector<ElemId> closed = [&] {
          std::vector<RingElement> gens;
          for (const RingElement& g : tags[a]) gens.push_back(g);
          for (const RingElement& g : tags[b]) gens.push_back(g);
          return ideal_generate(R, gens).element_ids();
        }();
        std::vector<RingElement> gens;
        for (const RingElement& g : tags[a]) gens.push_back(g);
        for (const RingElement& g : tags[b]) gens.push_back(g);
        if (add_set(std::move(closed), std::move(gens))) grew = true;
      }
  }

  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sets[a].size() != sets[b].size())
      return sets[a].size() < sets[b].size();
    return sets[a] < sets[b];
  });

  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (std::size_t i : order)
    out.emplace_back(R, std::move(tags[i]), std::move(sets[i]));
  return out;
}

}  // namespace redmod
