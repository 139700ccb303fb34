#include "redmod/extensions.hpp"

#include <algorithm>

#include "redmod/torsion.hpp"

namespace redmod {

MultSet::MultSet(FiniteRing ring, std::vector<RingElement> generators,
                 std::vector<ElemId> ids)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      ids_(std::move(ids)) {}

bool MultSet::contains_id(ElemId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

MultSet mult_set_closure(const FiniteRing& R,
                         const std::vector<RingElement>& gens) {
  std::vector<bool> in(R.order(), false);
  std::vector<ElemId> work;
  in[R.one_id()] = true;
  work.push_back(R.one_id());
  auto push = [&](ElemId x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  for (const RingElement& g : gens) push(R.index_of(g));
  for (std::size_t head = 0; head < work.size(); ++head)
    for (std::size_t other = 0; other <= head; ++other)
      push(R.mul_id(work[head], work[other]));
  std::vector<ElemId> ids;
  for (std::uint64_t i = 0; i < R.order(); ++i)
    if (in[i]) ids.push_back(static_cast<ElemId>(i));
  return MultSet(R, gens, std::move(ids));
}

namespace {

// Union-find used to materialize the fraction equivalence classes.
struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the least pair index as root
    parent[b] = a;
  }
};

constexpr std::uint64_t kAxiomVerifyLimit = 160;

}  // namespace

struct LocalizedRing::Impl {
  FiniteRing base;
  MultSet S;
  std::uint32_t classes = 0;
  std::vector<std::uint32_t> pair_class;  // (r * |S| + s_pos) -> class
  std::vector<std::uint32_t> class_pair;  // class -> least pair index
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t zero_class = 0;
  std::uint32_t one_class = 0;
  bool canonical_bijective = false;

  std::uint32_t pair_index(ElemId r, std::size_t s_pos) const {
    return static_cast<std::uint32_t>(r * S.size() + s_pos);
  }
};

const FiniteRing& LocalizedRing::base() const { return impl_->base; }
const MultSet& LocalizedRing::mult_set() const { return impl_->S; }
std::size_t LocalizedRing::class_count() const { return impl_->classes; }
std::uint32_t LocalizedRing::zero_class() const { return impl_->zero_class; }
std::uint32_t LocalizedRing::one_class() const { return impl_->one_class; }

std::uint32_t LocalizedRing::add(std::uint32_t x, std::uint32_t y) const {
  return impl_->add_table[x * impl_->classes + y];
}

std::uint32_t LocalizedRing::mul(std::uint32_t x, std::uint32_t y) const {
  return impl_->mul_table[x * impl_->classes + y];
}

std::uint32_t LocalizedRing::class_of_pair(ElemId r, ElemId s) const {
  const auto& ids = impl_->S.ids();
  const auto it = std::lower_bound(ids.begin(), ids.end(), s);
  if (it == ids.end() || *it != s)
    throw BadConfig("denominator is not in the multiplicative set");
  return impl_->pair_class[impl_->pair_index(
      r, static_cast<std::size_t>(it - ids.begin()))];
}

std::uint32_t LocalizedRing::canonical_map(ElemId r) const {
  return class_of_pair(r, impl_->base.one_id());
}

bool LocalizedRing::canonical_map_bijective() const {
  return impl_->canonical_bijective;
}

std::pair<RingElement, RingElement> LocalizedRing::class_rep(
    std::uint32_t c) const {
  const std::uint32_t p = impl_->class_pair[c];
  return {impl_->base.element_at(static_cast<ElemId>(p / impl_->S.size())),
          impl_->base.element_at(impl_->S.ids()[p % impl_->S.size()])};
}

std::string LocalizedRing::class_str(std::uint32_t c) const {
  const auto [r, s] = class_rep(c);
  return impl_->base.element_str(r) + "/" + impl_->base.element_str(s);
}

LocalizedRing localize(const FiniteRing& R, const MultSet& S) {
  if (S.ring() != R)
    throw RingMismatch("multiplicative set over a different ring");
  const std::uint64_t pairs = R.order() * S.size();
  if (pairs > max_enumerated_elements())
    throw OrderBudgetExceeded("localization pair space exceeds budget");

  auto impl = std::make_shared<LocalizedRing::Impl>();
  impl->base = R;
  impl->S = S;
  const std::size_t sn = S.size();
  const auto& sids = S.ids();

  // (r,s) ~ (r',s')  iff  u(rs' - r's) = 0 for some u in S
  auto related = [&](std::uint32_t p, std::uint32_t q) {
    const ElemId r1 = static_cast<ElemId>(p / sn), s1 = sids[p % sn];
    const ElemId r2 = static_cast<ElemId>(q / sn), s2 = sids[q % sn];
    const ElemId diff =
        R.add_id(R.mul_id(r1, s2), R.neg_id(R.mul_id(r2, s1)));
    for (ElemId u : sids)
      if (R.mul_id(u, diff) == 0) return true;
    return false;
  };

  UnionFind uf(pairs);
  for (std::uint32_t p = 0; p < pairs; ++p)
    for (std::uint32_t q = p + 1; q < pairs; ++q)
      if (uf.find(p) != uf.find(q) && related(p, q)) uf.unite(p, q);

  impl->pair_class.assign(pairs, 0);
  std::vector<std::uint32_t> root_to_class(pairs, static_cast<std::uint32_t>(-1));
  for (std::uint32_t p = 0; p < pairs; ++p) {
    const std::uint32_t root = uf.find(p);
    if (root_to_class[root] == static_cast<std::uint32_t>(-1)) {
      root_to_class[root] = impl->classes++;
      impl->class_pair.push_back(root);
    }
    impl->pair_class[p] = root_to_class[root];
  }

  const std::size_t one_pos = static_cast<std::size_t>(
      std::lower_bound(sids.begin(), sids.end(), R.one_id()) - sids.begin());
  impl->zero_class = impl->pair_class[impl->pair_index(0, one_pos)];
  impl->one_class = impl->pair_class[impl->pair_index(R.one_id(), one_pos)];

  // class arithmetic: well-definedness across all representative pairs
  const std::uint32_t C = impl->classes;
  if (C > kAxiomVerifyLimit)
    throw OrderBudgetExceeded("localization verification budget exceeded");
  impl->add_table.assign(C * C, static_cast<std::uint32_t>(-1));
  impl->mul_table.assign(C * C, static_cast<std::uint32_t>(-1));
  for (std::uint32_t p = 0; p < pairs; ++p)
    for (std::uint32_t q = 0; q < pairs; ++q) {
      const ElemId r1 = static_cast<ElemId>(p / sn), s1 = sids[p % sn];
      const ElemId r2 = static_cast<ElemId>(q / sn), s2 = sids[q % sn];
      const ElemId ssum = R.mul_id(s1, s2);
      const std::size_t spos = static_cast<std::size_t>(
          std::lower_bound(sids.begin(), sids.end(), ssum) - sids.begin());
      const ElemId num = R.add_id(R.mul_id(r1, s2), R.mul_id(r2, s1));
      const std::uint32_t sum_class =
          impl->pair_class[impl->pair_index(num, spos)];
      const std::uint32_t prod_class =
          impl->pair_class[impl->pair_index(R.mul_id(r1, r2), spos)];
      const std::uint32_t cx = impl->pair_class[p], cy = impl->pair_class[q];
      std::uint32_t& acell = impl->add_table[cx * C + cy];
      std::uint32_t& mcell = impl->mul_table[cx * C + cy];
      if (acell == static_cast<std::uint32_t>(-1)) acell = sum_class;
      else if (acell != sum_class)
        throw std::logic_error("localized addition is not well-defined");
      if (mcell == static_cast<std::uint32_t>(-1)) mcell = prod_class;
      else if (mcell != prod_class)
        throw std::logic_error("localized multiplication is not well-defined");
    }

  // ring axioms on the classes
  auto A = [&](std::uint32_t x, std::uint32_t y) {
    return impl->add_table[x * C + y];
  };
  auto Mu = [&](std::uint32_t x, std::uint32_t y) {
    return impl->mul_table[x * C + y];
  };
  for (std::uint32_t x = 0; x < C; ++x) {
    if (A(x, impl->zero_class) != x || Mu(x, impl->one_class) != x)
      throw std::logic_error("localized identity laws fail");
    for (std::uint32_t y = 0; y < C; ++y) {
      if (A(x, y) != A(y, x) || Mu(x, y) != Mu(y, x))
        throw std::logic_error("localized commutativity fails");
      for (std::uint32_t z = 0; z < C; ++z) {
        if (A(A(x, y), z) != A(x, A(y, z)))
          throw std::logic_error("localized addition is not associative");
        if (Mu(Mu(x, y), z) != Mu(x, Mu(y, z)))
          throw std::logic_error("localized multiplication is not associative");
        if (Mu(x, A(y, z)) != A(Mu(x, y), Mu(x, z)))
          throw std::logic_error("localized distributivity fails");
      }
    }
  }

  // canonical map r -> r/1 must be a ring homomorphism
  {
    auto can = [&](ElemId r) {
      return impl->pair_class[impl->pair_index(r, one_pos)];
    };
    if (can(0) != impl->zero_class || can(R.one_id()) != impl->one_class)
      throw std::logic_error("canonical map misses the identities");
    std::vector<bool> hit(C, false);
    std::uint32_t hits = 0;
    for (std::uint64_t x = 0; x < R.order(); ++x) {
      const ElemId xe = static_cast<ElemId>(x);
      if (!hit[can(xe)]) {
        hit[can(xe)] = true;
        ++hits;
      }
      for (std::uint64_t y = 0; y < R.order(); ++y) {
        const ElemId ye = static_cast<ElemId>(y);
        if (can(R.add_id(xe, ye)) != A(can(xe), can(ye)) ||
            can(R.mul_id(xe, ye)) != Mu(can(xe), can(ye)))
          throw std::logic_error("canonical map is not a homomorphism");
      }
    }
    impl->canonical_bijective = hits == C && C == R.order();
  }

  return LocalizedRing(std::move(impl));
}

struct LocalizedModule::Impl {
  PresentedModule base;
  LocalizedRing ring;
  std::uint32_t classes = 0;
  std::vector<std::uint32_t> pair_class;  // (m * |S| + s_pos) -> class
  std::vector<std::uint32_t> class_pair;
  std::vector<std::uint32_t> add_table;   // classes x classes
  std::vector<std::uint32_t> act_table;   // ring classes x classes
  std::uint32_t zero_class = 0;

  std::uint32_t pair_index(ModId m, std::size_t s_pos) const {
    return static_cast<std::uint32_t>(m * ring.mult_set().size() + s_pos);
  }
};

const PresentedModule& LocalizedModule::base() const { return impl_->base; }
const LocalizedRing& LocalizedModule::ring() const { return impl_->ring; }
std::size_t LocalizedModule::class_count() const { return impl_->classes; }
std::uint32_t LocalizedModule::zero_class() const { return impl_->zero_class; }

std::uint32_t LocalizedModule::add(std::uint32_t x, std::uint32_t y) const {
  return impl_->add_table[x * impl_->classes + y];
}

std::uint32_t LocalizedModule::act(std::uint32_t ring_class,
                                   std::uint32_t x) const {
  return impl_->act_table[ring_class * impl_->classes + x];
}

std::uint32_t LocalizedModule::class_of_pair(ModId m, ElemId s) const {
  const auto& ids = impl_->ring.mult_set().ids();
  const auto it = std::lower_bound(ids.begin(), ids.end(), s);
  if (it == ids.end() || *it != s)
    throw BadConfig("denominator is not in the multiplicative set");
  return impl_->pair_class[impl_->pair_index(
      m, static_cast<std::size_t>(it - ids.begin()))];
}

std::uint32_t LocalizedModule::canonical_map(ModId m) const {
  return class_of_pair(m, impl_->base.ring().one_id());
}

std::string LocalizedModule::class_str(std::uint32_t c) const {
  const std::uint32_t p = impl_->class_pair[c];
  const std::size_t sn = impl_->ring.mult_set().size();
  return impl_->base.element_str(static_cast<ModId>(p / sn)) + "/" +
         impl_->base.ring().element_str(impl_->ring.mult_set().ids()[p % sn]);
}

LocalizedModule localize_module(const PresentedModule& M, const MultSet& S) {
  if (S.ring() != M.ring())
    throw RingMismatch("multiplicative set over a different ring");
  const FiniteRing& R = M.ring();
  const LocalizedRing LR = localize(R, S);
  const std::uint64_t pairs = M.size() * S.size();
  if (pairs > max_enumerated_elements())
    throw OrderBudgetExceeded("localization pair space exceeds budget");

  auto impl = std::make_shared<LocalizedModule::Impl>();
  impl->base = M;
  impl->ring = LR;
  const std::size_t sn = S.size();
  const auto& sids = S.ids();

  auto related = [&](std::uint32_t p, std::uint32_t q) {
    const ModId m1 = static_cast<ModId>(p / sn);
    const ElemId s1 = sids[p % sn];
    const ModId m2 = static_cast<ModId>(q / sn);
    const ElemId s2 = sids[q % sn];
    const ModId diff =
        M.add_ids(M.scalar_id(s2, m1), M.neg_id(M.scalar_id(s1, m2)));
    for (ElemId u : sids)
      if (M.scalar_id(u, diff) == 0) return true;
    return false;
  };

  UnionFind uf(pairs);
  for (std::uint32_t p = 0; p < pairs; ++p)
    for (std::uint32_t q = p + 1; q < pairs; ++q)
      if (uf.find(p) != uf.find(q) && related(p, q)) uf.unite(p, q);

  impl->pair_class.assign(pairs, 0);
  std::vector<std::uint32_t> root_to_class(pairs,
                                           static_cast<std::uint32_t>(-1));
  for (std::uint32_t p = 0; p < pairs; ++p) {
    const std::uint32_t root = uf.find(p);
    if (root_to_class[root] == static_cast<std::uint32_t>(-1)) {
      root_to_class[root] = impl->classes++;
      impl->class_pair.push_back(root);
    }
    impl->pair_class[p] = root_to_class[root];
  }

  const std::size_t one_pos = static_cast<std::size_t>(
      std::lower_bound(sids.begin(), sids.end(), R.one_id()) - sids.begin());
  impl->zero_class = impl->pair_class[impl->pair_index(0, one_pos)];

  const std::uint32_t C = impl->classes;
  const std::uint32_t CR = static_cast<std::uint32_t>(LR.class_count());
  if (C > kAxiomVerifyLimit)
    throw OrderBudgetExceeded("localization verification budget exceeded");

  // addition, well-defined across representatives
  impl->add_table.assign(C * C, static_cast<std::uint32_t>(-1));
  for (std::uint32_t p = 0; p < pairs; ++p)
    for (std::uint32_t q = 0; q < pairs; ++q) {
      const ModId m1 = static_cast<ModId>(p / sn);
      const ElemId s1 = sids[p % sn];
      const ModId m2 = static_cast<ModId>(q / sn);
      const ElemId s2 = sids[q % sn];
      const ElemId ssum = R.mul_id(s1, s2);
      const std::size_t spos = static_cast<std::size_t>(
          std::lower_bound(sids.begin(), sids.end(), ssum) - sids.begin());
      const ModId num =
          M.add_ids(M.scalar_id(s2, m1), M.scalar_id(s1, m2));
      const std::uint32_t sum_class =
          impl->pair_class[impl->pair_index(num, spos)];
      std::uint32_t& cell =
          impl->add_table[impl->pair_class[p] * C + impl->pair_class[q]];
      if (cell == static_cast<std::uint32_t>(-1)) cell = sum_class;
      else if (cell != sum_class)
        throw std::logic_error("localized module addition not well-defined");
    }

  // scalar action by ring classes, well-defined across both representative
  // choices
  impl->act_table.assign(static_cast<std::size_t>(CR) * C,
                         static_cast<std::uint32_t>(-1));
  const std::uint64_t ring_pairs = R.order() * sn;
  for (std::uint64_t rp = 0; rp < ring_pairs; ++rp) {
    const ElemId r = static_cast<ElemId>(rp / sn);
    const ElemId rs = sids[rp % sn];
    const std::uint32_t rc = LR.class_of_pair(r, rs);
    for (std::uint32_t q = 0; q < pairs; ++q) {
      const ModId m = static_cast<ModId>(q / sn);
      const ElemId s = sids[q % sn];
      const ElemId sprod = R.mul_id(rs, s);
      const std::size_t spos = static_cast<std::size_t>(
          std::lower_bound(sids.begin(), sids.end(), sprod) - sids.begin());
      const std::uint32_t result =
          impl->pair_class[impl->pair_index(M.scalar_id(r, m), spos)];
      std::uint32_t& cell =
          impl->act_table[static_cast<std::size_t>(rc) * C +
                          impl->pair_class[q]];
      if (cell == static_cast<std::uint32_t>(-1)) cell = result;
      else if (cell != result)
        throw std::logic_error("localized scalar action not well-defined");
    }
  }

  // module axioms on classes
  auto A = [&](std::uint32_t x, std::uint32_t y) {
    return impl->add_table[x * C + y];
  };
  auto Act = [&](std::uint32_t r, std::uint32_t x) {
    return impl->act_table[static_cast<std::size_t>(r) * C + x];
  };
  for (std::uint32_t x = 0; x < C; ++x) {
    if (A(x, impl->zero_class) != x || Act(LR.one_class(), x) != x)
      throw std::logic_error("localized module identity laws fail");
    for (std::uint32_t y = 0; y < C; ++y) {
      if (A(x, y) != A(y, x))
        throw std::logic_error("localized module addition not commutative");
      for (std::uint32_t z = 0; z < C; ++z)
        if (A(A(x, y), z) != A(x, A(y, z)))
          throw std::logic_error("localized module addition not associative");
    }
  }
  for (std::uint32_t r = 0; r < CR; ++r)
    for (std::uint32_t x = 0; x < C; ++x) {
      for (std::uint32_t y = 0; y < C; ++y)
        if (Act(r, A(x, y)) != A(Act(r, x), Act(r, y)))
          throw std::logic_error("localized action not additive");
      for (std::uint32_t r2 = 0; r2 < CR; ++r2) {
        if (Act(LR.mul(r, r2), x) != Act(r, Act(r2, x)))
          throw std::logic_error("localized action not associative");
        if (Act(LR.add(r, r2), x) != A(Act(r, x), Act(r2, x)))
          throw std::logic_error("localized action not distributive");
      }
    }

  return LocalizedModule(std::move(impl));
}

namespace {

// Reducedness on class tables: the same chain-plus-definitional discipline
// as the presented-module path.
bool at_reduced_classes(std::uint32_t n_classes, std::uint32_t zero,
                        const std::vector<std::uint32_t>& act_by_a,
                        std::uint32_t t) {
  // ascending annihilator chain
  std::vector<std::vector<std::uint32_t>> chain;
  std::vector<bool> in_prev(n_classes, false);
  std::vector<std::uint32_t> prev;
  while (true) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t m = 0; m < n_classes; ++m) {
      const std::uint32_t am = act_by_a[m];
      if (am == zero || in_prev[am]) next.push_back(m);
    }
    if (next == prev) break;
    for (std::uint32_t m : next) in_prev[m] = true;
    prev = std::move(next);
    chain.push_back(prev);
    if (chain.size() > n_classes)
      throw std::logic_error("localized chain failed to stabilize");
  }
  if (chain.empty()) chain.push_back({zero});

  // a^t applied to the torsion classes
  bool gln_zero = true;
  for (std::uint32_t m : chain.back()) {
    std::uint32_t x = m;
    for (std::uint32_t k = 0; k < t; ++k) x = act_by_a[x];
    if (x != zero) {
      gln_zero = false;
      break;
    }
  }
  // definitional cross-check
  const std::uint32_t k_max =
      std::max<std::uint32_t>(static_cast<std::uint32_t>(chain.size()), t);
  bool definitional = true;
  for (std::uint32_t m = 0; m < n_classes && definitional; ++m) {
    std::uint32_t x = m;
    std::uint32_t at_m = m;
    for (std::uint32_t k = 0; k < t; ++k) at_m = act_by_a[at_m];
    if (at_m == zero) continue;
    for (std::uint32_t k = 1; k <= k_max; ++k) {
      x = act_by_a[x];
      if (x == zero && k >= t) {
        definitional = false;
        break;
      }
    }
  }
  if (gln_zero != definitional)
    throw std::logic_error("localized routes disagree");
  return gln_zero;
}

}  // namespace

bool localized_eps_reduced(const LocalizedModule& L, std::uint32_t t) {
  if (t < 1) throw BadConfig("reducedness requires t >= 1");
  const std::uint32_t C = static_cast<std::uint32_t>(L.class_count());
  const std::uint32_t CR =
      static_cast<std::uint32_t>(L.ring().class_count());
  for (std::uint32_t r = 0; r < CR; ++r) {
    std::vector<std::uint32_t> act(C);
    for (std::uint32_t m = 0; m < C; ++m) act[m] = L.act(r, m);
    if (!at_reduced_classes(C, L.zero_class(), act, t)) return false;
  }
  return true;
}

LocalizationAudit localization_audit(const PresentedModule& M,
                                     const MultSet& S, std::uint32_t t) {
  LocalizationAudit out;
  out.base_eps = is_eps_reduced(M, t).reduced;
  const LocalizedModule L = localize_module(M, S);
  out.localized_eps = localized_eps_reduced(L, t);
  out.biconditional = out.base_eps == out.localized_eps;
  if (!out.biconditional) {
    // the embedding m -> m/1 must have failed: some s in S kills a nonzero
    // element of M
    std::string obstruction = "no obstruction found";
    for (ElemId s : S.ids()) {
      for (std::uint64_t m = 1; m < M.size(); ++m)
        if (M.scalar_id(s, static_cast<ModId>(m)) == 0) {
          obstruction = "s = " + M.ring().element_str(s) +
                        " annihilates the nonzero element " +
                        M.element_str(static_cast<ModId>(m)) +
                        ", so M does not embed into its localization";
          break;
        }
      if (obstruction != "no obstruction found") break;
    }
    out.note = "biconditional failed: " + obstruction;
  }
  return out;
}

PresentedModule restrict_scalars(const RingHom& f, const PresentedModule& M) {
  if (!(f.target() == M.ring()))
    throw RingMismatch("module is not over the hom's target ring");
  const FiniteRing& R = f.source();

  // image scalars of the source action
  std::vector<ElemId> image;
  for (std::uint64_t a = 0; a < R.order(); ++a)
    image.push_back(f.apply_id(static_cast<ElemId>(a)));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  // greedy generators: closure under addition and image scalars
  std::vector<ModId> gens;
  std::vector<bool> in_span(M.size(), false);
  in_span[0] = true;
  std::uint64_t covered = 1;
  auto close = [&](ModId seed) {
    std::vector<ModId> work = {seed};
    if (!in_span[seed]) {
      in_span[seed] = true;
      ++covered;
    }
    for (std::size_t head = 0; head < work.size(); ++head) {
      const ModId x = work[head];
      auto push = [&](ModId y) {
        if (!in_span[y]) {
          in_span[y] = true;
          ++covered;
          work.push_back(y);
        }
      };
      for (ElemId s : image) push(M.scalar_id(s, x));
      for (std::uint64_t m = 0; m < M.size(); ++m)
        if (in_span[m]) push(M.add_ids(x, static_cast<ModId>(m)));
    }
  };
  for (std::uint64_t m = 0; m < M.size() && covered < M.size(); ++m) {
    if (in_span[m]) continue;
    gens.push_back(static_cast<ModId>(m));
    close(static_cast<ModId>(m));
  }

  const std::size_t g = gens.size();
  const std::uint64_t cap = max_enumerated_elements();
  std::uint64_t raw = 1;
  for (std::size_t i = 0; i < g; ++i) {
    if (raw > cap / R.order() + 1)
      throw OrderBudgetExceeded("scalar restriction kernel exceeds budget");
    raw *= R.order();
  }
  if (raw > cap)
    throw OrderBudgetExceeded("scalar restriction kernel exceeds budget");

  // kernel of R^g -> M, v -> sum f(v_i) gens_i
  std::vector<ModVec> relations;
  std::vector<ElemId> coords(g);
  for (std::uint64_t v = 0; v < raw; ++v) {
    std::uint64_t x = v;
    for (std::size_t i = g; i-- > 0;) {
      coords[i] = static_cast<ElemId>(x % R.order());
      x /= R.order();
    }
    ModId acc = 0;
    for (std::size_t i = 0; i < g; ++i)
      acc = M.add_ids(acc, M.scalar_id(f.apply_id(coords[i]), gens[i]));
    if (acc == 0) {
      ModVec rel;
      for (std::size_t i = 0; i < g; ++i) rel.push_back(R.element_at(coords[i]));
      relations.push_back(std::move(rel));
    }
  }

  PresentedModule out = module_present(R, g, std::move(relations));
  if (out.size() != M.size())
    throw std::logic_error("scalar restriction changed the element count");
  return out;
}

ScalarAudit scalar_audit(const RingHom& f, const PresentedModule& M,
                         std::uint32_t t) {
  if (t < 1) throw BadConfig("scalar audit requires t >= 1");
  ScalarAudit out;
  out.surjective = f.surjective();
  out.target_eps = is_eps_reduced(M, t).reduced;

  // the source action runs through f, so each source scalar a acts as f(a)
  std::vector<ModId> carrier(M.size());
  for (std::uint64_t i = 0; i < M.size(); ++i)
    carrier[i] = static_cast<ModId>(i);
  bool restricted = true;
  for (std::uint64_t a = 0; a < f.source().order() && restricted; ++a)
    restricted =
        at_reduced_within(M, carrier, f.apply_id(static_cast<ElemId>(a)), t);
  out.restricted_eps = restricted;

  // the re-presented restriction must agree with the carrier view
  const PresentedModule restricted_mod = restrict_scalars(f, M);
  if (is_eps_reduced(restricted_mod, t).reduced != restricted)
    throw std::logic_error("restriction presentation disagrees with action");

  out.restriction_ok = !(out.target_eps && !out.restricted_eps);
  if (out.surjective)
    out.extension_ok = !(out.restricted_eps && !out.target_eps);
  return out;
}

PolyGlnReport poly_gln_check(const FiniteRing& R, const RingElement& a,
                             std::uint32_t t, std::uint32_t max_degree) {
  if (t < 1) throw BadConfig("poly check requires t >= 1");
  PolyGlnReport out;
  const ElemId aid = R.index_of(a);
  const std::uint64_t n = R.order();
  const std::uint32_t terms = max_degree + 1;

  const std::uint64_t cap = max_enumerated_elements();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < terms; ++i) {
    if (total > cap / n + 1)
      throw OrderBudgetExceeded("polynomial enumeration exceeds budget");
    total *= n;
  }
  if (total > cap)
    throw OrderBudgetExceeded("polynomial enumeration exceeds budget");

  const PresentedModule RR = regular_module(R);
  // per-element torsion by the definitional loop, exponent up to |R|
  std::vector<bool> torsion(n, false);
  for (std::uint64_t e = 0; e < n; ++e) {
    ElemId x = static_cast<ElemId>(e);
    for (std::uint64_t k = 0; k <= n; ++k) {
      if (x == 0) {
        torsion[e] = true;
        break;
      }
      x = R.mul_id(aid, x);
    }
  }

  // left side: a^t applied to every torsion polynomial of degree <= D
  const ElemId at = R.pow_id(aid, t);
  std::vector<ElemId> torsion_ids;
  for (std::uint64_t e = 0; e < n; ++e)
    if (torsion[e]) torsion_ids.push_back(static_cast<ElemId>(e));
  std::vector<bool> lhs(total, false);
  {
    std::vector<std::size_t> pick(terms, 0);
    while (true) {
      std::uint64_t enc = 0;
      for (std::uint32_t i = 0; i < terms; ++i)
        enc = enc * n + R.mul_id(at, torsion_ids[pick[i]]);
      lhs[enc] = true;
      std::uint32_t i = terms;
      bool done = true;
      while (i-- > 0) {
        if (++pick[i] < torsion_ids.size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
      if (done) break;
    }
  }

  // right side: every coefficient in gln(R)
  const Submodule gln_r = gln(RR, a, t);
  std::vector<ElemId> gln_ids;
  for (ModId m : gln_r.ids()) gln_ids.push_back(RR.coord_id(m, 0));
  std::sort(gln_ids.begin(), gln_ids.end());
  std::vector<bool> rhs(total, false);
  {
    std::vector<std::size_t> pick(terms, 0);
    while (true) {
      std::uint64_t enc = 0;
      for (std::uint32_t i = 0; i < terms; ++i)
        enc = enc * n + gln_ids[pick[i]];
      rhs[enc] = true;
      std::uint32_t i = terms;
      bool done = true;
      while (i-- > 0) {
        if (++pick[i] < gln_ids.size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
      if (done) break;
    }
  }

  out.identity_ok = lhs == rhs;
  std::uint64_t lhs_count = 0, rhs_count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    lhs_count += lhs[i];
    rhs_count += rhs[i];
    if (!out.identity_ok && out.witness.empty() && lhs[i] != rhs[i]) {
      std::string poly;
      std::uint64_t v = i;
      for (std::uint32_t j = 0; j < terms; ++j) {
        const ElemId c = static_cast<ElemId>(v % n);
        v /= n;
        if (j) poly += " + ";
        poly += "(" + R.element_str(c) + ")x^" + std::to_string(j);
      }
      out.witness = poly;
    }
  }
  out.lhs_size = lhs_count;
  out.rhs_size = rhs_count;

  // truncated corollary: the degree-bounded piece vanishes exactly when the
  // ring-level gln vanishes
  const bool ring_reduced = gln_ids.size() == 1 && gln_ids[0] == 0;
  out.corollary_ok = (lhs_count == 1) == ring_reduced;
  return out;
}

}  // namespace redmod
