#include "redmod/module.hpp"

#include <algorithm>
#include <array>

namespace redmod {

namespace {

constexpr ModId kUnassigned = static_cast<ModId>(-1);

}  // namespace

struct PresentedModule::Impl {
  FiniteRing ring;
  std::size_t g = 0;
  std::vector<ModVec> relations;
  std::uint64_t raw_size = 0;   // |R|^g
  std::uint64_t size = 0;       // number of cosets
  std::vector<ModId> kernel;    // raw indices of the relation span, sorted
  std::vector<ModId> canon;     // raw index -> canonical raw index
  std::vector<ModId> rank;      // canonical raw index -> dense index
  std::vector<ModId> dense;     // dense index -> canonical raw index
  std::vector<ElemId> coords;   // dense index * g -> decoded coordinates

  std::uint64_t ring_order = 0;

  void decode_raw(std::uint64_t raw, ElemId* out) const {
    for (std::size_t i = g; i-- > 0;) {
      out[i] = static_cast<ElemId>(raw % ring_order);
      raw /= ring_order;
    }
  }

  std::uint64_t encode_raw(const ElemId* coordsv) const {
    std::uint64_t raw = 0;
    for (std::size_t i = 0; i < g; ++i) raw = raw * ring_order + coordsv[i];
    return raw;
  }

  ModId add_ids(ModId x, ModId y) const {
    ElemId buf[16];
    const ElemId* a = coords.data() + static_cast<std::size_t>(x) * g;
    const ElemId* b = coords.data() + static_cast<std::size_t>(y) * g;
    for (std::size_t i = 0; i < g; ++i) buf[i] = ring.add_id(a[i], b[i]);
    return rank[canon[encode_raw(buf)]];
  }

  ModId neg_id(ModId x) const {
    ElemId buf[16];
    const ElemId* a = coords.data() + static_cast<std::size_t>(x) * g;
    for (std::size_t i = 0; i < g; ++i) buf[i] = ring.neg_id(a[i]);
    return rank[canon[encode_raw(buf)]];
  }

  ModId scalar_id(ElemId s, ModId x) const {
    ElemId buf[16];
    const ElemId* a = coords.data() + static_cast<std::size_t>(x) * g;
    for (std::size_t i = 0; i < g; ++i) buf[i] = ring.mul_id(s, a[i]);
    return rank[canon[encode_raw(buf)]];
  }
};

const FiniteRing& PresentedModule::ring() const { return impl_->ring; }
std::size_t PresentedModule::generator_count() const { return impl_->g; }
const std::vector<ModVec>& PresentedModule::relations() const {
  return impl_->relations;
}
std::uint64_t PresentedModule::size() const { return impl_->size; }
std::uint64_t PresentedModule::relation_span_size() const {
  return impl_->kernel.size();
}
bool PresentedModule::is_free() const { return impl_->kernel.size() == 1; }

ModuleElement PresentedModule::element_at(ModId idx) const {
  const std::uint64_t raw = impl_->dense[idx];
  ModVec rep;
  rep.reserve(impl_->g);
  ElemId buf[16];
  impl_->decode_raw(raw, buf);
  for (std::size_t i = 0; i < impl_->g; ++i)
    rep.push_back(impl_->ring.element_at(buf[i]));
  return ModuleElement(std::move(rep));
}

ModId PresentedModule::index_of(const ModuleElement& m) const {
  if (m.rep().size() != impl_->g)
    throw RingMismatch("module element has wrong coordinate count");
  ElemId buf[16];
  for (std::size_t i = 0; i < impl_->g; ++i)
    buf[i] = impl_->ring.index_of(m.rep()[i]);
  const std::uint64_t raw = impl_->encode_raw(buf);
  if (impl_->canon[raw] != raw)
    throw RingMismatch("module element representative is not canonical");
  return impl_->rank[raw];
}

ModuleElement PresentedModule::project(const ModVec& raw) const {
  if (raw.size() != impl_->g)
    throw RingMismatch("vector has wrong coordinate count");
  ElemId buf[16];
  for (std::size_t i = 0; i < impl_->g; ++i)
    buf[i] = impl_->ring.index_of(raw[i]);
  return element_at(impl_->rank[impl_->canon[impl_->encode_raw(buf)]]);
}

ModuleElement PresentedModule::add(const ModuleElement& x,
                                   const ModuleElement& y) const {
  return element_at(add_ids(index_of(x), index_of(y)));
}

ModuleElement PresentedModule::neg(const ModuleElement& x) const {
  return element_at(neg_id(index_of(x)));
}

ModuleElement PresentedModule::scalar(const RingElement& a,
                                      const ModuleElement& x) const {
  return element_at(scalar_id(impl_->ring.index_of(a), index_of(x)));
}

ModId PresentedModule::add_ids(ModId x, ModId y) const {
  return impl_->add_ids(x, y);
}
ModId PresentedModule::neg_id(ModId x) const { return impl_->neg_id(x); }
ModId PresentedModule::scalar_id(ElemId a, ModId x) const {
  return impl_->scalar_id(a, x);
}

ElemId PresentedModule::coord_id(ModId idx, std::size_t i) const {
  return impl_->coords[static_cast<std::size_t>(idx) * impl_->g + i];
}

bool PresentedModule::operator==(const PresentedModule& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  return impl_->ring == other.impl_->ring && impl_->g == other.impl_->g &&
         impl_->kernel == other.impl_->kernel;
}

std::string PresentedModule::element_str(const ModuleElement& m) const {
  if (impl_->g == 1) return impl_->ring.element_str(m.rep()[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < m.rep().size(); ++i) {
    if (i) out += ",";
    out += impl_->ring.element_str(m.rep()[i]);
  }
  out += "]";
  return out;
}

std::string PresentedModule::element_str(ModId idx) const {
  return element_str(element_at(idx));
}

PresentedModule module_present(const FiniteRing& R, std::size_t g,
                               std::vector<ModVec> relations) {
  if (g > 16) throw BadConfig("presentation rank too large");
  const std::uint64_t cap = max_enumerated_elements();
  std::uint64_t raw_size = 1;
  for (std::size_t i = 0; i < g; ++i) {
    if (raw_size > cap / R.order() + 1)
      throw OrderBudgetExceeded("module raw space exceeds enumeration budget");
    raw_size *= R.order();
  }
  if (raw_size > cap)
    throw OrderBudgetExceeded("module raw space exceeds enumeration budget");

  auto impl = std::make_shared<PresentedModule::Impl>();
  impl->ring = R;
  impl->g = g;
  impl->ring_order = R.order();
  impl->raw_size = raw_size;

  // relation span: closure of the relation vectors under addition and
  // scalar action inside R^g
  std::vector<bool> in_kernel(raw_size, false);
  std::vector<ModId> work;
  in_kernel[0] = true;
  work.push_back(0);
  auto raw_of = [&](const ModVec& v) {
    if (v.size() != g) throw RingMismatch("relation vector has wrong length");
    ElemId buf[16];
    for (std::size_t i = 0; i < g; ++i) buf[i] = R.index_of(v[i]);
    return impl->encode_raw(buf);
  };
  auto push = [&](std::uint64_t raw) {
    if (!in_kernel[raw]) {
      in_kernel[raw] = true;
      work.push_back(static_cast<ModId>(raw));
    }
  };
  for (const ModVec& rel : relations) push(raw_of(rel));
  {
    ElemId a[16], b[16], c[16];
    for (std::size_t head = 0; head < work.size(); ++head) {
      impl->decode_raw(work[head], a);
      for (std::uint64_t s = 0; s < R.order(); ++s) {
        for (std::size_t i = 0; i < g; ++i)
          c[i] = R.mul_id(static_cast<ElemId>(s), a[i]);
        push(impl->encode_raw(c));
      }
      for (std::size_t other = 0; other < work.size(); ++other) {
        impl->decode_raw(work[other], b);
        for (std::size_t i = 0; i < g; ++i) c[i] = R.add_id(a[i], b[i]);
        push(impl->encode_raw(c));
      }
    }
  }
  for (std::uint64_t v = 0; v < raw_size; ++v)
    if (in_kernel[v]) impl->kernel.push_back(static_cast<ModId>(v));

  // canonical representative: least raw index in each coset
  impl->canon.assign(raw_size, kUnassigned);
  {
    std::vector<std::array<ElemId, 16>> kvecs;
    kvecs.reserve(impl->kernel.size());
    for (ModId k : impl->kernel) {
      std::array<ElemId, 16> kv{};
      impl->decode_raw(k, kv.data());
      kvecs.push_back(kv);
    }
    ElemId a[16], c[16];
    for (std::uint64_t v = 0; v < raw_size; ++v) {
      if (impl->canon[v] != kUnassigned) continue;
      impl->decode_raw(v, a);
      for (const auto& kv : kvecs) {
        for (std::size_t i = 0; i < g; ++i) c[i] = R.add_id(a[i], kv[i]);
        impl->canon[impl->encode_raw(c)] = static_cast<ModId>(v);
      }
    }
  }

  impl->rank.assign(raw_size, kUnassigned);
  for (std::uint64_t v = 0; v < raw_size; ++v)
    if (impl->canon[v] == v) {
      impl->rank[v] = static_cast<ModId>(impl->dense.size());
      impl->dense.push_back(static_cast<ModId>(v));
    }
  impl->size = impl->dense.size();
  if (impl->size * impl->kernel.size() != raw_size)
    throw std::logic_error("coset count does not divide the raw space");

  impl->coords.resize(impl->size * std::max<std::size_t>(g, 1));
  {
    ElemId buf[16];
    for (std::uint64_t d = 0; d < impl->size; ++d) {
      impl->decode_raw(impl->dense[d], buf);
      for (std::size_t i = 0; i < g; ++i) impl->coords[d * g + i] = buf[i];
    }
  }
  impl->relations = std::move(relations);
  return PresentedModule(std::move(impl));
}

PresentedModule regular_module(const FiniteRing& R) {
  return module_present(R, 1, {});
}

PresentedModule cyclic_quotient(const FiniteRing& R, const Ideal& I) {
  if (I.ring() != R) throw RingMismatch("ideal belongs to a different ring");
  std::vector<ModVec> rels;
  for (const RingElement& gen : I.generators()) rels.push_back(ModVec{gen});
  PresentedModule M = module_present(R, 1, std::move(rels));
  if (M.size() != R.order() / I.size())
    throw std::logic_error("cyclic quotient has unexpected size");
  return M;
}

Submodule::Submodule(PresentedModule parent, std::vector<ModId> ids)
    : parent_(std::move(parent)), ids_(std::move(ids)) {
  if (ids_.empty() || ids_.front() != 0)
    throw NotASubmodule("submodule must contain 0");
  if (!std::is_sorted(ids_.begin(), ids_.end()))
    throw NotASubmodule("submodule ids must be sorted");
  for (ModId id : ids_)
    if (id >= parent_.size()) throw NotASubmodule("id out of range");
}

bool Submodule::contains_id(ModId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Submodule::contains(const ModuleElement& m) const {
  return contains_id(parent_.index_of(m));
}

std::vector<ModuleElement> Submodule::elements() const {
  std::vector<ModuleElement> out;
  out.reserve(ids_.size());
  for (ModId id : ids_) out.push_back(parent_.element_at(id));
  return out;
}

bool Submodule::operator==(const Submodule& other) const {
  return parent_ == other.parent_ && ids_ == other.ids_;
}

Submodule submodule_generate_ids(const PresentedModule& M,
                                 const std::vector<ModId>& gen_ids) {
  const std::uint64_t n = M.size();
  const std::uint64_t rn = M.ring().order();
  std::vector<bool> in(n, false);
  std::vector<ModId> work;
  in[0] = true;
  work.push_back(0);
  auto push = [&](ModId x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  for (ModId gen : gen_ids) push(gen);
  for (std::size_t head = 0; head < work.size(); ++head) {
    const ModId x = work[head];
    for (std::uint64_t s = 0; s < rn; ++s)
      push(M.scalar_id(static_cast<ElemId>(s), x));
    for (std::size_t other = 0; other < work.size(); ++other)
      push(M.add_ids(x, work[other]));
  }
  std::vector<ModId> ids;
  for (std::uint64_t i = 0; i < n; ++i)
    if (in[i]) ids.push_back(static_cast<ModId>(i));
  return Submodule(M, std::move(ids));
}

Submodule submodule_generate(const PresentedModule& M,
                             const std::vector<ModuleElement>& gens) {
  std::vector<ModId> ids;
  for (const ModuleElement& gen : gens) ids.push_back(M.index_of(gen));
  return submodule_generate_ids(M, ids);
}

namespace {

void check_closed_submodule(const PresentedModule& M,
                            const std::vector<ModId>& ids) {
  std::vector<bool> in(M.size(), false);
  for (ModId id : ids) in[id] = true;
  for (ModId x : ids) {
    for (ModId y : ids)
      if (!in[M.add_ids(x, y)])
        throw NotASubmodule("set not closed under addition");
    for (std::uint64_t s = 0; s < M.ring().order(); ++s)
      if (!in[M.scalar_id(static_cast<ElemId>(s), x)])
        throw NotASubmodule("set not closed under scalar action");
  }
}

}  // namespace

PresentedModule quotient_module(const PresentedModule& M, const Submodule& N) {
  if (!(N.parent() == M))
    throw NotASubmodule("submodule belongs to a different module");
  check_closed_submodule(M, N.ids());
  std::vector<ModVec> rels = M.relations();
  for (ModId id : N.ids()) rels.push_back(M.element_at(id).rep());
  PresentedModule Q = module_present(M.ring(), M.generator_count(),
                                     std::move(rels));
  if (Q.size() * N.size() != M.size())
    throw std::logic_error("quotient has unexpected size");
  return Q;
}

Submodule ann_submodule(const PresentedModule& M, const RingElement& a,
                        std::uint32_t k) {
  if (k < 1) throw BadConfig("annihilator power requires k >= 1");
  const FiniteRing& R = M.ring();
  const ElemId ak = R.pow_id(R.index_of(a), k);
  std::vector<ModId> ids;
  for (std::uint64_t m = 0; m < M.size(); ++m)
    if (M.scalar_id(ak, static_cast<ModId>(m)) == 0)
      ids.push_back(static_cast<ModId>(m));
  // the ideal form with I = (a)^k must produce the same set
  Submodule by_ideal =
      ann_submodule(M, ideal_power(ideal_generate(R, {a}), k));
  if (by_ideal.ids() != ids)
    throw std::logic_error("power and ideal annihilators disagree");
  return Submodule(M, std::move(ids));
}

Submodule ann_submodule(const PresentedModule& M, const Ideal& I) {
  if (I.ring() != M.ring())
    throw RingMismatch("ideal belongs to a different ring");
  std::vector<ModId> ids;
  for (std::uint64_t m = 0; m < M.size(); ++m) {
    bool killed = true;
    for (ElemId x : I.element_ids())
      if (M.scalar_id(x, static_cast<ModId>(m)) != 0) {
        killed = false;
        break;
      }
    if (killed) ids.push_back(static_cast<ModId>(m));
  }
  return Submodule(M, std::move(ids));
}

Submodule scalar_image(const PresentedModule& M, const RingElement& a,
                       std::uint32_t t) {
  if (t < 1) throw BadConfig("scalar image requires t >= 1");
  const ElemId at = M.ring().pow_id(M.ring().index_of(a), t);
  std::vector<ModId> ids;
  for (std::uint64_t m = 0; m < M.size(); ++m)
    ids.push_back(M.scalar_id(at, static_cast<ModId>(m)));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Submodule(M, std::move(ids));
}

PresentedModule direct_sum(const std::vector<PresentedModule>& parts) {
  if (parts.empty()) throw BadConfig("direct sum of an empty family");
  const FiniteRing& R = parts.front().ring();
  std::size_t g = 0;
  std::uint64_t expected = 1;
  for (const PresentedModule& p : parts) {
    if (p.ring() != R) throw RingMismatch("direct sum parts over mixed rings");
    g += p.generator_count();
    expected *= p.size();
  }
  std::vector<ModVec> rels;
  std::size_t offset = 0;
  for (const PresentedModule& p : parts) {
    for (const ModVec& rel : p.relations()) {
      ModVec padded(g, R.zero());
      for (std::size_t i = 0; i < rel.size(); ++i) padded[offset + i] = rel[i];
      rels.push_back(std::move(padded));
    }
    offset += p.generator_count();
  }
  PresentedModule S = module_present(R, g, std::move(rels));
  if (S.size() != expected)
    throw std::logic_error("direct sum has unexpected size");
  return S;
}

ModuleHom::ModuleHom(PresentedModule source, PresentedModule target,
                     std::vector<ModId> table)
    : source_(std::move(source)),
      target_(std::move(target)),
      table_(std::move(table)) {
  if (source_.ring() != target_.ring())
    throw RingMismatch("hom between modules over different rings");
  if (table_.size() != source_.size())
    throw BadConfig("hom table has wrong size");
  const std::uint64_t n = source_.size();
  if (table_[0] != 0) throw std::logic_error("hom does not preserve 0");
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      if (table_[source_.add_ids(static_cast<ModId>(x),
                                 static_cast<ModId>(y))] !=
          target_.add_ids(table_[x], table_[y]))
        throw std::logic_error("hom is not additive");
  for (std::uint64_t s = 0; s < source_.ring().order(); ++s)
    for (std::uint64_t x = 0; x < n; ++x)
      if (table_[source_.scalar_id(static_cast<ElemId>(s),
                                   static_cast<ModId>(x))] !=
          target_.scalar_id(static_cast<ElemId>(s), table_[x]))
        throw std::logic_error("hom is not linear");
  if (source_ == target_) {
    std::vector<bool> hit(target_.size(), false);
    bool bijective = source_.size() == target_.size();
    for (std::uint64_t x = 0; x < n && bijective; ++x) {
      if (hit[table_[x]]) bijective = false;
      hit[table_[x]] = true;
    }
    automorphism_ = bijective;
  }
}

ModuleElement ModuleHom::apply(const ModuleElement& m) const {
  return target_.element_at(table_[source_.index_of(m)]);
}

std::vector<ModuleHom> hom_set(const PresentedModule& M,
                               const PresentedModule& N) {
  if (M.ring() != N.ring())
    throw RingMismatch("hom set between modules over different rings");
  const std::size_t g = M.generator_count();
  if (g > 3)
    throw OrderBudgetExceeded(
        "hom enumeration is limited to presentations of rank <= 3");
  const std::uint64_t cap = max_enumerated_elements();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < g; ++i) {
    if (assignments > cap / std::max<std::uint64_t>(N.size(), 1) + 1)
      throw OrderBudgetExceeded("hom enumeration exceeds budget");
    assignments *= N.size();
  }
  if (assignments > cap)
    throw OrderBudgetExceeded("hom enumeration exceeds budget");

  const FiniteRing& R = M.ring();
  // relation coordinates as element ids
  std::vector<std::vector<ElemId>> rel_ids;
  for (const ModVec& rel : M.relations()) {
    std::vector<ElemId> r;
    for (const RingElement& c : rel) r.push_back(R.index_of(c));
    rel_ids.push_back(std::move(r));
  }

  std::vector<ModuleHom> out;
  std::vector<ModId> images(g, 0);
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::uint64_t v = a;
    for (std::size_t i = g; i-- > 0;) {
      images[i] = static_cast<ModId>(v % N.size());
      v /= N.size();
    }
    bool kills = true;
    for (const auto& rel : rel_ids) {
      ModId acc = 0;
      for (std::size_t i = 0; i < g; ++i)
        acc = N.add_ids(acc, N.scalar_id(rel[i], images[i]));
      if (acc != 0) {
        kills = false;
        break;
      }
    }
    if (!kills) continue;
    std::vector<ModId> table(M.size());
    for (std::uint64_t m = 0; m < M.size(); ++m) {
      ModId acc = 0;
      for (std::size_t i = 0; i < g; ++i)
        acc = N.add_ids(acc, N.scalar_id(M.coord_id(static_cast<ModId>(m), i),
                                         images[i]));
      table[m] = acc;
    }
    out.emplace_back(M, N, std::move(table));
  }
  return out;
}

FaithfulnessReport is_faithful(const PresentedModule& M) {
  FaithfulnessReport out;
  const FiniteRing& R = M.ring();
  for (std::uint64_t s = 0; s < R.order(); ++s) {
    if (s == 0) continue;
    bool kills_all = true;
    for (std::uint64_t m = 0; m < M.size(); ++m)
      if (M.scalar_id(static_cast<ElemId>(s), static_cast<ModId>(m)) != 0) {
        kills_all = false;
        break;
      }
    if (kills_all) {
      out.faithful = false;
      out.witness = R.element_at(static_cast<ElemId>(s));
      return out;
    }
  }
  out.faithful = true;
  return out;
}

}  // namespace redmod
