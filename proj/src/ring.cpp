#include "redmod/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace redmod {

std::uint64_t max_enumerated_elements() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("REDMOD_MAX_ELEMS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v >= 1) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(20000);
  }();
  return cap;
}

namespace {

// Tables are worth their memory only for small rings; everything in the
// default catalog qualifies.
constexpr std::uint64_t kTableLimit = 512;

}  // namespace

struct FiniteRing::Impl {
  std::vector<RingComponent> components;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> radix;        // modulus per coefficient slot
  std::vector<std::size_t> comp_offset;    // first slot of each component
  std::size_t slots = 0;
  ElemId one = 0;

  bool has_tables = false;
  std::vector<ElemId> add_table;
  std::vector<ElemId> mul_table;
  std::vector<ElemId> neg_table;

  void decode(ElemId id, std::uint64_t* out) const {
    std::uint64_t v = id;
    for (std::size_t s = 0; s < slots; ++s) {
      out[s] = v % radix[s];
      v /= radix[s];
    }
  }

  ElemId encode(const std::uint64_t* c) const {
    std::uint64_t id = 0;
    for (std::size_t s = slots; s-- > 0;) id = id * radix[s] + c[s];
    return static_cast<ElemId>(id);
  }

  // Componentwise polynomial arithmetic on flattened coefficient vectors.
  void add_raw(const std::uint64_t* x, const std::uint64_t* y,
               std::uint64_t* out) const {
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint64_t v = x[s] + y[s];
      out[s] = v >= radix[s] ? v - radix[s] : v;
    }
  }

  void neg_raw(const std::uint64_t* x, std::uint64_t* out) const {
    for (std::size_t s = 0; s < slots; ++s)
      out[s] = x[s] == 0 ? 0 : radix[s] - x[s];
  }

  void mul_raw(const std::uint64_t* x, const std::uint64_t* y,
               std::uint64_t* out) const {
    std::uint64_t prod[64];
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
      const RingComponent& comp = components[ci];
      const std::uint64_t n = comp.modulus;
      const std::size_t d = comp.degree();
      const std::size_t off = comp_offset[ci];
      std::fill(prod, prod + 2 * d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (x[off + i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          prod[i + j] = (prod[i + j] + x[off + i] * y[off + j]) % n;
      }
      // monic reduction: x^d = -(f_{d-1} x^{d-1} + ... + f_0)
      for (std::size_t i = 2 * d - 1; i >= d && i < 2 * d; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
          std::uint64_t sub = (c * comp.poly[j]) % n;
          prod[i - d + j] = (prod[i - d + j] + n - sub) % n;
        }
      }
      for (std::size_t j = 0; j < d; ++j) out[off + j] = prod[j];
    }
  }

  ElemId add_id(ElemId x, ElemId y) const {
    if (has_tables) return add_table[x * order + y];
    std::uint64_t a[32], b[32], c[32];
    decode(x, a);
    decode(y, b);
    add_raw(a, b, c);
    return encode(c);
  }

  ElemId mul_id(ElemId x, ElemId y) const {
    if (has_tables) return mul_table[x * order + y];
    std::uint64_t a[32], b[32], c[32];
    decode(x, a);
    decode(y, b);
    mul_raw(a, b, c);
    return encode(c);
  }

  ElemId neg_id(ElemId x) const {
    if (has_tables) return neg_table[x];
    std::uint64_t a[32], c[32];
    decode(x, a);
    neg_raw(a, c);
    return encode(c);
  }
};

const std::vector<RingComponent>& FiniteRing::components() const {
  return impl_->components;
}

std::uint64_t FiniteRing::order() const { return impl_->order; }

std::size_t FiniteRing::coeff_slots() const { return impl_->slots; }

RingElement FiniteRing::element_at(ElemId id) const {
  std::vector<std::uint64_t> c(impl_->slots);
  impl_->decode(id, c.data());
  return RingElement(std::move(c));
}

ElemId FiniteRing::index_of(const RingElement& e) const {
  check_element(e);
  return impl_->encode(e.coeffs().data());
}

ElemId FiniteRing::one_id() const { return impl_->one; }

RingElement FiniteRing::canonicalize(
    const std::vector<std::vector<std::int64_t>>& raw) const {
  if (raw.size() != impl_->components.size())
    throw RingMismatch("element literal has wrong component count");
  std::vector<std::uint64_t> flat(impl_->slots, 0);
  for (std::size_t ci = 0; ci < raw.size(); ++ci) {
    const RingComponent& comp = impl_->components[ci];
    const std::int64_t n = static_cast<std::int64_t>(comp.modulus);
    const std::size_t d = comp.degree();
    // reduce residues, then reduce the polynomial degree by the monic f
    std::vector<std::uint64_t> c(std::max(raw[ci].size(), d), 0);
    for (std::size_t j = 0; j < raw[ci].size(); ++j) {
      std::int64_t v = raw[ci][j] % n;
      if (v < 0) v += n;
      c[j] = static_cast<std::uint64_t>(v);
    }
    for (std::size_t i = c.size() - 1; i >= d && i < c.size(); --i) {
      const std::uint64_t coef = c[i];
      if (coef == 0) continue;
      c[i] = 0;
      for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t sub = (coef * comp.poly[j]) % comp.modulus;
        c[i - d + j] = (c[i - d + j] + comp.modulus - sub) % comp.modulus;
      }
    }
    for (std::size_t j = 0; j < d; ++j) flat[impl_->comp_offset[ci] + j] = c[j];
  }
  return RingElement(std::move(flat));
}

void FiniteRing::check_element(const RingElement& e) const {
  if (e.coeffs().size() != impl_->slots)
    throw RingMismatch("element does not belong to this ring");
  for (std::size_t s = 0; s < impl_->slots; ++s)
    if (e.coeffs()[s] >= impl_->radix[s])
      throw RingMismatch("element coefficient out of range for this ring");
}

RingElement FiniteRing::add(const RingElement& x, const RingElement& y) const {
  check_element(x);
  check_element(y);
  std::vector<std::uint64_t> c(impl_->slots);
  impl_->add_raw(x.coeffs().data(), y.coeffs().data(), c.data());
  return RingElement(std::move(c));
}

RingElement FiniteRing::mul(const RingElement& x, const RingElement& y) const {
  check_element(x);
  check_element(y);
  std::vector<std::uint64_t> c(impl_->slots);
  impl_->mul_raw(x.coeffs().data(), y.coeffs().data(), c.data());
  return RingElement(std::move(c));
}

RingElement FiniteRing::neg(const RingElement& x) const {
  check_element(x);
  std::vector<std::uint64_t> c(impl_->slots);
  impl_->neg_raw(x.coeffs().data(), c.data());
  return RingElement(std::move(c));
}

RingElement FiniteRing::pow(const RingElement& x, std::uint64_t k) const {
  return element_at(pow_id(index_of(x), k));
}

ElemId FiniteRing::add_id(ElemId x, ElemId y) const {
  return impl_->add_id(x, y);
}

ElemId FiniteRing::mul_id(ElemId x, ElemId y) const {
  return impl_->mul_id(x, y);
}

ElemId FiniteRing::neg_id(ElemId x) const { return impl_->neg_id(x); }

ElemId FiniteRing::pow_id(ElemId x, std::uint64_t k) const {
  ElemId result = impl_->one;
  ElemId base = x;
  while (k > 0) {
    if (k & 1) result = impl_->mul_id(result, base);
    k >>= 1;
    if (k) base = impl_->mul_id(base, base);
  }
  return result;
}

bool FiniteRing::operator==(const FiniteRing& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  return impl_->components == other.impl_->components;
}

namespace {

std::string poly_str(const RingComponent& comp) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = comp.poly.size(); k-- > 0;) {
    const std::uint64_t c = comp.poly[k];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string component_name(const RingComponent& comp) {
  std::ostringstream os;
  os << "Z" << comp.modulus;
  if (comp.poly != std::vector<std::uint64_t>{0, 1})
    os << "[x]/(" << poly_str(comp) << ")";
  return os.str();
}

std::string component_elem_str(const RingComponent& comp,
                               const std::uint64_t* c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = comp.degree(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << c[k];
    } else {
      if (c[k] != 1) os << c[k];
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string FiniteRing::name() const {
  std::string out;
  for (std::size_t ci = 0; ci < impl_->components.size(); ++ci) {
    if (ci) out += " x ";
    out += component_name(impl_->components[ci]);
  }
  return out;
}

std::string FiniteRing::element_str(const RingElement& e) const {
  check_element(e);
  if (impl_->components.size() == 1)
    return component_elem_str(impl_->components[0], e.coeffs().data());
  std::string out = "(";
  for (std::size_t ci = 0; ci < impl_->components.size(); ++ci) {
    if (ci) out += ",";
    out += component_elem_str(impl_->components[ci],
                              e.coeffs().data() + impl_->comp_offset[ci]);
  }
  out += ")";
  return out;
}

std::string FiniteRing::element_str(ElemId id) const {
  return element_str(element_at(id));
}

FiniteRing ring_make(std::vector<RingComponent> components) {
  if (components.empty())
    throw BadConfig("ring needs at least one component");
  auto impl = std::make_shared<FiniteRing::Impl>();
  std::uint64_t order = 1;
  const std::uint64_t cap = max_enumerated_elements();
  for (const RingComponent& comp : components) {
    if (comp.modulus < 2) throw ModulusTooSmall("modulus must be at least 2");
    if (comp.poly.size() < 2)
      throw NonMonicPolynomial("modulus polynomial must have degree >= 1");
    if (comp.poly.back() % comp.modulus != 1)
      throw NonMonicPolynomial("modulus polynomial must be monic");
    for (std::uint64_t c : comp.poly)
      if (c >= comp.modulus)
        throw BadConfig("polynomial coefficient not reduced mod n");
    if (comp.degree() > 16)
      throw BadConfig("component degree too large");
    for (std::size_t j = 0; j < comp.degree(); ++j) {
      if (order > cap / comp.modulus + 1)
        throw OrderBudgetExceeded("ring order exceeds enumeration budget");
      order *= comp.modulus;
      impl->radix.push_back(comp.modulus);
      (void)j;
    }
  }
  if (order > cap)
    throw OrderBudgetExceeded("ring order exceeds enumeration budget");
  std::size_t off = 0;
  for (const RingComponent& comp : components) {
    impl->comp_offset.push_back(off);
    off += comp.degree();
  }
  impl->slots = off;
  if (impl->slots > 32) throw BadConfig("too many coefficient slots");
  impl->components = std::move(components);
  impl->order = order;

  {
    std::vector<std::uint64_t> one(impl->slots, 0);
    for (std::size_t ci = 0; ci < impl->components.size(); ++ci)
      one[impl->comp_offset[ci]] = 1 % impl->components[ci].modulus;
    impl->one = impl->encode(one.data());
  }

  if (order <= kTableLimit) {
    impl->add_table.resize(order * order);
    impl->mul_table.resize(order * order);
    impl->neg_table.resize(order);
    std::vector<std::vector<std::uint64_t>> dec(order,
                                                std::vector<std::uint64_t>(
                                                    impl->slots));
    for (std::uint64_t i = 0; i < order; ++i)
      impl->decode(static_cast<ElemId>(i), dec[i].data());
    std::vector<std::uint64_t> tmp(impl->slots);
    for (std::uint64_t i = 0; i < order; ++i) {
      impl->neg_raw(dec[i].data(), tmp.data());
      impl->neg_table[i] = impl->encode(tmp.data());
      for (std::uint64_t j = 0; j < order; ++j) {
        impl->add_raw(dec[i].data(), dec[j].data(), tmp.data());
        impl->add_table[i * order + j] = impl->encode(tmp.data());
        impl->mul_raw(dec[i].data(), dec[j].data(), tmp.data());
        impl->mul_table[i * order + j] = impl->encode(tmp.data());
      }
    }
    impl->has_tables = true;
  }

  return FiniteRing(std::move(impl));
}

FiniteRing make_zn(std::uint64_t n) {
  return ring_make({RingComponent{n, {0, 1}}});
}

Classification classify(const FiniteRing& R) {
  Classification out;
  const std::uint64_t n = R.order();
  out.elements.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    out.elements.push_back(R.element_at(static_cast<ElemId>(i)));

  const ElemId one = R.one_id();
  for (std::uint64_t i = 0; i < n; ++i) {
    const ElemId a = static_cast<ElemId>(i);
    for (std::uint64_t j = 0; j < n; ++j) {
      if (R.mul_id(a, static_cast<ElemId>(j)) == one) {
        out.units.push_back(R.element_at(a));
        break;
      }
    }
    ElemId p = a;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (p == 0) {
        out.nilpotents.push_back(R.element_at(a));
        break;
      }
      p = R.mul_id(p, a);
    }
  }

  out.is_domain = true;
  for (std::uint64_t i = 1; i < n && out.is_domain; ++i)
    for (std::uint64_t j = 1; j < n; ++j)
      if (R.mul_id(static_cast<ElemId>(i), static_cast<ElemId>(j)) == 0) {
        out.is_domain = false;
        break;
      }
  out.is_field = out.units.size() == n - 1;
  if (out.is_domain != out.is_field)
    throw std::logic_error("finite ring with is_domain != is_field");
  return out;
}

struct RingHom::Impl {
  FiniteRing source;
  FiniteRing target;
  std::vector<ElemId> table;
  bool surjective = false;
};

const FiniteRing& RingHom::source() const { return impl_->source; }
const FiniteRing& RingHom::target() const { return impl_->target; }
bool RingHom::surjective() const { return impl_->surjective; }

RingElement RingHom::apply(const RingElement& e) const {
  return impl_->target.element_at(impl_->table[impl_->source.index_of(e)]);
}

ElemId RingHom::apply_id(ElemId id) const { return impl_->table[id]; }

namespace {

// Image of a source element under generator images: each component
// polynomial is evaluated at its x-image with integer coefficients acting
// through the component's unit-idempotent image.
ElemId derive_image(const FiniteRing& R, const FiniteRing& S,
                    const std::vector<std::pair<ElemId, ElemId>>& images,
                    const RingElement& e) {
  ElemId out = 0;
  std::size_t off = 0;
  for (std::size_t ci = 0; ci < R.components().size(); ++ci) {
    const std::size_t d = R.components()[ci].degree();
    const ElemId e_img = images[ci].first;
    const ElemId x_img = images[ci].second;
    ElemId xpow = e_img;  // x^0 within the component = its unit
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t c = e.coeffs()[off + j];
      ElemId term = 0;
      ElemId base = xpow;
      while (c > 0) {  // c * base by binary addition chain
        if (c & 1) term = S.add_id(term, base);
        c >>= 1;
        if (c) base = S.add_id(base, base);
      }
      out = S.add_id(out, term);
      if (j + 1 < d) xpow = S.mul_id(xpow, x_img);
    }
    off += d;
  }
  return out;
}

}  // namespace

RingHom RingHom::from_table(const FiniteRing& R, const FiniteRing& S,
                            std::vector<ElemId> table) {
  // exhaustive verification of 0, 1, + and *
  if (table[R.zero_id()] != S.zero_id())
    throw NotAHomomorphism("0 is not preserved");
  if (table[R.one_id()] != S.one_id())
    throw NotAHomomorphism("1 is not preserved: f(1) = " +
                           S.element_str(table[R.one_id()]));
  const std::uint64_t n = R.order();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      const ElemId x = static_cast<ElemId>(i), y = static_cast<ElemId>(j);
      if (table[R.add_id(x, y)] != S.add_id(table[x], table[y]))
        throw NotAHomomorphism("addition not preserved at (" +
                               R.element_str(x) + ", " + R.element_str(y) +
                               ")");
      if (table[R.mul_id(x, y)] != S.mul_id(table[x], table[y]))
        throw NotAHomomorphism("multiplication not preserved at (" +
                               R.element_str(x) + ", " + R.element_str(y) +
                               ")");
    }
  std::vector<bool> hit(S.order(), false);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (!hit[table[i]]) {
      hit[table[i]] = true;
      ++count;
    }
  auto impl = std::make_shared<RingHom::Impl>();
  impl->source = R;
  impl->target = S;
  impl->table = std::move(table);
  impl->surjective = count == S.order();
  return RingHom(std::move(impl));
}

RingHom ring_hom_make(const FiniteRing& R, const FiniteRing& S,
                      const std::vector<ComponentImages>& images) {
  if (images.size() != R.components().size())
    throw BadConfig("one generator image pair per component required");
  std::vector<std::pair<ElemId, ElemId>> ids;
  ElemId sum = 0;
  for (const ComponentImages& im : images) {
    ids.emplace_back(S.index_of(im.unit_image), S.index_of(im.x_image));
    sum = S.add_id(sum, ids.back().first);
  }
  if (sum != S.one_id())
    throw NotAHomomorphism("component unit images do not sum to 1");
  const std::uint64_t n = R.order();
  std::vector<ElemId> table(n);
  for (std::uint64_t i = 0; i < n; ++i)
    table[i] = derive_image(R, S, ids, R.element_at(static_cast<ElemId>(i)));
  return RingHom::from_table(R, S, std::move(table));
}

RingHom identity_hom(const FiniteRing& R) {
  std::vector<ElemId> table(R.order());
  for (std::uint64_t i = 0; i < R.order(); ++i)
    table[i] = static_cast<ElemId>(i);
  return RingHom::from_table(R, R, std::move(table));
}

std::vector<RingHom> enumerate_ring_homs(const FiniteRing& R,
                                         const FiniteRing& S) {
  // Candidate images per component: unit image must be an idempotent killed
  // by the component characteristic, x image a root of the (idempotent
  // twisted) modulus polynomial absorbed by that idempotent.
  const std::uint64_t sn = S.order();
  std::vector<std::vector<std::pair<ElemId, ElemId>>> cands(
      R.components().size());
  for (std::size_t ci = 0; ci < R.components().size(); ++ci) {
    const RingComponent& comp = R.components()[ci];
    for (std::uint64_t ei = 0; ei < sn; ++ei) {
      const ElemId e = static_cast<ElemId>(ei);
      if (S.mul_id(e, e) != e) continue;
      // n_i * e must vanish
      ElemId ne = 0;
      for (std::uint64_t k = 0; k < comp.modulus; ++k) ne = S.add_id(ne, e);
      if (ne != 0) continue;
      for (std::uint64_t xi = 0; xi < sn; ++xi) {
        const ElemId x = static_cast<ElemId>(xi);
        if (S.mul_id(e, x) != x) continue;
        // evaluate f at x with coefficients c -> c*e
        ElemId val = 0;
        ElemId xpow = e;
        for (std::size_t j = 0; j < comp.poly.size(); ++j) {
          std::uint64_t c = comp.poly[j];
          ElemId term = 0;
          ElemId base = xpow;
          while (c > 0) {
            if (c & 1) term = S.add_id(term, base);
            c >>= 1;
            if (c) base = S.add_id(base, base);
          }
          val = S.add_id(val, term);
          if (j + 1 < comp.poly.size()) xpow = S.mul_id(xpow, x);
        }
        if (val == 0) cands[ci].emplace_back(e, x);
      }
    }
  }

  std::vector<RingHom> out;
  std::vector<std::size_t> pick(R.components().size(), 0);
  while (true) {
    bool viable = true;
    std::vector<ComponentImages> images;
    ElemId sum = 0;
    for (std::size_t ci = 0; ci < pick.size() && viable; ++ci) {
      if (cands[ci].empty()) {
        viable = false;
        break;
      }
      const auto& [e, x] = cands[ci][pick[ci]];
      images.push_back(
          ComponentImages{S.element_at(e), S.element_at(x)});
      sum = S.add_id(sum, e);
    }
    if (cands.empty() || !viable) break;
    if (sum == S.one_id()) {
      try {
        out.push_back(ring_hom_make(R, S, images));
      } catch (const NotAHomomorphism&) {
        // candidate survived local filters but fails globally; skip
      }
    }
    // advance the mixed-radix picker, last component fastest
    std::size_t ci = pick.size();
    while (ci-- > 0) {
      if (++pick[ci] < cands[ci].size()) break;
      pick[ci] = 0;
      if (ci == 0) return out;
    }
    if (pick.size() == 0) break;
  }
  return out;
}

}  // namespace redmod
