#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redmod/errors.hpp"

namespace redmod {

/// Dense enumeration index of a ring element. The enumeration is total and
/// deterministic: coefficient tuples are counted in mixed radix with the
/// constant term of the first component varying fastest.
using ElemId = std::uint32_t;

/// One factor Z_n[x]/(f) of a ring presentation. `poly` holds the monic
/// modulus f constant-term first, so {0,1} is x and {1,1,1} is x^2+x+1.
/// Plain Z_n is presented uniformly as Z_n[x]/(x).
struct RingComponent {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> poly;

  std::size_t degree() const { return poly.size() - 1; }
  bool operator==(const RingComponent&) const = default;
};

/// A ring element in canonical form: the flattened coefficient vector,
/// component by component, each coefficient reduced into [0, n_i) and each
/// component padded to exactly deg f_i slots.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(std::vector<std::uint64_t> coeffs)
      : coeffs_(std::move(coeffs)) {}

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  bool operator==(const RingElement&) const = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// A finite commutative unital ring presented as a product of monic
/// polynomial quotients of Z_n. Immutable value type; copies share the
/// underlying presentation. Equality compares presentations.
class FiniteRing {
 public:
  FiniteRing() = default;

  const std::vector<RingComponent>& components() const;
  std::uint64_t order() const;
  std::size_t coeff_slots() const;

  /// Element <-> enumeration index codec.
  RingElement element_at(ElemId id) const;
  ElemId index_of(const RingElement& e) const;

  RingElement zero() const { return element_at(0); }
  RingElement one() const { return element_at(one_id()); }
  ElemId zero_id() const { return 0; }
  ElemId one_id() const;

  /// Reduces an arbitrary per-component coefficient literal (any length,
  /// any residues) into canonical form.
  RingElement canonicalize(
      const std::vector<std::vector<std::int64_t>>& raw) const;

  /// Validating arithmetic on canonical elements.
  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement pow(const RingElement& x, std::uint64_t k) const;

  /// Index-level arithmetic (no validation); the hot path for exhaustive
  /// scans. Small rings run off precomputed tables.
  ElemId add_id(ElemId x, ElemId y) const;
  ElemId mul_id(ElemId x, ElemId y) const;
  ElemId neg_id(ElemId x) const;
  ElemId pow_id(ElemId x, std::uint64_t k) const;

  /// Throws RingMismatch unless e is a canonical element of this ring.
  void check_element(const RingElement& e) const;

  bool operator==(const FiniteRing& other) const;
  bool operator!=(const FiniteRing& other) const { return !(*this == other); }

  std::string name() const;
  std::string element_str(const RingElement& e) const;
  std::string element_str(ElemId id) const;

 private:
  friend FiniteRing ring_make(std::vector<RingComponent> components);
  struct Impl;
  explicit FiniteRing(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Builds a ring from its component list. Rejects moduli < 2, degree-0 and
/// non-monic polynomials; enforces the enumeration budget.
FiniteRing ring_make(std::vector<RingComponent> components);

/// Convenience: plain Z_n, presented as Z_n[x]/(x).
FiniteRing make_zn(std::uint64_t n);

struct Classification {
  std::vector<RingElement> elements;  // full enumeration, in order
  std::vector<RingElement> units;
  std::vector<RingElement> nilpotents;
  bool is_domain = false;
  bool is_field = false;
};

/// Exhaustive classification: units, nilpotents, zero-divisor freeness.
/// For finite rings is_domain and is_field coincide; this is asserted.
Classification classify(const FiniteRing& R);

/// Generator images determining a ring homomorphism out of a product of
/// polynomial quotients: for each component, the image of its unit
/// idempotent and of its residue x. For single-component rings the unit
/// image must be 1.
struct ComponentImages {
  RingElement unit_image;
  RingElement x_image;
};

/// A verified unital ring homomorphism, stored as a full element table.
class RingHom {
 public:
  const FiniteRing& source() const;
  const FiniteRing& target() const;
  bool surjective() const;

  RingElement apply(const RingElement& e) const;
  ElemId apply_id(ElemId id) const;

 private:
  friend RingHom ring_hom_make(const FiniteRing&, const FiniteRing&,
                               const std::vector<ComponentImages>&);
  friend RingHom identity_hom(const FiniteRing&);
  friend std::vector<RingHom> enumerate_ring_homs(const FiniteRing&,
                                                  const FiniteRing&);
  /// Verifies the table exhaustively and wraps it.
  static RingHom from_table(const FiniteRing& source, const FiniteRing& target,
                            std::vector<ElemId> table);
  struct Impl;
  explicit RingHom(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Derives the full table from generator images and verifies preservation
/// of 0, 1, + and * exhaustively. Throws NotAHomomorphism with the violated
/// identity as witness text.
RingHom ring_hom_make(const FiniteRing& source, const FiniteRing& target,
                      const std::vector<ComponentImages>& images);

RingHom identity_hom(const FiniteRing& R);

/// All unital ring homomorphisms source -> target, in the deterministic
/// lexicographic order of their generator image tuples.
std::vector<RingHom> enumerate_ring_homs(const FiniteRing& source,
                                         const FiniteRing& target);

}  // namespace redmod
