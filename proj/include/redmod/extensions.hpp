#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redmod/module.hpp"
#include "redmod/ring.hpp"

namespace redmod {

/// A multiplicatively closed subset of a ring, containing 1. Closure may
/// pull in 0 when a generator is nilpotent.
class MultSet {
 public:
  MultSet() = default;
  MultSet(FiniteRing ring, std::vector<RingElement> generators,
          std::vector<ElemId> ids);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return generators_; }
  const std::vector<ElemId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains_id(ElemId id) const;

 private:
  FiniteRing ring_;
  std::vector<RingElement> generators_;
  std::vector<ElemId> ids_;  // sorted, includes 1
};

MultSet mult_set_closure(const FiniteRing& R,
                         const std::vector<RingElement>& gens);

/// Fractions r/s materialized as equivalence classes of pairs under
/// (r,s) ~ (r',s') iff u(rs' - r's) = 0 for some u in S. Class arithmetic
/// is verified well-defined on all representative pairs and the ring axioms
/// are re-verified exhaustively on the classes.
class LocalizedRing {
 public:
  LocalizedRing() = default;
  const FiniteRing& base() const;
  const MultSet& mult_set() const;
  std::size_t class_count() const;

  std::uint32_t zero_class() const;
  std::uint32_t one_class() const;
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t class_of_pair(ElemId r, ElemId s) const;

  /// The structural map r -> r/1 (a verified ring homomorphism).
  std::uint32_t canonical_map(ElemId r) const;
  bool canonical_map_bijective() const;

  /// Least pair (r, s) representing the class, in enumeration order.
  std::pair<RingElement, RingElement> class_rep(std::uint32_t c) const;
  std::string class_str(std::uint32_t c) const;

 private:
  friend LocalizedRing localize(const FiniteRing&, const MultSet&);
  struct Impl;
  explicit LocalizedRing(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

LocalizedRing localize(const FiniteRing& R, const MultSet& S);

/// Fractions m/s over the matching localized ring, same construction and
/// verification discipline.
class LocalizedModule {
 public:
  LocalizedModule() = default;
  const PresentedModule& base() const;
  const LocalizedRing& ring() const;
  std::size_t class_count() const;

  std::uint32_t zero_class() const;
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t act(std::uint32_t ring_class, std::uint32_t x) const;
  std::uint32_t class_of_pair(ModId m, ElemId s) const;
  std::uint32_t canonical_map(ModId m) const;  // m -> m/1
  std::string class_str(std::uint32_t c) const;

 private:
  friend LocalizedModule localize_module(const PresentedModule&,
                                         const MultSet&);
  struct Impl;
  explicit LocalizedModule(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

LocalizedModule localize_module(const PresentedModule& M, const MultSet& S);

/// eps-reducedness of the localized module over the localized ring.
bool localized_eps_reduced(const LocalizedModule& L, std::uint32_t t);

struct LocalizationAudit {
  bool base_eps = false;
  bool localized_eps = false;
  bool biconditional = false;
  std::string note;
};

/// Computes both sides of "M eps-reduced iff S^{-1}M eps-reduced" directly
/// and records whether the biconditional held; a failure is annotated with
/// the obstruction (S meets the annihilator of a nonzero element, so M does
/// not embed into S^{-1}M).
LocalizationAudit localization_audit(const PresentedModule& M,
                                     const MultSet& S, std::uint32_t t);

/// M as a module over the hom's source, r.m = f(r)m, re-presented on a
/// greedy generating set with its full relation kernel. The element count
/// is preserved (verified).
PresentedModule restrict_scalars(const RingHom& f, const PresentedModule& M);

struct ScalarAudit {
  bool target_eps = false;      // M over the hom's target
  bool restricted_eps = false;  // M over the hom's source
  bool surjective = false;
  bool restriction_ok = false;              // target eps => restricted eps
  std::optional<bool> extension_ok;         // surjective: restricted => target
};

ScalarAudit scalar_audit(const RingHom& f, const PresentedModule& M,
                         std::uint32_t t);

struct PolyGlnReport {
  bool identity_ok = false;   // torsion image = coefficientwise gln, deg <= D
  bool corollary_ok = false;  // truncated ring reduced iff base ring reduced
  std::uint64_t lhs_size = 0;
  std::uint64_t rhs_size = 0;
  std::string witness;  // first differing polynomial, if any
};

/// Degree-bounded check of the polynomial-ring identity for the generalised
/// locally nilradical; exact for the stated comparison since membership is
/// coefficientwise.
PolyGlnReport poly_gln_check(const FiniteRing& R, const RingElement& a,
                             std::uint32_t t, std::uint32_t max_degree);

}  // namespace redmod
