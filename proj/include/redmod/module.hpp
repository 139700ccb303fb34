#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redmod/ideal.hpp"
#include "redmod/ring.hpp"

namespace redmod {

/// Dense index of a module element within its module's enumeration.
using ModId = std::uint32_t;

/// A vector over R^g, one ring element per presentation generator.
using ModVec = std::vector<RingElement>;

/// A module element: the canonical (lexicographically least) representative
/// vector of its coset.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(ModVec rep) : rep_(std::move(rep)) {}
  const ModVec& rep() const { return rep_; }
  bool operator==(const ModuleElement&) const = default;

 private:
  ModVec rep_;
};

/// A finitely presented module R^g / K with fully enumerated canonical coset
/// representatives. Immutable; copies share the presentation.
class PresentedModule {
 public:
  PresentedModule() = default;

  const FiniteRing& ring() const;
  std::size_t generator_count() const;  // g
  const std::vector<ModVec>& relations() const;
  std::uint64_t size() const;
  std::uint64_t relation_span_size() const;  // |K|
  bool is_free() const;                      // K trivial

  ModuleElement element_at(ModId idx) const;
  ModId index_of(const ModuleElement& m) const;
  ModuleElement zero() const { return element_at(0); }

  /// Canonical coset of an arbitrary raw vector (also serves as the
  /// projection map for quotient presentations sharing this raw space).
  ModuleElement project(const ModVec& raw) const;

  ModuleElement add(const ModuleElement& x, const ModuleElement& y) const;
  ModuleElement neg(const ModuleElement& x) const;
  ModuleElement scalar(const RingElement& a, const ModuleElement& x) const;

  /// Dense-index arithmetic for exhaustive scans.
  ModId add_ids(ModId x, ModId y) const;
  ModId neg_id(ModId x) const;
  ModId scalar_id(ElemId a, ModId x) const;

  /// i-th coordinate (as a ring element id) of the canonical representative
  /// of the element with dense index idx.
  ElemId coord_id(ModId idx, std::size_t i) const;

  /// Same ring, same rank, same relation span.
  bool operator==(const PresentedModule& other) const;

  std::string element_str(const ModuleElement& m) const;
  std::string element_str(ModId idx) const;

 private:
  friend PresentedModule module_present(const FiniteRing&, std::size_t,
                                        std::vector<ModVec>);
  struct Impl;
  explicit PresentedModule(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Builds R^g modulo the submodule generated by the relation vectors.
/// Throws OrderBudgetExceeded when |R|^g exceeds the enumeration budget.
PresentedModule module_present(const FiniteRing& R, std::size_t g,
                               std::vector<ModVec> relations);

/// R as a module over itself.
PresentedModule regular_module(const FiniteRing& R);

/// R/I presented with one generator and the ideal's generators as relations.
PresentedModule cyclic_quotient(const FiniteRing& R, const Ideal& I);

/// A submodule, materialized as a sorted subset of the parent's dense
/// indices, closed under addition and scalar action.
class Submodule {
 public:
  Submodule() = default;
  Submodule(PresentedModule parent, std::vector<ModId> ids);

  const PresentedModule& parent() const { return parent_; }
  const std::vector<ModId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains_id(ModId id) const;
  bool contains(const ModuleElement& m) const;
  bool is_zero() const { return ids_.size() == 1; }
  std::vector<ModuleElement> elements() const;
  bool operator==(const Submodule& other) const;

 private:
  PresentedModule parent_;
  std::vector<ModId> ids_;
};

/// Smallest subset containing the generators and closed under addition and
/// scalar action.
Submodule submodule_generate(const PresentedModule& M,
                             const std::vector<ModuleElement>& gens);
Submodule submodule_generate_ids(const PresentedModule& M,
                                 const std::vector<ModId>& gen_ids);

/// M/N as a fresh presentation over the same raw space; use
/// quotient.project(m.rep()) to push elements of M down. Throws
/// NotASubmodule when N does not belong to M or is not closed.
PresentedModule quotient_module(const PresentedModule& M, const Submodule& N);

/// {m : a^k m = 0}; asserts agreement with the ideal form for I = (a)^k.
Submodule ann_submodule(const PresentedModule& M, const RingElement& a,
                        std::uint32_t k);

/// {m : x m = 0 for every x in I}.
Submodule ann_submodule(const PresentedModule& M, const Ideal& I);

/// {a^t m : m in M}.
Submodule scalar_image(const PresentedModule& M, const RingElement& a,
                       std::uint32_t t);

/// Componentwise direct sum, presented on the concatenation of the parts'
/// generators.
PresentedModule direct_sum(const std::vector<PresentedModule>& parts);

/// An R-linear map stored as a full dense-index table, with additivity and
/// linearity verified exhaustively at construction.
class ModuleHom {
 public:
  ModuleHom(PresentedModule source, PresentedModule target,
            std::vector<ModId> table);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  ModId apply_id(ModId id) const { return table_[id]; }
  ModuleElement apply(const ModuleElement& m) const;
  bool is_automorphism() const { return automorphism_; }

 private:
  PresentedModule source_;
  PresentedModule target_;
  std::vector<ModId> table_;
  bool automorphism_ = false;
};

/// All R-linear maps M -> N, enumerated by assigning images to the g
/// presentation generators in lexicographic order and keeping assignments
/// that kill every relation vector.
std::vector<ModuleHom> hom_set(const PresentedModule& M,
                               const PresentedModule& N);

struct FaithfulnessReport {
  bool faithful = false;
  std::optional<RingElement> witness;  // a nonzero annihilating scalar
};

FaithfulnessReport is_faithful(const PresentedModule& M);

}  // namespace redmod
