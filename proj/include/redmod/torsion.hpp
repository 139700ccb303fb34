#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redmod/module.hpp"

namespace redmod {

/// The a-torsion submodule {m : a^k m = 0 for some k >= 1}, computed as the
/// fixpoint of the ascending annihilator chain (0 : a) <= (0 : a^2) <= ...
Submodule gamma(const PresentedModule& M, const RingElement& a);

/// {a^t m : m in the a-torsion submodule}.
Submodule gln(const PresentedModule& M, const RingElement& a, std::uint32_t t);

/// Carrier-level variants: the same computations restricted to a subset of
/// the parent module that is closed under addition and scalar action. Ids
/// refer to the parent's dense enumeration.
std::vector<ModId> gamma_ids_within(const PresentedModule& M,
                                    const std::vector<ModId>& carrier,
                                    ElemId a);
std::vector<ModId> gln_ids_within(const PresentedModule& M,
                                  const std::vector<ModId>& carrier, ElemId a,
                                  std::uint32_t t);
Submodule gln_of_submodule(const Submodule& N, const RingElement& a,
                           std::uint32_t t);

struct AtReducedReport {
  bool reduced = false;
  /// (m, k): a^k m = 0 with k >= t while a^t m != 0.
  std::optional<std::pair<ModuleElement, std::uint32_t>> witness;
};

/// True iff a^t * (a-torsion of M) vanishes; cross-checked against the
/// definitional loop over all elements and exponents up to stabilization,
/// which also produces the witness.
AtReducedReport is_at_reduced(const PresentedModule& M, const RingElement& a,
                              std::uint32_t t);
bool at_reduced_within(const PresentedModule& M,
                       const std::vector<ModId>& carrier, ElemId a,
                       std::uint32_t t);

struct EpsReducedReport {
  bool reduced = false;
  std::optional<RingElement> witness;  // first failing scalar
};

EpsReducedReport is_eps_reduced(const PresentedModule& M, std::uint32_t t);
inline EpsReducedReport is_reduced(const PresentedModule& M) {
  return is_eps_reduced(M, 1);
}
std::optional<ElemId> eps_violation_within(const PresentedModule& M,
                                           const std::vector<ModId>& carrier,
                                           std::uint32_t t);

/// One instance of the multi-route reducedness check. Every route is
/// evaluated independently; they agree on every consistent instance.
struct ReducednessReport {
  RingElement scalar;
  std::uint32_t t = 1;
  std::uint64_t module_size = 0;
  bool definitional = false;        // a^k m = 0 (k >= t) forces a^t m = 0
  bool gln_zero = false;            // a^t Gamma_a(M) = 0
  bool ann_stabilizes = false;      // (0:a^k) = (0:a^t) for k >= t
  bool hom_card_matches = false;    // |Hom(R/I^k,M)| constant for k >= t
  bool hom_limit_matches = false;   // eval image of Hom(R/I^t,M) = Gamma_a(M)
  bool gamma_equals_ann_t = false;  // Gamma_a(M) = (0:a^t)
  bool sequence_exact = false;      // 0 -> Gamma_a(M) -> M -> a^t M -> 0
  bool consistent = false;          // all routes returned the same verdict
  std::uint32_t stabilization_index = 0;
  std::optional<ModuleElement> witness;
};

ReducednessReport verify_equivalences(const PresentedModule& M,
                                      const RingElement& a, std::uint32_t t);

/// Shares the annihilator chain and hom enumerations across several t
/// values; each report equals the standalone computation.
std::vector<ReducednessReport> verify_equivalences_sweep(
    const PresentedModule& M, const RingElement& a,
    const std::vector<std::uint32_t>& ts);

struct StratifyReport {
  bool matches = false;
  std::vector<RingElement> union_strata;  // union over a of a*Gamma_a(R)
  std::vector<RingElement> nilpotents;
};

/// Checks that the union of the degree-one strata recovers the nilradical.
StratifyReport stratify_audit(const FiniteRing& R);

struct FunctorAuditReport {
  bool preradical_ok = false;      // f(gln(M)) inside gln(N) for partner homs
  bool radical_ok = false;         // gln(M / gln(M)) = 0
  bool characteristic_ok = false;  // automorphisms map gln(M) into itself
  bool factor_ok = false;          // submodule / factor containments
  bool ideal_action_ok = false;    // gln(R)M inside gln(M), equal on frees
  bool composition_ok = false;     // t-fold iterate at exponent 1
  bool factor_strict = false;      // some containment was strict
  std::vector<std::string> notes;
  bool all_ok() const {
    return preradical_ok && radical_ok && characteristic_ok && factor_ok &&
           ideal_action_ok && composition_ok;
  }
};

FunctorAuditReport functor_audit(const PresentedModule& M,
                                 const RingElement& a, std::uint32_t t);
FunctorAuditReport functor_audit(const PresentedModule& M,
                                 const RingElement& a, std::uint32_t t,
                                 const std::vector<PresentedModule>& partners);

/// Runs the functor audit for every (scalar, t) combination, sharing the
/// scalar-independent structures (submodule family, factor quotients,
/// partner hom sets). Reports are ordered scalar-major and equal the
/// standalone audits.
std::vector<FunctorAuditReport> functor_audit_sweep(
    const PresentedModule& M, const std::vector<ElemId>& scalars,
    const std::vector<std::uint32_t>& ts);

struct SumAuditReport {
  bool additive = false;
  std::uint64_t sum_gln_size = 0;
  std::string note;
};

/// gln of a finite direct sum against the direct sum of the parts' gln.
SumAuditReport sum_audit(const std::vector<PresentedModule>& parts,
                         const RingElement& a, std::uint32_t t);

}  // namespace redmod
