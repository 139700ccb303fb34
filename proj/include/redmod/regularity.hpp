#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redmod/ideal.hpp"
#include "redmod/report.hpp"
#include "redmod/ring.hpp"

namespace redmod {

/// Witness data for the t-regularity decision. Every stored pair (a, b)
/// satisfies a^t = a^{2t} b (resp. a^t = a^{t+1} b for the Azumaya form);
/// both forms are decided and must agree element by element.
struct RegularityCertificate {
  std::uint32_t t = 1;
  std::vector<std::pair<RingElement, RingElement>> witnesses;          // a^t = a^{2t} b
  std::vector<std::pair<RingElement, RingElement>> azumaya_witnesses;  // a^t = a^{t+1} b
  std::optional<RingElement> failing_a;

  bool holds() const { return !failing_a.has_value(); }
};

/// Brute-force witness search per element, least witness first.
RegularityCertificate is_t_regular(const FiniteRing& R, std::uint32_t t);

/// Stable claim identifiers accepted by claim_audit.
const std::vector<std::string>& regularity_claim_ids();

/// Audits one ring-level claim. Claims with hypotheses report
/// hypothesis_not_met when the hypothesis fails, with the conclusion still
/// computed and recorded in the notes. A failing status carries a minimal,
/// re-checkable witness.
AuditReport claim_audit(const FiniteRing& R, std::uint32_t t,
                        const std::string& claim_id);

}  // namespace redmod
