#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redmod/catalog.hpp"
#include "redmod/report.hpp"

namespace redmod {

/// One harness run: a claim list evaluated either over the deterministic
/// catalog grid or over one explicit instance.
struct RunConfig {
  std::vector<std::string> claims;
  CatalogConfig catalog;
  std::optional<Json> instance_spec;   // explicit ring or module spec
  std::optional<Json> scalar_literal;  // explicit scalar, when given

  Json to_json() const;
};

/// All claim identifiers the harness accepts.
const std::vector<std::string>& all_claim_ids();

/// Resolves aliases and validates; throws BadConfig on unknown ids.
std::string canonical_claim_id(const std::string& id);

/// Claims whose failures are themselves recorded findings (rather than
/// harness errors) are exempt from the exit-code contract.
bool claim_expected_holds(const std::string& id);

RunReport run_report(const RunConfig& config);

/// Exit-code contract: true iff some expected-holds claim reported fails.
bool run_has_expected_failure(const RunReport& report);

/// Scans catalog rings of order <= max_order; returns every failing
/// instance of the claim, each re-verified by an independent definitional
/// oracle before emission.
std::vector<AuditReport> search_counterexamples(const std::string& claim,
                                                std::uint32_t t,
                                                std::uint64_t max_order);

}  // namespace redmod
