#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace redmod {

using Json = nlohmann::ordered_json;

enum class AuditStatus { holds, fails, hypothesis_not_met };

const char* to_string(AuditStatus s);

/// Outcome of checking one claim on one instance. A failing status always
/// carries a re-checkable witness.
struct AuditReport {
  std::string claim;
  Json instance;
  AuditStatus status = AuditStatus::holds;
  std::optional<Json> witness;
  std::string notes;

  Json to_json() const;
};

/// One harness run: configuration echo, ordered per-claim results, tallied
/// summary. Serialization is byte-stable apart from the wall time field.
struct RunReport {
  std::string tool;
  std::string version;
  Json configuration;
  std::vector<AuditReport> results;
  std::uint64_t wall_time_ms = 0;

  std::uint64_t count(AuditStatus s) const;
  Json to_json() const;
  std::string serialize() const;
};

/// Serialization with the wall time line removed, for byte-for-byte
/// determinism comparisons.
std::string strip_wall_time(const std::string& serialized);

}  // namespace redmod
