#include "redmod/report.hpp"

#include <sstream>

namespace redmod {

const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::holds:
      return "holds";
    case AuditStatus::fails:
      return "fails";
    case AuditStatus::hypothesis_not_met:
      return "hypothesis_not_met";
  }
  return "unknown";
}

Json AuditReport::to_json() const {
  Json j;
  j["claim"] = claim;
  j["instance"] = instance;
  j["status"] = to_string(status);
  if (witness) j["witness"] = *witness;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::uint64_t RunReport::count(AuditStatus s) const {
  std::uint64_t n = 0;
  for (const AuditReport& r : results)
    if (r.status == s) ++n;
  return n;
}

Json RunReport::to_json() const {
  Json j;
  j["tool"] = tool;
  j["version"] = version;
  j["configuration"] = configuration;
  Json rs = Json::array();
  for (const AuditReport& r : results) rs.push_back(r.to_json());
  j["results"] = std::move(rs);
  j["summary"] = Json{{"holds", count(AuditStatus::holds)},
                      {"fails", count(AuditStatus::fails)},
                      {"hypothesis_not_met",
                       count(AuditStatus::hypothesis_not_met)}};
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string RunReport::serialize() const { return to_json().dump(2) + "\n"; }

std::string strip_wall_time(const std::string& serialized) {
  std::istringstream in(serialized);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"wall_time_ms\"") != std::string::npos) continue;
    out << line << "\n";
  }
  return out.str();
}

}  // namespace redmod
