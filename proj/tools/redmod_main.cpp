#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "redmod/extensions.hpp"
#include "redmod/harness.hpp"
#include "redmod/specio.hpp"
#include "redmod/torsion.hpp"
#include "redmod/version.hpp"

namespace {

using redmod::Json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw redmod::BadConfig("cannot open output file: " + out_path);
  out << text;
}

std::vector<std::string> split_claims(const std::string& arg) {
  if (arg == "all") return redmod::all_claim_ids();
  std::vector<std::string> out;
  std::string cur;
  for (char c : arg) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw redmod::BadConfig("empty claim list");
  return out;
}

int emit_report(const redmod::RunConfig& config, const std::string& out_path) {
  const redmod::RunReport report = redmod::run_report(config);
  write_output(report.serialize(), out_path);
  return redmod::run_has_expected_failure(report) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring torsion and reducedness audit harness"};
  app.set_version_flag("--version",
                       std::string(redmod::kToolName) + " " +
                           redmod::kToolVersion);
  app.require_subcommand(1);

  std::string spec_path, claim, a_literal, out_path, claims_arg;
  std::uint32_t t = 1;
  std::uint64_t max_order = 32;

  CLI::App* check = app.add_subcommand(
      "check", "run one claim against an explicit ring or module spec");
  check->add_option("--spec", spec_path, "ring or module spec file (JSON)")
      ->required();
  check->add_option("--claim", claim, "claim id")->required();
  check->add_option("--a", a_literal, "scalar literal, e.g. [[2]] or 2");
  check->add_option("--t", t, "exponent (default 1)")->check(CLI::PositiveNumber);
  check->add_option("--out", out_path, "report path (default stdout)");

  CLI::App* gamma_cmd = app.add_subcommand(
      "gamma", "print the a-torsion submodule of a ring or module");
  gamma_cmd->add_option("--spec", spec_path, "ring or module spec file (JSON)")
      ->required();
  gamma_cmd->add_option("--a", a_literal, "scalar literal")->required();
  gamma_cmd->add_option("--t", t, "also print a^t Gamma_a (default: omit)");

  CLI::App* catalog_cmd = app.add_subcommand(
      "catalog", "run claims over the deterministic catalog grid");
  catalog_cmd->add_option("--max-order", max_order,
                          "largest ring order (default 32)");
  catalog_cmd->add_option("--claims", claims_arg, "comma list or 'all'")
      ->required();
  catalog_cmd->add_option("--t", t, "exponent (default 1)")->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--out", out_path, "report path (default stdout)");

  CLI::App* search_cmd = app.add_subcommand(
      "search", "scan the catalog for counterexamples to one claim");
  search_cmd->add_option("--claim", claim, "claim id")->required();
  search_cmd->add_option("--t", t, "exponent (default 1)")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-order", max_order,
                         "largest ring order (default 32)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      redmod::RunConfig config;
      config.claims = {claim};
      config.catalog.t_values = {t};
      config.instance_spec = redmod::load_json_file(spec_path);
      if (!a_literal.empty())
        config.scalar_literal = Json::parse(a_literal);
      return emit_report(config, out_path);
    }

    if (gamma_cmd->parsed()) {
      const Json spec = redmod::load_json_file(spec_path);
      const redmod::PresentedModule M = redmod::parse_instance_module(spec);
      const redmod::RingElement a =
          redmod::parse_element(M.ring(), Json::parse(a_literal));
      const redmod::Submodule G = redmod::gamma(M, a);
      Json out;
      out["ring"] = M.ring().name();
      out["a"] = redmod::element_json(M.ring(), a);
      Json gamma_elems = Json::array();
      std::string human;
      for (const redmod::ModuleElement& m : G.elements()) {
        gamma_elems.push_back(redmod::module_element_json(M, m));
        if (!human.empty()) human += ", ";
        human += M.element_str(m);
      }
      out["gamma"] = gamma_elems;
      out["gamma_str"] = "{" + human + "}";
      if (gamma_cmd->count("--t")) {
        const redmod::Submodule L = redmod::gln(M, a, t);
        Json gl = Json::array();
        std::string lh;
        for (const redmod::ModuleElement& m : L.elements()) {
          gl.push_back(redmod::module_element_json(M, m));
          if (!lh.empty()) lh += ", ";
          lh += M.element_str(m);
        }
        out["t"] = t;
        out["gln"] = gl;
        out["gln_str"] = "{" + lh + "}";
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (catalog_cmd->parsed()) {
      redmod::RunConfig config;
      config.claims = split_claims(claims_arg);
      config.catalog.max_order = max_order;
      config.catalog.t_values = {t};
      return emit_report(config, out_path);
    }

    if (search_cmd->parsed()) {
      const auto hits = redmod::search_counterexamples(claim, t, max_order);
      Json out = Json::array();
      for (const redmod::AuditReport& r : hits) out.push_back(r.to_json());
      std::cout << out.dump(2) << "\n";
      return !hits.empty() && redmod::claim_expected_holds(claim) ? 1 : 0;
    }
  } catch (const redmod::BadConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
