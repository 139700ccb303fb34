#pragma once

#include <string>
#include <vector>

#include "redmod/ideal.hpp"
#include "redmod/module.hpp"
#include "redmod/report.hpp"
#include "redmod/ring.hpp"

namespace redmod {

/// Configuration of the deterministic instance family used by the harness.
/// Regenerating a catalog from the same configuration yields the same
/// rings, modules and orderings.
struct CatalogConfig {
  std::uint64_t max_order = 32;
  bool include_poly_quotients = true;
  bool include_products = true;
  std::vector<std::uint32_t> t_values = {1, 2, 3};
  /// rank-2 module presentations are included while |R|^2 stays below this
  std::uint64_t rank2_raw_cap = 1024;

  Json to_json() const;
};

struct CatalogModule {
  std::string name;
  PresentedModule module;
};

struct CatalogRing {
  std::string name;
  FiniteRing ring;
  std::vector<Ideal> ideals;
  std::vector<CatalogModule> modules;
};

struct Catalog {
  CatalogConfig config;
  std::vector<CatalogRing> rings;
};

/// Z_n for 2 <= n <= 32, four fixed polynomial quotients and two fixed
/// products, filtered by max_order; per ring the regular module, every
/// proper cyclic quotient, and a few rank-2 presentations.
Catalog build_catalog(const CatalogConfig& config);

}  // namespace redmod
