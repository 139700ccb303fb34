#include "redmod/catalog.hpp"

namespace redmod {

Json CatalogConfig::to_json() const {
  return Json{{"max_order", max_order},
              {"include_poly_quotients", include_poly_quotients},
              {"include_products", include_products},
              {"t_values", t_values},
              {"rank2_raw_cap", rank2_raw_cap}};
}

namespace {

std::vector<CatalogModule> build_modules(const CatalogRing& entry,
                                         const CatalogConfig& config) {
  const FiniteRing& R = entry.ring;
  std::vector<CatalogModule> mods;
  mods.push_back({"R", regular_module(R)});
  for (const Ideal& I : entry.ideals) {
    if (I.is_zero()) continue;  // R/(0) is the regular module
    mods.push_back({"R/" + I.name(), cyclic_quotient(R, I)});
  }
  if (R.order() * R.order() <= config.rank2_raw_cap) {
    mods.push_back({"R^2", module_present(R, 2, {})});
    // a non-free rank-2 presentation built on the least nonzero nilpotent
    for (const RingElement& e : nilradical(R).elements()) {
      if (R.index_of(e) == 0) continue;
      mods.push_back(
          {"R^2/<(" + R.element_str(e) + ",0)>",
           module_present(R, 2, {{e, R.zero()}})});
      mods.push_back(
          {"R^2/<(" + R.element_str(e) + "," + R.element_str(e) + ")>",
           module_present(R, 2, {{e, e}})});
      break;
    }
  }
  return mods;
}

}  // namespace

Catalog build_catalog(const CatalogConfig& config) {
  Catalog cat;
  cat.config = config;

  std::vector<FiniteRing> rings;
  for (std::uint64_t n = 2; n <= 32; ++n)
    if (n <= config.max_order) rings.push_back(make_zn(n));
  if (config.include_poly_quotients) {
    const std::vector<std::vector<RingComponent>> quotients = {
        {{2, {0, 0, 1}}},     // Z2[x]/(x^2)
        {{2, {1, 1, 1}}},     // Z2[x]/(x^2+x+1)
        {{4, {0, 0, 1}}},     // Z4[x]/(x^2)
        {{3, {1, 0, 1}}},     // Z3[x]/(x^2+1)
    };
    for (const auto& comps : quotients) {
      FiniteRing R = ring_make(comps);
      if (R.order() <= config.max_order) rings.push_back(std::move(R));
    }
  }
  if (config.include_products) {
    const std::vector<std::vector<RingComponent>> products = {
        {{2, {0, 1}}, {3, {0, 1}}},  // Z2 x Z3
        {{4, {0, 1}}, {2, {0, 1}}},  // Z4 x Z2
    };
    for (const auto& comps : products) {
      FiniteRing R = ring_make(comps);
      if (R.order() <= config.max_order) rings.push_back(std::move(R));
    }
  }

  for (FiniteRing& R : rings) {
    CatalogRing entry;
    entry.name = R.name();
    entry.ring = std::move(R);
    entry.ideals = enumerate_ideals(entry.ring);
    entry.modules = build_modules(entry, config);
    cat.rings.push_back(std::move(entry));
  }
  return cat;
}

}  // namespace redmod
