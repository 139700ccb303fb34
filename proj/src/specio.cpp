#include "redmod/specio.hpp"

#include <fstream>

namespace redmod {

FiniteRing parse_ring_spec(const Json& spec) {
  if (!spec.is_object() || !spec.contains("components") ||
      !spec["components"].is_array() || spec["components"].empty())
    throw BadConfig("ring spec must contain a non-empty components array");
  std::vector<RingComponent> comps;
  for (const Json& c : spec["components"]) {
    if (!c.is_object() || !c.contains("modulus"))
      throw BadConfig("ring component needs a modulus");
    RingComponent comp;
    comp.modulus = c["modulus"].get<std::uint64_t>();
    if (c.contains("monic_poly")) {
      for (const Json& v : c["monic_poly"])
        comp.poly.push_back(v.get<std::uint64_t>());
    } else {
      comp.poly = {0, 1};  // plain residue ring
    }
    comps.push_back(std::move(comp));
  }
  return ring_make(std::move(comps));
}

Json ring_spec_json(const FiniteRing& R) {
  Json comps = Json::array();
  for (const RingComponent& c : R.components())
    comps.push_back(Json{{"modulus", c.modulus}, {"monic_poly", c.poly}});
  return Json{{"components", std::move(comps)}};
}

RingElement parse_element(const FiniteRing& R, const Json& literal) {
  if (literal.is_number_integer()) {
    if (R.components().size() != 1 ||
        R.components()[0].poly != std::vector<std::uint64_t>{0, 1})
      throw BadConfig(
          "bare integer element literals require a single-component plain "
          "residue ring");
    return R.canonicalize({{literal.get<std::int64_t>()}});
  }
  if (!literal.is_array())
    throw BadConfig("element literal must be an integer or nested arrays");
  std::vector<std::vector<std::int64_t>> raw;
  for (const Json& comp : literal) {
    if (!comp.is_array())
      throw BadConfig("element literal components must be arrays");
    std::vector<std::int64_t> coeffs;
    for (const Json& v : comp) coeffs.push_back(v.get<std::int64_t>());
    raw.push_back(std::move(coeffs));
  }
  return R.canonicalize(raw);
}

Json element_json(const FiniteRing& R, const RingElement& e) {
  R.check_element(e);
  Json out = Json::array();
  std::size_t off = 0;
  for (const RingComponent& c : R.components()) {
    Json comp = Json::array();
    for (std::size_t j = 0; j < c.degree(); ++j)
      comp.push_back(e.coeffs()[off + j]);
    out.push_back(std::move(comp));
    off += c.degree();
  }
  return out;
}

PresentedModule parse_module_spec(const Json& spec) {
  if (!spec.is_object() || !spec.contains("ring"))
    throw BadConfig("module spec must contain a ring");
  const FiniteRing R = parse_ring_spec(spec["ring"]);
  const std::size_t g =
      spec.contains("rank") ? spec["rank"].get<std::size_t>() : 1;
  std::vector<ModVec> relations;
  if (spec.contains("relations")) {
    for (const Json& rel : spec["relations"]) {
      if (!rel.is_array() || rel.size() != g)
        throw BadConfig("each relation must list one element per generator");
      ModVec v;
      for (const Json& entry : rel) v.push_back(parse_element(R, entry));
      relations.push_back(std::move(v));
    }
  }
  return module_present(R, g, std::move(relations));
}

Json module_spec_json(const PresentedModule& M) {
  Json rels = Json::array();
  for (const ModVec& rel : M.relations()) {
    Json r = Json::array();
    for (const RingElement& e : rel) r.push_back(element_json(M.ring(), e));
    rels.push_back(std::move(r));
  }
  return Json{{"ring", ring_spec_json(M.ring())},
              {"rank", M.generator_count()},
              {"relations", std::move(rels)}};
}

Json module_element_json(const PresentedModule& M, const ModuleElement& m) {
  Json out = Json::array();
  for (const RingElement& e : m.rep()) out.push_back(element_json(M.ring(), e));
  return out;
}

Json ideal_json(const Ideal& I) {
  Json elems = Json::array(), gens = Json::array();
  for (const RingElement& e : I.elements())
    elems.push_back(element_json(I.ring(), e));
  for (const RingElement& g : I.generators())
    gens.push_back(element_json(I.ring(), g));
  return Json{{"name", I.name()},
              {"generators", std::move(gens)},
              {"elements", std::move(elems)}};
}

PresentedModule parse_instance_module(const Json& spec) {
  if (spec.is_object() && spec.contains("components"))
    return regular_module(parse_ring_spec(spec));
  return parse_module_spec(spec);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadConfig("cannot open spec file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw BadConfig("cannot parse JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace redmod
