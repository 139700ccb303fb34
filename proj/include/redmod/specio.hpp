#pragma once

#include <string>

#include "redmod/module.hpp"
#include "redmod/report.hpp"
#include "redmod/ring.hpp"

namespace redmod {

/// {"components":[{"modulus":8,"monic_poly":[0,1]}]}; monic_poly is
/// constant-term first.
FiniteRing parse_ring_spec(const Json& spec);
Json ring_spec_json(const FiniteRing& R);

/// Element literal: array of per-component coefficient arrays, e.g. [[2]]
/// for 2 in Z_8. A bare integer is shorthand for single-component plain
/// residue rings. Literals are canonicalized (reduced mod n and mod f).
RingElement parse_element(const FiniteRing& R, const Json& literal);
Json element_json(const FiniteRing& R, const RingElement& e);

/// {"ring": <ring spec>, "rank": g, "relations": [[elem,...],...]}.
PresentedModule parse_module_spec(const Json& spec);
Json module_spec_json(const PresentedModule& M);

/// Sorted element list plus the generator list that produced it.
Json ideal_json(const Ideal& I);

Json module_element_json(const PresentedModule& M, const ModuleElement& m);

/// Accepts either a ring spec (regular module) or a module spec.
PresentedModule parse_instance_module(const Json& spec);

Json load_json_file(const std::string& path);

}  // namespace redmod
