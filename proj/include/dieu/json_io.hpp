#pragma once

// JSON encodings of towers, elements, modules and invariant reports.
//
//   tower:    {"p", "f", "e", "ext", "N", "modulus": [...], "eisenstein": [...]?}
//   WittElem: little-endian coefficient array, integers in [0, p^N)
//   RamElem:  array of e WittElems (coefficients of 1, pi, ..., pi^(e-1))
//   module:   {"tower", "matrices": f x 2 x 2 RamElems, "delta": [...] | null,
//              "mode": "separable" | "general", "precision"?}
//
// Decoding failures throw Error(parse).

#include <memory>

#include "json.hpp"

#include "dieu/constructions.hpp"
#include "dieu/hecke.hpp"
#include "dieu/invariants.hpp"
#include "dieu/strata.hpp"

namespace dieu {

using json = nlohmann::ordered_json;

json to_json(const CoeffTower& t);
std::shared_ptr<const CoeffTower> tower_from_json(const json& j);

json to_json(const WittElem& w);
json to_json(const RamElem& x);
WittElem witt_from_json(const CoeffTower& t, const json& j);
RamElem ram_from_json(const CoeffTower& t, const json& j);

json to_json(const DModule& M);
DModule module_from_json(const json& j);
// Parses text; syntax errors are reported as Error(parse).
// Parses a module, or the {"module": ...} envelope produced by the construct command.
DModule module_from_text(const std::string& text);

json to_json(const NewtonPoint& n);
json to_json(const Flags& f);
json to_json(const StratumRecord& r);
json to_json(const ATypePoset& P);
json to_json(const VarietyReport& R);
json to_json(const StablePlane& P);

// {lie_type, a_type, a_number, a_index, reduced_a_number, newton, flags}.
// The oracle is authoritative; the fast value is reported next to it.
json invariant_report(const DModule& M);

json error_json(const std::exception& e);

}  // namespace dieu
