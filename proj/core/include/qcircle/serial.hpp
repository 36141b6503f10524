#pragma once

#include "qcircle/circle.hpp"
#include "qcircle/completion.hpp"
#include "qcircle/factors.hpp"
#include "qcircle/pl_aut.hpp"
#include "qcircle/witness.hpp"

#include <nlohmann/json.hpp>

namespace qcircle {

// JSON wire formats, version 1; the schemas are documented in
// docs/wire-format.md. Emission is canonical: parse(emit(x)) == x and
// emit(parse(emit(x))) == emit(x) on every supported value.

using Json = nlohmann::json;

Json to_json(const RatPoint& p);          // "p/q"
Json to_json(const Interval& iv);         // {"kind":..., "left":..., "right":...}
Json to_json(const PLAut& g);             // [["p/q","r/s"], ...]
Json to_json(const Cycle& nu);            // ["p/q", ...]
Json to_json(const CoveringCell& cell);   // {"point":...} | {"open":[...]}
Json to_json(const Covering& c);          // {"variant":..., "cells":[...]}
Json to_json(const MoveSet& m);           // {"full_circle":..., "arcs":[cell...]}
Json to_json(const IrrPoint& u, int prefix_len = 0);
Json to_json(const CompletionPoint& x, int prefix_len = 0);
Json to_json(const LazyAut& t);           // {"pairs":[[irr,irr],...], "fixing":irr?}
Json to_json(const NbhdDescriptor& d);    // {"pointwise":[...]} | {"cycle":[...]}
Json to_json(const FactorTarget& t);
Json to_json(const WordWitness& w);
Json to_json(const U1Witness& w);
Json to_json(const MaximalityWitness& w);
Json to_json(const ConjugationReport& r);
Json to_json(const OrderAxiomReport& r);

RatPoint ratpoint_from_json(const Json& j);
PLAut plaut_from_json(const Json& j);
Cycle cycle_from_json(const Json& j);
IrrPoint irr_from_json(const Json& j);
CompletionPoint completion_from_json(const Json& j);
LazyAut lazy_from_json(const Json& j, int refinement_cap = kDefaultRefinementCap);
CoveringVariant covering_variant_from_json(const Json& j);
NbhdDescriptor nbhd_from_json(const Json& j);
FactorTarget factor_target_from_json(const Json& j);
WordWitness witness_from_json(const Json& j);

}  // namespace qcircle
