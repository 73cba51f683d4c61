// json_io.hpp -- stable JSON encodings of the engine's value types.

#pragma once

#include <json.hpp>

#include "supercup/fusion.hpp"
#include "supercup/kac.hpp"

namespace supercup {

using nlohmann::json;

json to_json(const SuperWeight& w);
SuperWeight weight_from_json(const json& j);

json to_json(const WeightDiagram& d);
WeightDiagram diagram_from_json(const json& j);

json to_json(const SignedDecomposition& dec);
SignedDecomposition decomposition_from_json(const json& j);

json to_json(const PrincipalFusionSpec& spec);
PrincipalFusionSpec fusion_spec_from_json(const json& j);

json to_json(const SplitWeight& s);
json to_json(const SemisimpleImage& im);

json to_json(const FusionResult& r);
FusionResult fusion_result_from_json(const json& j);

json to_json(const DeterminantExpr& d);

json to_json(const KacBijectionReport& r);

}  // namespace supercup
