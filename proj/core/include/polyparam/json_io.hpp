// JSON views of models and synthesis results (nlohmann::json).
#pragma once

#include <json.hpp>

#include "polyparam/parser.hpp"
#include "polyparam/synthesis.hpp"

namespace polyparam::io {

nlohmann::json model_to_json(const pta::PTA& a);

// Algorithm name, property text, status, stats and the result disjuncts
// (each an array of constraint strings).
nlohmann::json result_to_json(const pta::PTA& a, const pta::Property& prop,
                              const std::string& algorithm,
                              const synth::SynthesisResult& r);

// Inverse of the "result" field: rebuilds the set from constraint strings.
// Throws std::invalid_argument on text that is not canonical row syntax.
poly::PolyhedralSet result_from_json(const nlohmann::json& j,
                                     poly::VarSpacePtr space);

}  // namespace polyparam::io
