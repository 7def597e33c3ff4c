// Graphviz views: the automaton itself, or a recorded exploration tree.
#pragma once

#include <string>

#include "polyparam/pta.hpp"
#include "polyparam/synthesis.hpp"

namespace polyparam::io {

std::string model_dot(const pta::PTA& a);
std::string trace_dot(const pta::PTA& a, const synth::ExplorationTrace& tr);

}  // namespace polyparam::io
