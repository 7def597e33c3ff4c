// Parameter synthesis by depth-first exploration of the symbolic semantics.
//
// Three properties (reachability, unavoidability, trace preservation), each
// in up to three flavours:
//  - Hull: path-local pruning on integer-hulled extrapolated state keys;
//    terminating, exact on integer valuations, sound on rational ones.
//  - Integer: same pruning, with goal/blocking contributions integer-hulled
//    as well; exact on integer valuations only.
//  - Reference: pruning on raw symbolic states along the path, bounded by a
//    state budget; may stop early with a partial result.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "polyparam/parser.hpp"
#include "polyparam/poly_set.hpp"
#include "polyparam/pta.hpp"

namespace polyparam::synth {

using poly::Int;
using poly::PolyhedralSet;
using poly::Rational;

enum class Variant { Hull, Reference, Integer };

struct SynthesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SynthesisRequest {
  pta::PropertyKind property = pta::PropertyKind::Reach;
  Variant variant = Variant::Hull;
  std::vector<size_t> goals;            // Reach / Unavoid
  std::vector<Rational> v0;             // TracePreserve
  std::optional<uint64_t> budget;       // Reference only; default 10000
  bool record_trace = false;
};

enum class SynthStatus { Complete, BudgetExhausted };

struct SynthesisStats {
  uint64_t states_explored = 0;
  uint64_t passed_hits = 0;
  Int max_const{0};
  double wall_ms = 0;
};

struct TraceNode {
  size_t id = 0;
  size_t location = 0;
  std::string zone_text;
  enum class Kind { Expanded, Goal, Pruned, Incompatible } kind = Kind::Expanded;
  std::optional<size_t> match;  // Pruned only: the path node whose key it hit
};

struct TraceEdge {
  size_t from = 0, to = 0;
  size_t model_edge = 0;
};

struct ExplorationTrace {
  std::vector<TraceNode> nodes;
  std::vector<TraceEdge> edges;
};

struct SynthesisResult {
  PolyhedralSet result;  // over the parameter space, within the domain box
  SynthStatus status = SynthStatus::Complete;
  SynthesisStats stats;
  std::shared_ptr<ExplorationTrace> trace;
};

// Maximum states any run may explore before failing hard; overridable via
// the POLYPARAM_STATE_CEILING environment variable.
uint64_t state_ceiling();

SynthesisResult run_synthesis(const pta::PTA& a, const SynthesisRequest& req);

// Short algorithm names: rief/riaf/ritp, ef/af/tp, ief/iaf.
std::string algorithm_name(pta::PropertyKind p, Variant v);
// Throws std::invalid_argument for unknown names (e.g. there is no "itp").
std::pair<pta::PropertyKind, Variant> algorithm_from_name(const std::string&);

}  // namespace polyparam::synth
