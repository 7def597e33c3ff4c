// Ground-truth model checking of concrete timed automata, used to validate
// synthesized parameter sets valuation by valuation.
//
// The zone graph is built over clock-only polyhedra with the same per-clock
// bounded extrapolation as the symbolic side (split into convex pieces), so
// it is finite; constraints are single-clock, which makes every added point
// untimed-bisimilar to a genuinely reachable one.  On top of it:
//  - reachable: some node carries a goal location;
//  - unavoidable: no goal-free lasso and no goal-free node keeping a point
//    with no delay+edge step out;
//  - trace_equal: the untimed (action, target-location) languages coincide,
//    compared on determinized zone graphs.
#pragma once

#include <utility>
#include <vector>

#include "polyparam/parser.hpp"
#include "polyparam/polyhedron.hpp"
#include "polyparam/pta.hpp"

namespace polyparam::oracle {

using poly::Int;
using poly::Polyhedron;
using poly::Rational;

struct ZoneNode {
  size_t location = 0;
  Polyhedron zone;  // clocks only
};

struct ZoneGraph {
  poly::VarSpacePtr space;  // clocks only
  Int m{0};
  std::vector<ZoneNode> nodes;  // initial nodes first
  size_t initial_count = 0;
  // out[n] = (model edge index, successor node) pairs
  std::vector<std::vector<std::pair<size_t, size_t>>> out;
};

ZoneGraph build_zone_graph(const pta::ConcreteTA& t);

bool reachable(const pta::ConcreteTA& t, const std::vector<size_t>& goals);

// Every maximal run visits a goal.  An automaton without a legal initial
// state fails, matching the synthesis side's empty answer there.
bool unavoidable(const pta::ConcreteTA& t, const std::vector<size_t>& goals);

// Untimed trace languages coincide.  Two automata without initial states
// agree; exactly one without does not.
bool trace_equal(const pta::ConcreteTA& t1, const pta::ConcreteTA& t2);

// Breadth-first reachability on raw zones, no extrapolation, cut at `depth`
// combined steps; cross-checks the abstraction on small models.
bool reachable_bounded(const pta::ConcreteTA& t,
                       const std::vector<size_t>& goals, size_t depth);

// Verdict for one property at one valuation inside the domain box.
bool holds(const pta::PTA& a, const pta::Property& prop,
           const std::vector<Rational>& v);

}  // namespace polyparam::oracle
