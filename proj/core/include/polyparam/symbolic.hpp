// Symbolic semantics over clock+parameter polyhedra: initial state,
// edge successor, per-clock bounded extrapolation, integer-hulled state
// keys, and valuation compatibility.
#pragma once

#include <optional>
#include <string>

#include "polyparam/poly_set.hpp"
#include "polyparam/pta.hpp"

namespace polyparam::symbolic {

using poly::Int;
using poly::Polyhedron;
using poly::PolyhedralSet;
using poly::Rational;

struct SymbolicState {
  size_t location = 0;
  Polyhedron zone;  // over clocks + parameters
};

poly::AtomicConstraint atom_row(const poly::VarSpace& space,
                                const pta::ClockAtom& atom);
std::vector<poly::AtomicConstraint> guard_rows(const poly::VarSpace& space,
                                               const pta::Guard& g);
// The parameter domain box as constraint rows over the full space.
std::vector<poly::AtomicConstraint> domain_rows(const poly::VarSpace& space,
                                                const pta::ParamDomain& d);

// Initial state: clocks at zero, parameters confined to the domain box,
// elapsed under the initial invariant.  nullopt when that is empty.
std::optional<SymbolicState> initial_state(const pta::PTA& a);

// Guard, reset, target invariant, elapse, target invariant again.
std::optional<SymbolicState> successor(const pta::PTA& a,
                                       const SymbolicState& s,
                                       const pta::Edge& e);

// Split at M for one clock (closed variant): the part with x <= M stays,
// the part reaching x >= M forgets x above M.
PolyhedralSet extrapolate_clock(const Polyhedron& zone, size_t clock,
                                const Int& m);

// Composition over every clock in declaration order (order-insensitive as a
// set).  At most 2^|clocks| disjuncts.
PolyhedralSet extrapolate(const Polyhedron& zone, size_t clock_count,
                          const Int& m);

// Extrapolated then integer-hulled per disjunct; `text` is a rendering of
// the hulled set used as a cheap pre-filter for key equality.
struct StateKey {
  size_t location = 0;
  PolyhedralSet hulled;
  std::string text;
};

StateKey hull_key(const SymbolicState& s, const Int& m);
bool key_equal(const StateKey& a, const StateKey& b);

// v is compatible with a state if it lies in the parameter projection.
bool v_compatible(const SymbolicState& s, const std::vector<Rational>& v);

}  // namespace polyparam::symbolic
