// Parametric timed automata over a bounded integer parameter domain, plus
// instantiation to concrete timed automata at a parameter valuation.
#pragma once

#include <string>
#include <vector>

#include "polyparam/rational.hpp"
#include "polyparam/var_space.hpp"

namespace polyparam::pta {

using poly::Int;
using poly::Rational;

enum class Cmp { LT, LE, EQ, GE, GT };

// Integer combination of the parameters plus a constant.
struct ParamTerm {
  std::vector<Int> coeffs;
  Int constant{0};
};

// clock op rhs -- the simple constraints guards and invariants are built of.
struct ClockAtom {
  size_t clock = 0;
  Cmp op = Cmp::LE;
  ParamTerm rhs;
};

using Guard = std::vector<ClockAtom>;  // conjunction, empty means true

struct Edge {
  size_t source = 0;
  Guard guard;
  size_t action = 0;
  std::vector<size_t> resets;  // clock indices
  size_t target = 0;
};

// Box of admissible integer parameter values, one [lower, upper] per
// parameter, bounds nonnegative.
struct ParamDomain {
  std::vector<Int> lower, upper;
};

struct PTA {
  std::string name;
  std::vector<std::string> clocks;
  std::vector<std::string> params;
  std::vector<std::string> locations;
  std::vector<std::string> actions;
  size_t initial_location = 0;
  std::vector<Guard> invariants;  // indexed by location
  std::vector<Edge> edges;
  ParamDomain domain;

  poly::VarSpacePtr space() const {
    return poly::VarSpace::make(clocks, params);
  }
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

ValidationReport validate(const PTA& a);

// Largest value the right-hand side can take over the domain box (may be
// negative for terms that stay negative).
Int atom_bound(const ParamTerm& t, const ParamDomain& d);

// Extrapolation constant: one more than the largest constant any clock can
// meaningfully be compared against -- guard/invariant bounds maximized over
// the domain box and the parameter upper bounds themselves, floored at 0.
Int max_constant(const PTA& a);

// --- concrete semantics side ---

struct ConcreteAtom {
  size_t clock = 0;
  Cmp op = Cmp::LE;
  Int bound;
};

struct ConcreteEdge {
  size_t source = 0;
  std::vector<ConcreteAtom> guard;
  size_t action = 0;
  std::vector<size_t> resets;
  size_t target = 0;
};

// Timed automaton with integer constants.  Instantiating at a non-integer
// valuation rescales time by the common denominator (untimed behaviour is
// unaffected); `scale` records the factor.
struct ConcreteTA {
  std::vector<std::string> clocks;
  std::vector<std::string> locations;
  std::vector<std::string> actions;
  size_t initial_location = 0;
  std::vector<std::vector<ConcreteAtom>> invariants;
  std::vector<ConcreteEdge> edges;
  Int scale{1};
};

// Requires v inside the domain box (throws std::invalid_argument otherwise).
ConcreteTA instantiate(const PTA& a, const std::vector<Rational>& v);

bool in_domain(const ParamDomain& d, const std::vector<Rational>& v);

}  // namespace polyparam::pta
