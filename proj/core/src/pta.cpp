#include "polyparam/pta.hpp"

#include <set>
#include <stdexcept>

namespace polyparam::pta {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_names(const std::vector<std::string>& names, const char* what,
                 ValidationReport& rep) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) rep.errors.push_back(std::string("empty ") + what + " name");
    else if (!seen.insert(n).second)
      rep.errors.push_back(std::string("duplicate ") + what + " name: " + n);
  }
}

void check_guard(const Guard& g, const PTA& a, const std::string& where,
                 ValidationReport& rep) {
  for (const auto& atom : g) {
    if (atom.clock >= a.clocks.size())
      rep.errors.push_back("clock index out of range in " + where);
    if (atom.rhs.coeffs.size() != a.params.size())
      rep.errors.push_back("parameter arity mismatch in " + where);
  }
}

}  // namespace

ValidationReport validate(const PTA& a) {
  ValidationReport rep;
  check_names(a.clocks, "clock", rep);
  check_names(a.params, "parameter", rep);
  check_names(a.locations, "location", rep);
  check_names(a.actions, "action", rep);
  {
    std::set<std::string> vars(a.clocks.begin(), a.clocks.end());
    for (const auto& p : a.params)
      if (vars.count(p))
        rep.errors.push_back("name used as both clock and parameter: " + p);
  }
  if (a.locations.empty()) rep.errors.push_back("no locations");
  if (a.initial_location >= a.locations.size())
    rep.errors.push_back("initial location out of range");
  if (a.invariants.size() != a.locations.size())
    rep.errors.push_back("invariant table size mismatch");
  if (a.domain.lower.size() != a.params.size() ||
      a.domain.upper.size() != a.params.size()) {
    rep.errors.push_back("domain arity mismatch");
  } else {
    for (size_t i = 0; i < a.params.size(); ++i) {
      if (a.domain.lower[i] < 0)
        rep.errors.push_back("negative domain bound for " + a.params[i]);
      if (a.domain.lower[i] > a.domain.upper[i])
        rep.errors.push_back("empty domain interval for " + a.params[i]);
    }
  }
  for (size_t i = 0; i < a.invariants.size(); ++i)
    check_guard(a.invariants[i], a, "invariant of " +
                (i < a.locations.size() ? a.locations[i] : "?"), rep);
  for (const auto& e : a.edges) {
    if (e.source >= a.locations.size() || e.target >= a.locations.size())
      rep.errors.push_back("edge endpoint out of range");
    if (e.action >= a.actions.size())
      rep.errors.push_back("edge action out of range");
    check_guard(e.guard, a, "edge guard", rep);
    std::set<size_t> rs;
    for (size_t x : e.resets) {
      if (x >= a.clocks.size())
        rep.errors.push_back("reset of unknown clock");
      else if (!rs.insert(x).second)
        rep.errors.push_back("duplicate reset of " + a.clocks[x]);
    }
  }
  if (a.edges.empty())
    rep.warnings.push_back("model has no edges");
  return rep;
}

Int atom_bound(const ParamTerm& t, const ParamDomain& d) {
  Int acc = t.constant;
  for (size_t i = 0; i < t.coeffs.size(); ++i)
    acc += t.coeffs[i] * (t.coeffs[i] > 0 ? d.upper[i] : d.lower[i]);
  return acc;
}

Int max_constant(const PTA& a) {
  Int best = 0;
  auto consider = [&best](const Int& v) {
    if (v > best) best = v;
  };
  for (const auto& g : a.invariants)
    for (const auto& atom : g) consider(atom_bound(atom.rhs, a.domain));
  for (const auto& e : a.edges)
    for (const auto& atom : e.guard) consider(atom_bound(atom.rhs, a.domain));
  for (const auto& u : a.domain.upper) consider(u);
  return best + 1;
}

bool in_domain(const ParamDomain& d, const std::vector<Rational>& v) {
  if (v.size() != d.lower.size()) return false;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < d.lower[i] || v[i] > d.upper[i]) return false;
  return true;
}

ConcreteTA instantiate(const PTA& a, const std::vector<Rational>& v) {
  require(v.size() == a.params.size(), "valuation arity mismatch");
  require(in_domain(a.domain, v), "valuation outside the parameter domain");
  std::vector<std::vector<Rational>> inv_bounds(a.invariants.size());
  std::vector<std::vector<Rational>> guard_bounds(a.edges.size());
  Int den = 1;
  auto eval = [&](const ParamTerm& t) {
    Rational acc(t.constant);
    for (size_t i = 0; i < t.coeffs.size(); ++i)
      acc += Rational(t.coeffs[i]) * v[i];
    den = poly::lcm(den, acc.get_den());
    return acc;
  };
  for (size_t i = 0; i < a.invariants.size(); ++i)
    for (const auto& atom : a.invariants[i])
      inv_bounds[i].push_back(eval(atom.rhs));
  for (size_t i = 0; i < a.edges.size(); ++i)
    for (const auto& atom : a.edges[i].guard)
      guard_bounds[i].push_back(eval(atom.rhs));

  ConcreteTA ta;
  ta.clocks = a.clocks;
  ta.locations = a.locations;
  ta.actions = a.actions;
  ta.initial_location = a.initial_location;
  ta.scale = den;
  auto to_int = [&den](const Rational& r) {
    Rational s = r * Rational(den);
    return Int(s.get_num());
  };
  ta.invariants.resize(a.invariants.size());
  for (size_t i = 0; i < a.invariants.size(); ++i)
    for (size_t k = 0; k < a.invariants[i].size(); ++k)
      ta.invariants[i].push_back(ConcreteAtom{a.invariants[i][k].clock,
                                              a.invariants[i][k].op,
                                              to_int(inv_bounds[i][k])});
  for (size_t i = 0; i < a.edges.size(); ++i) {
    const Edge& e = a.edges[i];
    ConcreteEdge ce;
    ce.source = e.source;
    ce.action = e.action;
    ce.resets = e.resets;
    ce.target = e.target;
    for (size_t k = 0; k < e.guard.size(); ++k)
      ce.guard.push_back(
          ConcreteAtom{e.guard[k].clock, e.guard[k].op, to_int(guard_bounds[i][k])});
    ta.edges.push_back(std::move(ce));
  }
  return ta;
}

}  // namespace polyparam::pta
