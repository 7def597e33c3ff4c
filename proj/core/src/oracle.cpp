#include "polyparam/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "polyparam/poly_set.hpp"
#include "polyparam/symbolic.hpp"

namespace polyparam::oracle {

namespace {

using poly::AtomicConstraint;
using poly::LinearTerm;
using poly::PolyhedralSet;
using pta::ConcreteTA;

poly::CmpOp to_cmp(pta::Cmp op) {
  switch (op) {
    case pta::Cmp::LT: return poly::CmpOp::LT;
    case pta::Cmp::LE: return poly::CmpOp::LE;
    case pta::Cmp::EQ: return poly::CmpOp::EQ;
    case pta::Cmp::GE: return poly::CmpOp::GE;
    case pta::Cmp::GT: return poly::CmpOp::GT;
  }
  return poly::CmpOp::LE;
}

std::vector<AtomicConstraint> atom_rows(
    size_t dim, const std::vector<pta::ConcreteAtom>& atoms) {
  std::vector<AtomicConstraint> rows;
  rows.reserve(atoms.size());
  for (const auto& a : atoms)
    rows.push_back(poly::make_constraint(LinearTerm::var(dim, a.clock),
                                         to_cmp(a.op),
                                         LinearTerm::number(dim, a.bound)));
  return rows;
}

Int extrapolation_bound(const ConcreteTA& t) {
  Int best = 0;
  auto see = [&](const std::vector<pta::ConcreteAtom>& atoms) {
    for (const auto& a : atoms)
      if (a.bound > best) best = a.bound;
  };
  for (const auto& inv : t.invariants) see(inv);
  for (const auto& e : t.edges) see(e.guard);
  return best + 1;
}

// Points whose reset lands inside the target invariant.
Polyhedron pre_reset(const Polyhedron& target_inv,
                     const std::vector<size_t>& resets, size_t dim) {
  std::vector<AtomicConstraint> zero;
  for (size_t r : resets)
    zero.push_back(poly::make_constraint(
        LinearTerm::var(dim, r), poly::CmpOp::EQ, LinearTerm::number(dim, 0)));
  Polyhedron p = target_inv.intersect_rows(zero);
  for (size_t r : resets) p = p.cylindrify(r);
  return p;
}

struct Builder {
  const ConcreteTA& t;
  ZoneGraph g;
  std::vector<std::vector<size_t>> by_loc;

  explicit Builder(const ConcreteTA& t_) : t(t_) {
    g.space = poly::VarSpace::make(t.clocks, {});
    g.m = extrapolation_bound(t);
    by_loc.resize(t.locations.size());
  }

  std::pair<size_t, bool> intern(size_t loc, Polyhedron z) {
    for (size_t i : by_loc[loc])
      if (g.nodes[i].zone.equals(z)) return {i, false};
    size_t id = g.nodes.size();
    g.nodes.push_back({loc, std::move(z)});
    g.out.emplace_back();
    by_loc[loc].push_back(id);
    return {id, true};
  }

  void run() {
    const size_t dim = g.space->dim();
    std::vector<AtomicConstraint> zero;
    for (size_t i = 0; i < dim; ++i)
      zero.push_back(poly::make_constraint(LinearTerm::var(dim, i),
                                           poly::CmpOp::EQ,
                                           LinearTerm::number(dim, 0)));
    auto inv_rows = [&](size_t loc) {
      return atom_rows(dim, t.invariants[loc]);
    };
    Polyhedron start = Polyhedron::from_constraints(g.space, zero)
                           .intersect_rows(inv_rows(t.initial_location));
    std::deque<size_t> work;
    if (!start.is_empty()) {
      Polyhedron init = start.time_elapse().intersect_rows(
          inv_rows(t.initial_location));
      for (const auto& piece :
           symbolic::extrapolate(init, dim, g.m).disjuncts()) {
        auto [id, fresh] = intern(t.initial_location, piece);
        if (fresh) work.push_back(id);
      }
    }
    g.initial_count = g.nodes.size();
    while (!work.empty()) {
      size_t n = work.front();
      work.pop_front();
      for (size_t ei = 0; ei < t.edges.size(); ++ei) {
        const auto& e = t.edges[ei];
        if (e.source != g.nodes[n].location) continue;
        Polyhedron w =
            g.nodes[n].zone.intersect_rows(atom_rows(dim, e.guard));
        if (w.is_empty()) continue;
        auto tgt_inv = inv_rows(e.target);
        w = w.reset(e.resets).intersect_rows(tgt_inv);
        if (w.is_empty()) continue;
        w = w.time_elapse().intersect_rows(tgt_inv);
        for (const auto& piece :
             symbolic::extrapolate(w, dim, g.m).disjuncts()) {
          auto [id, fresh] = intern(e.target, piece);
          g.out[n].push_back({ei, id});
          if (fresh) work.push_back(id);
        }
      }
    }
  }
};

std::vector<bool> goal_mask(const ConcreteTA& t,
                            const std::vector<size_t>& goals) {
  std::vector<bool> m(t.locations.size(), false);
  for (size_t x : goals) m[x] = true;
  return m;
}

// Nodes reachable from the goal-free initial nodes through goal-free nodes.
std::vector<size_t> avoiding_nodes(const ZoneGraph& g,
                                   const std::vector<bool>& is_goal) {
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<size_t> work;
  for (size_t i = 0; i < g.initial_count; ++i)
    if (!is_goal[g.nodes[i].location]) {
      seen[i] = true;
      work.push_back(i);
    }
  std::vector<size_t> found;
  while (!work.empty()) {
    size_t n = work.front();
    work.pop_front();
    found.push_back(n);
    for (auto [ei, to] : g.out[n]) {
      (void)ei;
      if (!seen[to] && !is_goal[g.nodes[to].location]) {
        seen[to] = true;
        work.push_back(to);
      }
    }
  }
  return found;
}

bool has_cycle(const ZoneGraph& g, const std::vector<size_t>& nodes,
               const std::vector<bool>& is_goal) {
  enum { White, Grey, Black };
  std::vector<int> color(g.nodes.size(), White);
  std::vector<std::pair<size_t, size_t>> stack;  // node, out index
  for (size_t root : nodes) {
    if (color[root] != White) continue;
    color[root] = Grey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      if (i == g.out[n].size()) {
        color[n] = Black;
        stack.pop_back();
        continue;
      }
      size_t to = g.out[n][i++].second;
      if (is_goal[g.nodes[to].location]) continue;
      if (color[to] == Grey) return true;
      if (color[to] == White) {
        color[to] = Grey;
        stack.push_back({to, 0});
      }
    }
  }
  return false;
}

// Part of the zone from which no delay reaches an enabled edge.
bool has_deadlock(const ConcreteTA& t, const ZoneGraph& g, size_t n) {
  const size_t dim = g.space->dim();
  const ZoneNode& node = g.nodes[n];
  std::vector<Polyhedron> escapes;
  for (const auto& e : t.edges) {
    if (e.source != node.location) continue;
    Polyhedron enabled =
        Polyhedron::from_constraints(g.space,
                                     atom_rows(dim, t.invariants[e.source]))
            .intersect_rows(atom_rows(dim, e.guard))
            .intersect(pre_reset(
                Polyhedron::from_constraints(
                    g.space, atom_rows(dim, t.invariants[e.target])),
                e.resets, dim));
    if (enabled.is_empty()) continue;
    escapes.push_back(enabled.time_past());
  }
  PolyhedralSet stuck = PolyhedralSet::of(node.zone).subtract(
      PolyhedralSet::from_disjuncts(g.space, std::move(escapes)));
  return !stuck.is_empty();
}

// Determinized comparison of the (action, target-location) languages.
using Label = std::pair<std::string, std::string>;

std::map<Label, std::set<size_t>> moves(const ConcreteTA& t,
                                        const ZoneGraph& g,
                                        const std::set<size_t>& from) {
  std::map<Label, std::set<size_t>> m;
  for (size_t n : from)
    for (auto [ei, to] : g.out[n]) {
      const auto& e = t.edges[ei];
      m[{t.actions[e.action], t.locations[e.target]}].insert(to);
    }
  return m;
}

std::string subset_key(const std::set<size_t>& a, const std::set<size_t>& b) {
  std::string k;
  for (size_t x : a) k += std::to_string(x) + ",";
  k += "|";
  for (size_t x : b) k += std::to_string(x) + ",";
  return k;
}

}  // namespace

ZoneGraph build_zone_graph(const ConcreteTA& t) {
  Builder b(t);
  b.run();
  return std::move(b.g);
}

bool reachable(const ConcreteTA& t, const std::vector<size_t>& goals) {
  ZoneGraph g = build_zone_graph(t);
  auto is_goal = goal_mask(t, goals);
  for (const auto& n : g.nodes)
    if (is_goal[n.location]) return true;
  return false;
}

bool unavoidable(const ConcreteTA& t, const std::vector<size_t>& goals) {
  ZoneGraph g = build_zone_graph(t);
  if (g.initial_count == 0) return false;
  auto is_goal = goal_mask(t, goals);
  std::vector<size_t> avoiding = avoiding_nodes(g, is_goal);
  if (has_cycle(g, avoiding, is_goal)) return false;
  for (size_t n : avoiding)
    if (has_deadlock(t, g, n)) return false;
  return true;
}

bool trace_equal(const ConcreteTA& t1, const ConcreteTA& t2) {
  ZoneGraph g1 = build_zone_graph(t1);
  ZoneGraph g2 = build_zone_graph(t2);
  const bool v1 = g1.initial_count > 0, v2 = g2.initial_count > 0;
  if (!v1 || !v2) return v1 == v2;
  if (t1.locations[t1.initial_location] != t2.locations[t2.initial_location])
    return false;
  std::set<size_t> s1, s2;
  for (size_t i = 0; i < g1.initial_count; ++i) s1.insert(i);
  for (size_t i = 0; i < g2.initial_count; ++i) s2.insert(i);
  std::set<std::string> seen;
  std::deque<std::pair<std::set<size_t>, std::set<size_t>>> work;
  seen.insert(subset_key(s1, s2));
  work.push_back({std::move(s1), std::move(s2)});
  while (!work.empty()) {
    auto [a, b] = std::move(work.front());
    work.pop_front();
    auto ma = moves(t1, g1, a);
    auto mb = moves(t2, g2, b);
    if (ma.size() != mb.size()) return false;
    auto ita = ma.begin();
    auto itb = mb.begin();
    for (; ita != ma.end(); ++ita, ++itb) {
      if (ita->first != itb->first) return false;
      std::string key = subset_key(ita->second, itb->second);
      if (seen.insert(key).second)
        work.push_back({ita->second, itb->second});
    }
  }
  return true;
}

bool reachable_bounded(const ConcreteTA& t, const std::vector<size_t>& goals,
                       size_t depth) {
  auto is_goal = goal_mask(t, goals);
  poly::VarSpacePtr space = poly::VarSpace::make(t.clocks, {});
  const size_t dim = space->dim();
  std::vector<AtomicConstraint> zero;
  for (size_t i = 0; i < dim; ++i)
    zero.push_back(poly::make_constraint(LinearTerm::var(dim, i),
                                         poly::CmpOp::EQ,
                                         LinearTerm::number(dim, 0)));
  auto inv_rows = [&](size_t loc) { return atom_rows(dim, t.invariants[loc]); };
  Polyhedron start = Polyhedron::from_constraints(space, zero)
                         .intersect_rows(inv_rows(t.initial_location));
  if (start.is_empty()) return false;
  Polyhedron init =
      start.time_elapse().intersect_rows(inv_rows(t.initial_location));
  if (is_goal[t.initial_location]) return true;

  std::vector<std::vector<Polyhedron>> by_loc(t.locations.size());
  std::deque<std::tuple<size_t, Polyhedron, size_t>> work;  // loc, zone, depth
  by_loc[t.initial_location].push_back(init);
  work.push_back({t.initial_location, std::move(init), 0});
  while (!work.empty()) {
    auto [loc, zone, d] = std::move(work.front());
    work.pop_front();
    if (d == depth) continue;
    for (const auto& e : t.edges) {
      if (e.source != loc) continue;
      Polyhedron w = zone.intersect_rows(atom_rows(dim, e.guard));
      if (w.is_empty()) continue;
      auto tgt_inv = inv_rows(e.target);
      w = w.reset(e.resets).intersect_rows(tgt_inv);
      if (w.is_empty()) continue;
      w = w.time_elapse().intersect_rows(tgt_inv);
      if (is_goal[e.target]) return true;
      bool known = false;
      for (const auto& z : by_loc[e.target])
        if (z.equals(w)) {
          known = true;
          break;
        }
      if (known) continue;
      by_loc[e.target].push_back(w);
      work.push_back({e.target, std::move(w), d + 1});
    }
  }
  return false;
}

bool holds(const pta::PTA& a, const pta::Property& prop,
           const std::vector<Rational>& v) {
  switch (prop.kind) {
    case pta::PropertyKind::Reach:
      return reachable(pta::instantiate(a, v), prop.goals);
    case pta::PropertyKind::Unavoid:
      return unavoidable(pta::instantiate(a, v), prop.goals);
    case pta::PropertyKind::TracePreserve:
      return trace_equal(pta::instantiate(a, v),
                         pta::instantiate(a, prop.valuation));
  }
  return false;
}

}  // namespace polyparam::oracle
