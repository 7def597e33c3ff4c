#include "polyparam/synthesis.hpp"

#include <chrono>
#include <cstdlib>
#include <map>

#include "polyparam/symbolic.hpp"

namespace polyparam::synth {

namespace {

using poly::Polyhedron;
using pta::PropertyKind;
using symbolic::StateKey;
using symbolic::SymbolicState;

struct Ctx {
  const pta::PTA& a;
  const SynthesisRequest& req;
  poly::VarSpacePtr space;
  poly::VarSpacePtr pspace;
  Int m{0};
  std::vector<bool> is_goal;
  PolyhedralSet orthant;  // nonnegative parameter space as a set
  std::optional<uint64_t> budget;
  uint64_t ceiling = 0;
  SynthesisStats stats;
  bool exhausted = false;
  std::shared_ptr<ExplorationTrace> trace;
  size_t next_node_id = 0;

  Ctx(const pta::PTA& a_, const SynthesisRequest& r_, poly::VarSpacePtr sp,
      poly::VarSpacePtr psp)
      : a(a_), req(r_), space(std::move(sp)), pspace(std::move(psp)),
        orthant(PolyhedralSet::of(poly::nonneg_orthant(pspace))) {}

  size_t new_node(const SymbolicState& s, TraceNode::Kind k,
                  std::optional<size_t> match = std::nullopt) {
    ++stats.states_explored;
    if (stats.states_explored > ceiling)
      throw SynthesisError(
          "state ceiling exceeded (" + std::to_string(ceiling) +
          " states); the exploration does not close under this algorithm -- "
          "raise POLYPARAM_STATE_CEILING to push further");
    size_t id = next_node_id++;
    if (trace)
      trace->nodes.push_back({id, s.location, s.zone.to_text(), k, match});
    return id;
  }

  void note_edge(size_t from, size_t to, size_t model_edge) {
    if (trace) trace->edges.push_back({from, to, model_edge});
  }

  bool out_of_budget() {
    if (budget && stats.states_explored >= *budget) {
      exhausted = true;
      return true;
    }
    return false;
  }

  PolyhedralSet empty() const { return PolyhedralSet::empty_set(pspace); }

  // C|P, integer-hulled first for the Integer variant.
  Polyhedron hulled_proj(const Polyhedron& zone) const {
    if (req.variant == Variant::Integer)
      return zone.integer_hull().project_to_params();
    return zone.project_to_params();
  }
};

// --- reachability: union over goal leaves, path pruning contributes
// nothing ---

struct ReachFrame {
  SymbolicState state;
  size_t node_id;
  std::optional<StateKey> key;  // engaged except for the reference variant
  size_t next_edge;
  PolyhedralSet acc;
};

PolyhedralSet run_reach(Ctx& c) {
  auto init = symbolic::initial_state(c.a);
  if (!init) return c.empty();
  const bool ref = c.req.variant == Variant::Reference;
  std::vector<ReachFrame> stack;

  auto descend = [&](SymbolicState s,
                     size_t& out_id) -> std::optional<PolyhedralSet> {
    if (c.is_goal[s.location]) {
      out_id = c.new_node(s, TraceNode::Kind::Goal);
      return PolyhedralSet::of(c.hulled_proj(s.zone));
    }
    std::optional<StateKey> key;
    if (!ref) key = symbolic::hull_key(s, c.m);
    for (const auto& f : stack) {
      bool hit = ref ? (f.state.location == s.location &&
                        f.state.zone.equals(s.zone))
                     : symbolic::key_equal(*f.key, *key);
      if (hit) {
        ++c.stats.passed_hits;
        out_id = c.new_node(s, TraceNode::Kind::Pruned, f.node_id);
        return c.empty();
      }
    }
    out_id = c.new_node(s, TraceNode::Kind::Expanded);
    stack.push_back({std::move(s), out_id, std::move(key), 0, c.empty()});
    return std::nullopt;
  };

  size_t rid = 0;
  if (auto v = descend(std::move(*init), rid)) return *v;
  PolyhedralSet result = c.empty();
  while (!stack.empty()) {
    const size_t fi = stack.size() - 1;
    bool descended = false;
    while (stack[fi].next_edge < c.a.edges.size()) {
      if (c.out_of_budget()) break;
      const size_t ei = stack[fi].next_edge++;
      const pta::Edge& e = c.a.edges[ei];
      if (e.source != stack[fi].state.location) continue;
      auto succ = symbolic::successor(c.a, stack[fi].state, e);
      if (!succ) continue;
      size_t cid = 0;
      auto val = descend(std::move(*succ), cid);
      c.note_edge(stack[fi].node_id, cid, ei);
      if (val) {
        stack[fi].acc = stack[fi].acc.unite(*val);
      } else {
        descended = true;
        break;
      }
    }
    if (descended) continue;
    PolyhedralSet value = std::move(stack[fi].acc);
    stack.pop_back();
    if (stack.empty())
      result = std::move(value);
    else
      stack.back().acc = stack.back().acc.unite(value);
  }
  return result;
}

// --- unavoidability: intersection over successor constraints with blocking
// escape, minus the part of the zone that can linger forever ---

struct UnavFrame {
  SymbolicState state;
  size_t node_id;
  std::optional<StateKey> key;
  size_t next_edge;
  PolyhedralSet k;
  std::vector<Polyhedron> live;  // (C and guard), shifted into the past
  std::optional<PolyhedralSet> pending_block;  // for the child in flight
};

PolyhedralSet run_unavoid(Ctx& c) {
  auto init = symbolic::initial_state(c.a);
  if (!init) return c.empty();
  const bool ref = c.req.variant == Variant::Reference;
  std::vector<UnavFrame> stack;

  auto descend = [&](SymbolicState s,
                     size_t& out_id) -> std::optional<PolyhedralSet> {
    if (c.is_goal[s.location]) {
      out_id = c.new_node(s, TraceNode::Kind::Goal);
      return PolyhedralSet::of(c.hulled_proj(s.zone));
    }
    std::optional<StateKey> key;
    if (!ref) key = symbolic::hull_key(s, c.m);
    for (const auto& f : stack) {
      bool hit = ref ? (f.state.location == s.location &&
                        f.state.zone.equals(s.zone))
                     : symbolic::key_equal(*f.key, *key);
      if (hit) {
        ++c.stats.passed_hits;
        out_id = c.new_node(s, TraceNode::Kind::Pruned, f.node_id);
        return c.empty();
      }
    }
    out_id = c.new_node(s, TraceNode::Kind::Expanded);
    PolyhedralSet k0 = PolyhedralSet::of(s.zone.project_to_params());
    stack.push_back({std::move(s), out_id, std::move(key), 0, std::move(k0),
                     {}, std::nullopt});
    return std::nullopt;
  };

  auto merge_child = [&](UnavFrame& f, const PolyhedralSet& value) {
    f.k = f.k.intersect(value.unite(*f.pending_block));
    f.pending_block.reset();
  };

  size_t rid = 0;
  if (auto v = descend(std::move(*init), rid)) return *v;
  PolyhedralSet result = c.empty();
  while (!stack.empty()) {
    const size_t fi = stack.size() - 1;
    bool descended = false;
    while (stack[fi].next_edge < c.a.edges.size()) {
      if (c.out_of_budget()) break;
      const size_t ei = stack[fi].next_edge++;
      const pta::Edge& e = c.a.edges[ei];
      if (e.source != stack[fi].state.location) continue;
      auto succ = symbolic::successor(c.a, stack[fi].state, e);
      if (!succ) continue;
      stack[fi].live.push_back(
          stack[fi]
              .state.zone
              .intersect_rows(symbolic::guard_rows(*c.space, e.guard))
              .time_past());
      stack[fi].pending_block =
          complement_in(c.hulled_proj(succ->zone), c.orthant);
      size_t cid = 0;
      auto val = descend(std::move(*succ), cid);
      c.note_edge(stack[fi].node_id, cid, ei);
      if (val) {
        merge_child(stack[fi], *val);
      } else {
        descended = true;
        break;
      }
    }
    if (descended) continue;
    UnavFrame f = std::move(stack[fi]);
    stack.pop_back();
    PolyhedralSet live_set =
        PolyhedralSet::from_disjuncts(c.space, std::move(f.live));
    PolyhedralSet lingering =
        PolyhedralSet::of(f.state.zone).subtract(live_set);
    PolyhedralSet value = f.k.subtract(lingering.project_to_params());
    if (stack.empty())
      result = std::move(value);
    else
      merge_child(stack.back(), value);
  }
  return result;
}

// --- trace preservation: intersection of compatibility constraints along
// the reference valuation's reachable tree ---

struct TpFrame {
  SymbolicState state;
  size_t node_id;
  std::optional<StateKey> key;
  size_t next_edge;
  PolyhedralSet k;
};

PolyhedralSet run_tp(Ctx& c) {
  auto init = symbolic::initial_state(c.a);
  if (!init) return PolyhedralSet::universe(c.pspace);
  const bool ref = c.req.variant == Variant::Reference;
  std::vector<TpFrame> stack;

  auto descend = [&](SymbolicState s,
                     size_t& out_id) -> std::optional<PolyhedralSet> {
    if (!symbolic::v_compatible(s, c.req.v0)) {
      out_id = c.new_node(s, TraceNode::Kind::Incompatible);
      PolyhedralSet comp =
          complement_in(s.zone.project_to_params(), c.orthant);
      if (!ref) comp = comp.integer_hull();
      return comp;
    }
    std::optional<StateKey> key;
    if (!ref) key = symbolic::hull_key(s, c.m);
    PolyhedralSet base = ref
                             ? PolyhedralSet::of(s.zone.project_to_params())
                             : key->hulled.project_to_params();
    for (const auto& f : stack) {
      bool hit = ref ? (f.state.location == s.location &&
                        f.state.zone.equals(s.zone))
                     : symbolic::key_equal(*f.key, *key);
      if (hit) {
        ++c.stats.passed_hits;
        out_id = c.new_node(s, TraceNode::Kind::Pruned, f.node_id);
        return base;
      }
    }
    out_id = c.new_node(s, TraceNode::Kind::Expanded);
    stack.push_back(
        {std::move(s), out_id, std::move(key), 0, std::move(base)});
    return std::nullopt;
  };

  size_t rid = 0;
  if (auto v = descend(std::move(*init), rid)) return *v;
  PolyhedralSet result = c.empty();
  while (!stack.empty()) {
    const size_t fi = stack.size() - 1;
    bool descended = false;
    while (stack[fi].next_edge < c.a.edges.size()) {
      if (c.out_of_budget()) break;
      const size_t ei = stack[fi].next_edge++;
      const pta::Edge& e = c.a.edges[ei];
      if (e.source != stack[fi].state.location) continue;
      auto succ = symbolic::successor(c.a, stack[fi].state, e);
      if (!succ) continue;
      size_t cid = 0;
      auto val = descend(std::move(*succ), cid);
      c.note_edge(stack[fi].node_id, cid, ei);
      if (val) {
        stack[fi].k = stack[fi].k.intersect(*val);
      } else {
        descended = true;
        break;
      }
    }
    if (descended) continue;
    PolyhedralSet value = std::move(stack[fi].k);
    stack.pop_back();
    if (stack.empty())
      result = std::move(value);
    else
      stack.back().k = stack.back().k.intersect(value);
  }
  return result;
}

}  // namespace

uint64_t state_ceiling() {
  const char* env = std::getenv("POLYPARAM_STATE_CEILING");
  if (!env || !*env) return 100000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (!end || *end != '\0' || v == 0)
    throw SynthesisError("POLYPARAM_STATE_CEILING must be a positive integer");
  return v;
}

std::string algorithm_name(pta::PropertyKind p, Variant v) {
  switch (v) {
    case Variant::Hull:
      return p == PropertyKind::Reach     ? "rief"
             : p == PropertyKind::Unavoid ? "riaf"
                                          : "ritp";
    case Variant::Reference:
      return p == PropertyKind::Reach     ? "ef"
             : p == PropertyKind::Unavoid ? "af"
                                          : "tp";
    case Variant::Integer:
      return p == PropertyKind::Reach ? "ief" : "iaf";
  }
  return "?";
}

std::pair<pta::PropertyKind, Variant> algorithm_from_name(
    const std::string& name) {
  static const std::map<std::string, std::pair<PropertyKind, Variant>> table =
      {{"rief", {PropertyKind::Reach, Variant::Hull}},
       {"riaf", {PropertyKind::Unavoid, Variant::Hull}},
       {"ritp", {PropertyKind::TracePreserve, Variant::Hull}},
       {"ef", {PropertyKind::Reach, Variant::Reference}},
       {"af", {PropertyKind::Unavoid, Variant::Reference}},
       {"tp", {PropertyKind::TracePreserve, Variant::Reference}},
       {"ief", {PropertyKind::Reach, Variant::Integer}},
       {"iaf", {PropertyKind::Unavoid, Variant::Integer}}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument(
        "unknown algorithm '" + name +
        "' (expected rief, riaf, ritp, ef, af, tp, ief or iaf)");
  return it->second;
}

SynthesisResult run_synthesis(const pta::PTA& a, const SynthesisRequest& req) {
  {
    auto rep = pta::validate(a);
    if (!rep.ok())
      throw std::invalid_argument("invalid model: " + rep.errors[0]);
  }
  if (req.property == PropertyKind::TracePreserve) {
    if (req.variant == Variant::Integer)
      throw std::invalid_argument(
          "trace preservation has no integer-projected variant");
    if (req.v0.size() != a.params.size())
      throw std::invalid_argument("reference valuation arity mismatch");
    if (!pta::in_domain(a.domain, req.v0))
      throw std::invalid_argument(
          "reference valuation lies outside the parameter domain");
    if (req.variant == Variant::Hull) {
      for (size_t j = 0; j < req.v0.size(); ++j)
        if (!poly::is_integer(req.v0[j]))
          throw std::invalid_argument(
              "ritp requires an integer reference valuation, but " +
              a.params[j] + " = " + poly::to_text(req.v0[j]) +
              " is not an integer");
    }
  } else {
    if (req.goals.empty())
      throw std::invalid_argument("no goal locations given");
    for (size_t g : req.goals)
      if (g >= a.locations.size())
        throw std::invalid_argument("goal location index out of range");
  }
  if (req.budget && req.variant != Variant::Reference)
    throw std::invalid_argument(
        "a state budget only applies to the reference algorithms ef, af, tp");

  poly::VarSpacePtr space = a.space();
  Ctx c(a, req, space, space->param_space());
  c.m = pta::max_constant(a);
  c.is_goal.assign(a.locations.size(), false);
  for (size_t g : req.goals) c.is_goal[g] = true;
  c.ceiling = state_ceiling();
  if (req.variant == Variant::Reference)
    c.budget = req.budget ? *req.budget : 10000;
  if (req.record_trace) c.trace = std::make_shared<ExplorationTrace>();

  auto t0 = std::chrono::steady_clock::now();
  PolyhedralSet raw = req.property == PropertyKind::Reach     ? run_reach(c)
                      : req.property == PropertyKind::Unavoid ? run_unavoid(c)
                                                              : run_tp(c);
  Polyhedron box = Polyhedron::from_constraints(
      c.pspace, symbolic::domain_rows(*c.pspace, a.domain));
  PolyhedralSet clamped = raw.intersect(box);
  auto t1 = std::chrono::steady_clock::now();

  SynthesisResult out{
      std::move(clamped),
      c.exhausted ? SynthStatus::BudgetExhausted : SynthStatus::Complete,
      c.stats, c.trace};
  out.stats.max_const = c.m;
  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

}  // namespace polyparam::synth
