#include "polyparam/dot_export.hpp"

#include <sstream>

namespace polyparam::io {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string cmp_text(pta::Cmp op) {
  switch (op) {
    case pta::Cmp::LT: return " < ";
    case pta::Cmp::LE: return " <= ";
    case pta::Cmp::EQ: return " = ";
    case pta::Cmp::GE: return " >= ";
    case pta::Cmp::GT: return " > ";
  }
  return " ? ";
}

std::string term_text(const pta::ParamTerm& t, const pta::PTA& a) {
  std::string s;
  for (size_t i = 0; i < t.coeffs.size(); ++i) {
    if (t.coeffs[i] == 0) continue;
    if (!s.empty()) s += t.coeffs[i] > 0 ? " + " : " - ";
    else if (t.coeffs[i] < 0) s += "-";
    poly::Int mag = abs(t.coeffs[i]);
    if (mag != 1) s += poly::to_text(mag) + "*";
    s += a.params[i];
  }
  if (s.empty()) return poly::to_text(t.constant);
  if (t.constant > 0) s += " + " + poly::to_text(t.constant);
  if (t.constant < 0) s += " - " + poly::to_text(-t.constant);
  return s;
}

std::string guard_text(const pta::Guard& g, const pta::PTA& a) {
  if (g.empty()) return "true";
  std::string s;
  for (const auto& atom : g) {
    if (!s.empty()) s += " & ";
    s += a.clocks[atom.clock] + cmp_text(atom.op) + term_text(atom.rhs, a);
  }
  return s;
}

}  // namespace

std::string model_dot(const pta::PTA& a) {
  std::ostringstream os;
  os << "digraph \"" << escape(a.name) << "\" {\n";
  os << "  rankdir=LR;\n  node [shape=ellipse];\n";
  for (size_t i = 0; i < a.locations.size(); ++i) {
    os << "  l" << i << " [label=\"" << escape(a.locations[i]);
    if (!a.invariants[i].empty())
      os << "\\n" << escape(guard_text(a.invariants[i], a));
    os << "\"";
    if (i == a.initial_location) os << ", penwidth=2";
    os << "];\n";
  }
  for (const auto& e : a.edges) {
    os << "  l" << e.source << " -> l" << e.target << " [label=\""
       << escape(a.actions[e.action]);
    if (!e.guard.empty()) os << "\\n" << escape(guard_text(e.guard, a));
    if (!e.resets.empty()) {
      os << "\\nreset ";
      for (size_t i = 0; i < e.resets.size(); ++i)
        os << (i ? ", " : "") << escape(a.clocks[e.resets[i]]);
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string trace_dot(const pta::PTA& a, const synth::ExplorationTrace& tr) {
  std::ostringstream os;
  os << "digraph exploration {\n  node [shape=box, fontsize=10];\n";
  for (const auto& n : tr.nodes) {
    const char* color = "black";
    switch (n.kind) {
      case synth::TraceNode::Kind::Goal: color = "darkgreen"; break;
      case synth::TraceNode::Kind::Pruned: color = "gray50"; break;
      case synth::TraceNode::Kind::Incompatible: color = "firebrick"; break;
      case synth::TraceNode::Kind::Expanded: break;
    }
    os << "  n" << n.id << " [color=" << color << ", label=\""
       << escape(a.locations[n.location]) << "\\n" << escape(n.zone_text)
       << "\"];\n";
    if (n.match)
      os << "  n" << n.id << " -> n" << *n.match
         << " [style=dashed, constraint=false];\n";
  }
  for (const auto& e : tr.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << escape(a.actions[a.edges[e.model_edge].action]) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace polyparam::io
