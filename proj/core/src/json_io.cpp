#include "polyparam/json_io.hpp"

#include <cctype>

namespace polyparam::io {

namespace {

using nlohmann::json;

json term_json(const pta::ParamTerm& t, const pta::PTA& a) {
  json coeffs = json::object();
  for (size_t i = 0; i < t.coeffs.size(); ++i)
    if (t.coeffs[i] != 0) coeffs[a.params[i]] = poly::to_text(t.coeffs[i]);
  return json{{"coeffs", coeffs}, {"constant", poly::to_text(t.constant)}};
}

std::string cmp_text(pta::Cmp op) {
  switch (op) {
    case pta::Cmp::LT: return "<";
    case pta::Cmp::LE: return "<=";
    case pta::Cmp::EQ: return "=";
    case pta::Cmp::GE: return ">=";
    case pta::Cmp::GT: return ">";
  }
  return "?";
}

json guard_json(const pta::Guard& g, const pta::PTA& a) {
  json atoms = json::array();
  for (const auto& atom : g)
    atoms.push_back(json{{"clock", a.clocks[atom.clock]},
                         {"op", cmp_text(atom.op)},
                         {"rhs", term_json(atom.rhs, a)}});
  return atoms;
}

}  // namespace

json model_to_json(const pta::PTA& a) {
  json j;
  j["name"] = a.name;
  j["clocks"] = a.clocks;
  json params = json::array();
  for (size_t i = 0; i < a.params.size(); ++i)
    params.push_back(json{{"name", a.params[i]},
                          {"lower", poly::to_text(a.domain.lower[i])},
                          {"upper", poly::to_text(a.domain.upper[i])}});
  j["params"] = params;
  j["initial"] = a.locations[a.initial_location];
  json locs = json::array();
  for (size_t i = 0; i < a.locations.size(); ++i)
    locs.push_back(json{{"name", a.locations[i]},
                        {"invariant", guard_json(a.invariants[i], a)}});
  j["locations"] = locs;
  json edges = json::array();
  for (const auto& e : a.edges) {
    json resets = json::array();
    for (size_t r : e.resets) resets.push_back(a.clocks[r]);
    edges.push_back(json{{"source", a.locations[e.source]},
                         {"target", a.locations[e.target]},
                         {"action", a.actions[e.action]},
                         {"guard", guard_json(e.guard, a)},
                         {"resets", resets}});
  }
  j["edges"] = edges;
  return j;
}

json result_to_json(const pta::PTA& a, const pta::Property& prop,
                    const std::string& algorithm,
                    const synth::SynthesisResult& r) {
  json j;
  j["model"] = a.name;
  j["algorithm"] = algorithm;
  j["property"] = pta::print_property(prop, a);
  j["status"] = r.status == synth::SynthStatus::Complete ? "complete"
                                                         : "budget-exhausted";
  j["m"] = poly::to_text(r.stats.max_const);
  j["states_explored"] = r.stats.states_explored;
  j["passed_hits"] = r.stats.passed_hits;
  json disjuncts = json::array();
  for (const auto& d : r.result.disjuncts()) {
    json rows = json::array();
    const auto& space = *d.space();
    for (const auto& row : d.constraints())
      rows.push_back(poly::to_text(row, space));
    disjuncts.push_back(rows);
  }
  j["result"] = disjuncts;
  j["result_text"] = r.result.to_text();
  return j;
}

namespace {

[[noreturn]] void bad_row(const std::string& s) {
  throw std::invalid_argument("not a canonical constraint row: '" + s + "'");
}

poly::AtomicConstraint row_from_text(const std::string& s,
                                     const poly::VarSpace& space) {
  std::string body = s;
  poly::Rel rel = poly::Rel::LE;
  auto strip = [&](const std::string& suffix) {
    if (body.size() < suffix.size() ||
        body.compare(body.size() - suffix.size(), suffix.size(), suffix) != 0)
      return false;
    body.resize(body.size() - suffix.size());
    return true;
  };
  if (strip(" <= 0")) rel = poly::Rel::LE;
  else if (strip(" < 0")) rel = poly::Rel::LT;
  else if (strip(" = 0")) rel = poly::Rel::EQ;
  else bad_row(s);

  poly::LinearTerm term = poly::LinearTerm::zero(space.dim());
  size_t pos = 0;
  int sign = 1;
  if (!body.empty() && body[0] == '-') {
    sign = -1;
    pos = 1;
  }
  while (pos < body.size()) {
    size_t end = body.find(' ', pos);
    std::string tok = body.substr(pos, end == std::string::npos
                                           ? std::string::npos
                                           : end - pos);
    if (tok.empty()) bad_row(s);
    size_t star = tok.find('*');
    poly::Int mag = 1;
    std::string name = tok;
    if (star != std::string::npos) {
      mag = poly::Int(tok.substr(0, star));
      name = tok.substr(star + 1);
    }
    if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0]))) {
      if (star != std::string::npos) bad_row(s);
      term.constant += sign * poly::Int(name);
    } else {
      auto idx = space.index_of(name);
      if (!idx) bad_row(s);
      term.coeffs[*idx] += sign * mag;
    }
    if (end == std::string::npos) break;
    if (end + 3 > body.size() ||
        (body[end + 1] != '+' && body[end + 1] != '-') ||
        body[end + 2] != ' ')
      bad_row(s);
    sign = body[end + 1] == '+' ? 1 : -1;
    pos = end + 3;
  }
  return poly::make_constraint(std::move(term), rel);
}

}  // namespace

poly::PolyhedralSet result_from_json(const json& j, poly::VarSpacePtr space) {
  if (!j.is_array()) throw std::invalid_argument("result must be an array");
  std::vector<poly::Polyhedron> ds;
  for (const auto& rows : j) {
    if (!rows.is_array())
      throw std::invalid_argument("each disjunct must be an array of rows");
    std::vector<poly::AtomicConstraint> cs;
    for (const auto& row : rows)
      cs.push_back(row_from_text(row.get<std::string>(), *space));
    ds.push_back(poly::Polyhedron::from_constraints(space, cs));
  }
  return poly::PolyhedralSet::from_disjuncts(space, std::move(ds));
}

}  // namespace polyparam::io
