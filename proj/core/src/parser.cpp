#include "polyparam/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace polyparam::pta {
namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool reserved(const std::string& s) {
  static const std::set<std::string> words = {
      "clocks", "params", "init", "loc",  "edge", "inv",
      "on",     "when",   "reset", "in",  "true", "at"};
  return words.count(s) > 0;
}

struct Lexer {
  Lexer(const std::string& str, size_t ln) : s(str), line(ln) {}

  std::string peek() {
    size_t save = pos;
    std::string t = next();
    pos = save;
    return t;
  }

  std::string next() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos >= s.size()) return "";
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      return s.substr(b, pos - b);
    }
    if (ident_start(c)) {
      size_t b = pos;
      while (pos < s.size() &&
             (ident_start(s[pos]) ||
              std::isdigit(static_cast<unsigned char>(s[pos]))))
        ++pos;
      return s.substr(b, pos - b);
    }
    for (const char* two : {"->", "<=", ">="}) {
      if (s.compare(pos, 2, two) == 0) {
        pos += 2;
        return two;
      }
    }
    ++pos;
    return std::string(1, c);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, msg);
  }

  void expect(const std::string& t, const std::string& what) {
    std::string got = next();
    if (got != t)
      fail("expected " + what + (got.empty() ? " at end of line"
                                             : ", got '" + got + "'"));
  }

  bool accept(const std::string& t) {
    if (peek() == t) {
      next();
      return true;
    }
    return false;
  }

  bool at_end() { return peek().empty(); }

  std::string ident(const std::string& what) {
    std::string t = next();
    if (t.empty() || !ident_start(t[0]))
      fail("expected " + what + (t.empty() ? "" : ", got '" + t + "'"));
    return t;
  }

  Int integer(const std::string& what) {
    bool neg = accept("-");
    std::string t = next();
    if (t.empty() || !std::isdigit(static_cast<unsigned char>(t[0])))
      fail("expected " + what);
    Int v(t);
    return neg ? Int(-v) : v;
  }

  const std::string& s;
  size_t pos = 0;
  size_t line;
};

struct LinearExpr {
  std::vector<Int> clock, param;
  Int constant{0};
};

void add_var(LinearExpr& e, const std::string& name, const Int& k,
             Lexer& lx, const PTA& a) {
  for (size_t i = 0; i < a.clocks.size(); ++i)
    if (a.clocks[i] == name) {
      e.clock[i] += k;
      return;
    }
  for (size_t j = 0; j < a.params.size(); ++j)
    if (a.params[j] == name) {
      e.param[j] += k;
      return;
    }
  lx.fail("unknown variable '" + name + "'");
}

void parse_expr_term(Lexer& lx, LinearExpr& e, int sign, const PTA& a) {
  std::string t = lx.next();
  if (t.empty()) lx.fail("expected a term");
  if (std::isdigit(static_cast<unsigned char>(t[0]))) {
    Int k(t);
    if (sign < 0) k = -k;
    if (lx.accept("*")) {
      std::string v = lx.ident("variable after '*'");
      add_var(e, v, k, lx, a);
    } else {
      e.constant += k;
    }
    return;
  }
  if (ident_start(t[0])) {
    add_var(e, t, Int(sign), lx, a);
    return;
  }
  lx.fail("unexpected token '" + t + "' in expression");
}

LinearExpr parse_expr(Lexer& lx, const PTA& a) {
  LinearExpr e{std::vector<Int>(a.clocks.size(), 0),
               std::vector<Int>(a.params.size(), 0),
               0};
  int sign = 1;
  if (lx.accept("-")) sign = -1;
  else lx.accept("+");
  for (;;) {
    parse_expr_term(lx, e, sign, a);
    if (lx.accept("+")) sign = 1;
    else if (lx.accept("-")) sign = -1;
    else break;
  }
  return e;
}

Cmp parse_cmp(Lexer& lx) {
  std::string t = lx.next();
  if (t == "<=") return Cmp::LE;
  if (t == "<") return Cmp::LT;
  if (t == "=") return Cmp::EQ;
  if (t == ">=") return Cmp::GE;
  if (t == ">") return Cmp::GT;
  lx.fail("expected a comparison operator, got '" + t + "'");
}

Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::LT: return Cmp::GT;
    case Cmp::LE: return Cmp::GE;
    case Cmp::GE: return Cmp::LE;
    case Cmp::GT: return Cmp::LT;
    case Cmp::EQ: return Cmp::EQ;
  }
  return Cmp::EQ;
}

void parse_atom_into(Lexer& lx, const PTA& a, Guard& g) {
  if (lx.accept("true")) return;
  LinearExpr lhs = parse_expr(lx, a);
  Cmp op = parse_cmp(lx);
  LinearExpr rhs = parse_expr(lx, a);
  LinearExpr diff = lhs;
  for (size_t i = 0; i < diff.clock.size(); ++i) diff.clock[i] -= rhs.clock[i];
  for (size_t j = 0; j < diff.param.size(); ++j) diff.param[j] -= rhs.param[j];
  diff.constant -= rhs.constant;
  std::optional<size_t> the_clock;
  for (size_t i = 0; i < diff.clock.size(); ++i) {
    if (diff.clock[i] == 0) continue;
    if (the_clock) lx.fail("atom mentions more than one clock");
    if (diff.clock[i] != 1 && diff.clock[i] != -1)
      lx.fail("clock coefficient must be 1 in '" + a.clocks[i] + "' atom");
    the_clock = i;
  }
  if (!the_clock) lx.fail("atom mentions no clock");
  ClockAtom atom;
  atom.clock = *the_clock;
  if (diff.clock[*the_clock] == 1) {
    atom.op = op;
    for (auto& c : diff.param) c = -c;
    atom.rhs = ParamTerm{std::move(diff.param), -diff.constant};
  } else {
    atom.op = flip(op);
    atom.rhs = ParamTerm{std::move(diff.param), diff.constant};
  }
  g.push_back(std::move(atom));
}

Guard parse_conj(Lexer& lx, const PTA& a) {
  Guard g;
  parse_atom_into(lx, a, g);
  while (lx.accept("&")) parse_atom_into(lx, a, g);
  return g;
}

size_t find_location(Lexer& lx, const PTA& a, const std::string& name) {
  for (size_t i = 0; i < a.locations.size(); ++i)
    if (a.locations[i] == name) return i;
  lx.fail("unknown location '" + name + "'");
}

std::string strip(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

}  // namespace

PTA parse_model(const std::string& text) {
  PTA a;
  struct RawLine {
    std::string text;
    size_t no;
  };
  std::vector<RawLine> loc_lines, edge_lines;
  bool saw_clocks = false, saw_params = false, saw_init = false;
  std::string init_name;
  size_t init_line = 0;

  std::istringstream in(text);
  std::string raw;
  size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    Lexer lx(line, no);
    std::string head = lx.peek();
    if (head == "clocks") {
      if (saw_clocks) lx.fail("duplicate clocks line");
      saw_clocks = true;
      lx.next();
      lx.expect(":", "':' after clocks");
      for (;;) {
        std::string c = lx.ident("clock name");
        if (reserved(c)) lx.fail("'" + c + "' is a reserved word");
        a.clocks.push_back(c);
        if (!lx.accept(",")) break;
      }
      if (!lx.at_end()) lx.fail("trailing input after clock list");
    } else if (head == "params") {
      if (saw_params) lx.fail("duplicate params line");
      saw_params = true;
      lx.next();
      lx.expect(":", "':' after params");
      for (;;) {
        std::string p = lx.ident("parameter name");
        if (reserved(p)) lx.fail("'" + p + "' is a reserved word");
        a.params.push_back(p);
        lx.expect("in", "'in'");
        lx.expect("[", "'['");
        a.domain.lower.push_back(lx.integer("lower bound"));
        lx.expect(",", "','");
        a.domain.upper.push_back(lx.integer("upper bound"));
        lx.expect("]", "']'");
        if (!lx.accept(";")) break;
      }
      if (!lx.at_end()) lx.fail("trailing input after parameter list");
    } else if (head == "init") {
      if (saw_init) lx.fail("duplicate init line");
      saw_init = true;
      lx.next();
      lx.expect(":", "':' after init");
      init_name = lx.ident("initial location name");
      init_line = no;
      if (!lx.at_end()) lx.fail("trailing input after initial location");
    } else if (head == "loc") {
      lx.next();
      std::string name = lx.ident("location name");
      if (reserved(name)) lx.fail("'" + name + "' is a reserved word");
      for (const auto& l : a.locations)
        if (l == name) lx.fail("duplicate location '" + name + "'");
      a.locations.push_back(name);
      loc_lines.push_back({line, no});
    } else if (head == "edge") {
      edge_lines.push_back({line, no});
    } else {
      lx.fail("unrecognized directive '" + head + "'");
    }
  }

  if (!saw_init) throw ParseError(no == 0 ? 1 : no, "missing init line");
  if (a.locations.empty()) throw ParseError(init_line, "no locations declared");
  {
    bool found = false;
    for (size_t i = 0; i < a.locations.size(); ++i)
      if (a.locations[i] == init_name) {
        a.initial_location = i;
        found = true;
      }
    if (!found)
      throw ParseError(init_line, "unknown initial location '" + init_name + "'");
  }

  a.invariants.assign(a.locations.size(), {});
  for (size_t k = 0; k < loc_lines.size(); ++k) {
    Lexer lx(loc_lines[k].text, loc_lines[k].no);
    lx.expect("loc", "'loc'");
    std::string name = lx.ident("location name");
    size_t idx = find_location(lx, a, name);
    if (lx.at_end()) continue;
    lx.expect("inv", "'inv'");
    lx.expect(":", "':' after inv");
    a.invariants[idx] = parse_conj(lx, a);
    if (!lx.at_end()) lx.fail("trailing input after invariant");
  }

  for (const auto& el : edge_lines) {
    Lexer lx(el.text, el.no);
    lx.expect("edge", "'edge'");
    Edge e;
    e.source = find_location(lx, a, lx.ident("source location"));
    lx.expect("->", "'->'");
    e.target = find_location(lx, a, lx.ident("target location"));
    lx.expect("on", "'on'");
    std::string act = lx.ident("action name");
    if (reserved(act)) lx.fail("'" + act + "' is a reserved word");
    bool found = false;
    for (size_t i = 0; i < a.actions.size(); ++i)
      if (a.actions[i] == act) {
        e.action = i;
        found = true;
      }
    if (!found) {
      e.action = a.actions.size();
      a.actions.push_back(act);
    }
    if (lx.accept("when")) e.guard = parse_conj(lx, a);
    if (lx.accept("reset")) {
      lx.expect("{", "'{'");
      if (!lx.accept("}")) {
        for (;;) {
          std::string c = lx.ident("clock name");
          bool ok = false;
          for (size_t i = 0; i < a.clocks.size(); ++i)
            if (a.clocks[i] == c) {
              e.resets.push_back(i);
              ok = true;
            }
          if (!ok) lx.fail("reset of unknown clock '" + c + "'");
          if (!lx.accept(",")) break;
        }
        lx.expect("}", "'}'");
      }
    }
    if (!lx.at_end()) lx.fail("trailing input after edge");
    a.edges.push_back(std::move(e));
  }
  return a;
}

PTA parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

namespace {

std::string param_term_text(const ParamTerm& t, const PTA& a) {
  std::string out;
  for (size_t j = 0; j < t.coeffs.size(); ++j) {
    const Int& k = t.coeffs[j];
    if (k == 0) continue;
    Int mag = abs(k);
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += (k < 0) ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += a.params[j];
  }
  if (out.empty()) return t.constant.get_str();
  if (t.constant != 0) {
    out += (t.constant < 0) ? " - " : " + ";
    out += abs(t.constant).get_str();
  }
  return out;
}

std::string cmp_text(Cmp c) {
  switch (c) {
    case Cmp::LT: return "<";
    case Cmp::LE: return "<=";
    case Cmp::EQ: return "=";
    case Cmp::GE: return ">=";
    case Cmp::GT: return ">";
  }
  return "?";
}

std::string guard_text(const Guard& g, const PTA& a) {
  if (g.empty()) return "true";
  std::string out;
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) out += " & ";
    out += a.clocks[g[i].clock] + " " + cmp_text(g[i].op) + " " +
           param_term_text(g[i].rhs, a);
  }
  return out;
}

}  // namespace

std::string print_model(const PTA& a) {
  std::string out;
  if (!a.clocks.empty()) {
    out += "clocks: ";
    for (size_t i = 0; i < a.clocks.size(); ++i)
      out += (i ? ", " : "") + a.clocks[i];
    out += "\n";
  }
  if (!a.params.empty()) {
    out += "params: ";
    for (size_t i = 0; i < a.params.size(); ++i) {
      if (i) out += "; ";
      out += a.params[i] + " in [" + a.domain.lower[i].get_str() + ", " +
             a.domain.upper[i].get_str() + "]";
    }
    out += "\n";
  }
  out += "init: " + a.locations[a.initial_location] + "\n";
  for (size_t i = 0; i < a.locations.size(); ++i) {
    out += "loc " + a.locations[i];
    if (!a.invariants[i].empty())
      out += " inv: " + guard_text(a.invariants[i], a);
    out += "\n";
  }
  for (const auto& e : a.edges) {
    out += "edge " + a.locations[e.source] + " -> " + a.locations[e.target] +
           " on " + a.actions[e.action];
    if (!e.guard.empty()) out += " when " + guard_text(e.guard, a);
    if (!e.resets.empty()) {
      out += " reset {";
      for (size_t i = 0; i < e.resets.size(); ++i)
        out += (i ? ", " : "") + a.clocks[e.resets[i]];
      out += "}";
    }
    out += "\n";
  }
  return out;
}

Property parse_property(const std::string& text, const PTA& a) {
  try {
    Lexer lx(text, 1);
    Property p;
    std::string kind = lx.next();
    if (kind == "EF" || kind == "AF") {
      p.kind = kind == "EF" ? PropertyKind::Reach : PropertyKind::Unavoid;
      lx.expect("{", "'{'");
      std::set<size_t> goals;
      for (;;) {
        goals.insert(find_location(lx, a, lx.ident("location name")));
        if (!lx.accept(",")) break;
      }
      lx.expect("}", "'}'");
      p.goals.assign(goals.begin(), goals.end());
    } else if (kind == "TP") {
      p.kind = PropertyKind::TracePreserve;
      lx.expect("at", "'at'");
      std::vector<std::optional<Rational>> vals(a.params.size());
      for (;;) {
        std::string name = lx.ident("parameter name");
        std::optional<size_t> idx;
        for (size_t j = 0; j < a.params.size(); ++j)
          if (a.params[j] == name) idx = j;
        if (!idx) lx.fail("unknown parameter '" + name + "'");
        lx.expect("=", "'='");
        Rational v(lx.integer("integer value"));
        if (vals[*idx]) lx.fail("parameter '" + name + "' assigned twice");
        vals[*idx] = v;
        if (!lx.accept(",")) break;
      }
      for (size_t j = 0; j < vals.size(); ++j) {
        if (!vals[j]) lx.fail("parameter '" + a.params[j] + "' not assigned");
        p.valuation.push_back(*vals[j]);
      }
    } else {
      lx.fail("expected EF, AF or TP");
    }
    if (!lx.at_end()) lx.fail("trailing input after property");
    return p;
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("property: ") + e.what());
  }
}

std::string print_property(const Property& p, const PTA& a) {
  if (p.kind == PropertyKind::TracePreserve) {
    std::string out = "TP at ";
    for (size_t j = 0; j < p.valuation.size(); ++j) {
      if (j) out += ", ";
      out += a.params[j] + " = " + poly::to_text(p.valuation[j]);
    }
    return out;
  }
  std::string out = p.kind == PropertyKind::Reach ? "EF {" : "AF {";
  for (size_t i = 0; i < p.goals.size(); ++i)
    out += (i ? ", " : "") + a.locations[p.goals[i]];
  return out + "}";
}

}  // namespace polyparam::pta
