#include "polyparam/rational.hpp"

#include <cctype>

namespace polyparam::poly {

std::string to_text(const Int& v) { return v.get_str(); }

std::string to_text(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    if (t.empty() || (t.size() == 1 && (t[0] == '+' || t[0] == '-')))
      throw std::invalid_argument("bad integer literal");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad integer literal: " + t);
    return Int(t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  return make_rational(num, den);
}

}  // namespace polyparam::poly
