#include "polyparam/constraint.hpp"

#include <stdexcept>

namespace polyparam::poly {

LinearTerm LinearTerm::var(size_t dim, size_t index, Int coeff) {
  LinearTerm t = zero(dim);
  t.coeffs.at(index) = std::move(coeff);
  return t;
}

LinearTerm LinearTerm::number(size_t dim, Int value) {
  LinearTerm t = zero(dim);
  t.constant = std::move(value);
  return t;
}

bool LinearTerm::coeffs_all_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

LinearTerm LinearTerm::negated() const {
  LinearTerm t = *this;
  for (auto& c : t.coeffs) c = -c;
  t.constant = -t.constant;
  return t;
}

LinearTerm LinearTerm::plus(const LinearTerm& other) const {
  if (coeffs.size() != other.coeffs.size())
    throw std::invalid_argument("term dimension mismatch");
  LinearTerm t = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) t.coeffs[i] += other.coeffs[i];
  t.constant += other.constant;
  return t;
}

LinearTerm LinearTerm::minus(const LinearTerm& other) const {
  return plus(other.negated());
}

Rational LinearTerm::eval(const std::vector<Rational>& point) const {
  if (point.size() != coeffs.size())
    throw std::invalid_argument("point dimension mismatch");
  Rational acc(constant);
  for (size_t i = 0; i < coeffs.size(); ++i)
    acc += Rational(coeffs[i]) * point[i];
  return acc;
}

bool AtomicConstraint::sat(const std::vector<Rational>& point) const {
  Rational v = term.eval(point);
  switch (rel) {
    case Rel::EQ: return v == 0;
    case Rel::LE: return v <= 0;
    case Rel::LT: return v < 0;
  }
  return false;
}

void normalize(AtomicConstraint& c) {
  Int g = 0;
  for (const auto& a : c.term.coeffs) g = gcd(g, a);
  g = gcd(g, c.term.constant);
  if (g > 1) {
    for (auto& a : c.term.coeffs) a /= g;
    c.term.constant /= g;
  }
  if (c.rel == Rel::EQ) {
    for (const auto& a : c.term.coeffs) {
      if (a == 0) continue;
      if (a < 0) {
        c.term = c.term.negated();
      }
      break;
    }
    if (c.term.coeffs_all_zero() && c.term.constant < 0)
      c.term.constant = -c.term.constant;
  }
}

AtomicConstraint make_constraint(LinearTerm term, Rel rel) {
  AtomicConstraint c{std::move(term), rel};
  normalize(c);
  return c;
}

AtomicConstraint make_constraint(const LinearTerm& lhs, CmpOp op,
                                 const LinearTerm& rhs) {
  LinearTerm diff = lhs.minus(rhs);
  switch (op) {
    case CmpOp::LE: return make_constraint(std::move(diff), Rel::LE);
    case CmpOp::LT: return make_constraint(std::move(diff), Rel::LT);
    case CmpOp::EQ: return make_constraint(std::move(diff), Rel::EQ);
    case CmpOp::GE: return make_constraint(diff.negated(), Rel::LE);
    case CmpOp::GT: return make_constraint(diff.negated(), Rel::LT);
  }
  throw std::logic_error("bad comparison op");
}

static int rel_rank(Rel r) {
  switch (r) {
    case Rel::EQ: return 0;
    case Rel::LE: return 1;
    case Rel::LT: return 2;
  }
  return 3;
}

static size_t leading_index(const AtomicConstraint& c) {
  for (size_t i = 0; i < c.term.coeffs.size(); ++i)
    if (c.term.coeffs[i] != 0) return i;
  return c.term.coeffs.size();
}

bool row_less(const AtomicConstraint& a, const AtomicConstraint& b) {
  size_t la = leading_index(a), lb = leading_index(b);
  if (la != lb) return la < lb;
  int ra = rel_rank(a.rel), rb = rel_rank(b.rel);
  if (ra != rb) return ra < rb;
  for (size_t i = 0; i < a.term.coeffs.size() && i < b.term.coeffs.size();
       ++i) {
    int c = cmp(a.term.coeffs[i], b.term.coeffs[i]);
    if (c != 0) return c < 0;
  }
  return cmp(a.term.constant, b.term.constant) < 0;
}

bool row_equal(const AtomicConstraint& a, const AtomicConstraint& b) {
  return a.rel == b.rel && a.term.constant == b.term.constant &&
         a.term.coeffs == b.term.coeffs;
}

std::string term_text(const LinearTerm& t, const VarSpace& space) {
  std::string out;
  for (size_t i = 0; i < t.coeffs.size(); ++i) {
    const Int& a = t.coeffs[i];
    if (a == 0) continue;
    Int mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += space.name(i);
  }
  const Int& c = t.constant;
  if (out.empty()) return c.get_str();
  if (c != 0) {
    out += (c < 0) ? " - " : " + ";
    out += abs(c).get_str();
  }
  return out;
}

std::string to_text(const AtomicConstraint& c, const VarSpace& space) {
  std::string rel;
  switch (c.rel) {
    case Rel::EQ: rel = " = 0"; break;
    case Rel::LE: rel = " <= 0"; break;
    case Rel::LT: rel = " < 0"; break;
  }
  return term_text(c.term, space) + rel;
}

}  // namespace polyparam::poly
