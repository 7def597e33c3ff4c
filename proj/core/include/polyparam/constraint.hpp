// Linear atomic constraints in the normal form  a.x + c rel 0  with integer
// coefficients, rel one of =, <=, <.  Surface comparisons (>=, >) are
// normalized by negation at construction time.
#pragma once

#include <string>
#include <vector>

#include "polyparam/rational.hpp"
#include "polyparam/var_space.hpp"

namespace polyparam::poly {

enum class Rel { EQ, LE, LT };
enum class CmpOp { LT, LE, EQ, GE, GT };

struct LinearTerm {
  std::vector<Int> coeffs;  // one per variable of the space
  Int constant{0};

  static LinearTerm zero(size_t dim) { return {std::vector<Int>(dim, 0), 0}; }
  static LinearTerm var(size_t dim, size_t index, Int coeff = 1);
  static LinearTerm number(size_t dim, Int value);

  bool coeffs_all_zero() const;
  LinearTerm negated() const;
  LinearTerm plus(const LinearTerm& other) const;
  LinearTerm minus(const LinearTerm& other) const;
  Rational eval(const std::vector<Rational>& point) const;
};

struct AtomicConstraint {
  LinearTerm term;
  Rel rel{Rel::LE};

  bool sat(const std::vector<Rational>& point) const;
};

// lhs op rhs, moved to normal form and gcd-reduced.
AtomicConstraint make_constraint(const LinearTerm& lhs, CmpOp op,
                                 const LinearTerm& rhs);
AtomicConstraint make_constraint(LinearTerm term, Rel rel);

// Divides by the gcd of all coefficients and the constant; flips equalities
// so the leading nonzero coefficient is positive.
void normalize(AtomicConstraint& c);

// Strict comparison orders rows deterministically: by leading variable,
// relation (=, <=, <), coefficients, constant.
bool row_less(const AtomicConstraint& a, const AtomicConstraint& b);
bool row_equal(const AtomicConstraint& a, const AtomicConstraint& b);

std::string to_text(const AtomicConstraint& c, const VarSpace& space);
std::string term_text(const LinearTerm& t, const VarSpace& space);

}  // namespace polyparam::poly
