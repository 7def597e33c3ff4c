// Strictness-aware Fourier-Motzkin elimination over integer constraint rows.
// Internal to the polyhedron kernel.
#pragma once

#include <vector>

#include "polyparam/constraint.hpp"

namespace polyparam::poly::detail {

using Rows = std::vector<AtomicConstraint>;

// Ground rows (all coefficients zero): trivially true rows are dropped,
// a trivially false row makes the system unsatisfiable.
bool ground_false(const AtomicConstraint& c);
bool ground_true(const AtomicConstraint& c);

// Normalizes every row, drops trivially true ones, removes duplicates and
// keeps only the tightest of rows sharing a coefficient vector.  Returns
// false if a trivially false row was present (rows left unspecified).
bool simplify_rows(Rows& rows);

// Eliminates one variable.  Prefers an equality pivot; otherwise combines
// positive/negative inequality pairs (result strict iff either side is).
// The result may contain ground rows; callers run simplify_rows.
Rows eliminate(const Rows& rows, size_t var);

// Exact satisfiability over Q^dim.
bool rows_satisfiable(Rows rows, size_t dim);

// Negation of a row: the complement splits equalities in two, so callers
// needing full complements handle EQ themselves.  LE -> strict reverse,
// LT -> non-strict reverse.
AtomicConstraint negate_le_lt(const AtomicConstraint& c);

}  // namespace polyparam::poly::detail
