// Convex, not-necessarily-closed rational polyhedra with exact arithmetic.
// Constraint rows are the primary representation; generator views are
// derived through an exact double-description conversion.  Every public
// operation returns a canonicalized polyhedron: affine-hull equalities in
// integer reduced echelon form, facet inequalities of the closure with
// per-facet strictness, plus any residual strict cuts, deterministically
// ordered.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyparam/constraint.hpp"
#include "polyparam/var_space.hpp"

namespace polyparam::poly {

struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosureGenerators {
  std::vector<std::vector<Rational>> points;
  std::vector<std::vector<Int>> rays;
  std::vector<std::vector<Int>> lines;
};

// Not-necessarily-closed generator system: the denoted set is the set of
// combinations sum(l_i g_i) + sum(m_j r_j) with l >= 0, sum(l) = 1, m >= 0,
// and at least one vertex carrying positive weight.  Vertices belong to the
// set; closure points are limits that do not.
struct GeneratorSystem {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<Rational>> closure_points;
  std::vector<std::vector<Int>> rays;
  std::vector<std::vector<Int>> lines;
};

class Polyhedron {
 public:
  static Polyhedron universe(VarSpacePtr space);
  static Polyhedron empty(VarSpacePtr space);
  static Polyhedron from_constraints(VarSpacePtr space,
                                     std::vector<AtomicConstraint> rows);
  static Polyhedron from_closed_generators(
      VarSpacePtr space, const std::vector<std::vector<Rational>>& points,
      const std::vector<std::vector<Int>>& rays,
      const std::vector<std::vector<Int>>& lines);
  static Polyhedron from_generators(VarSpacePtr space,
                                    const GeneratorSystem& gens);

  const VarSpacePtr& space() const { return space_; }
  bool is_empty() const { return empty_; }
  bool is_universe() const { return !empty_ && rows_.empty(); }
  const std::vector<AtomicConstraint>& constraints() const { return rows_; }

  bool contains(const std::vector<Rational>& point) const;
  bool includes(const Polyhedron& other) const;  // other subset of this
  bool equals(const Polyhedron& other) const;
  bool structurally_equal(const Polyhedron& other) const;

  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron intersect_rows(const std::vector<AtomicConstraint>& rows) const;

  // Time operators act on the clock block of the space; parameters are
  // fixed.  Past is clamped to nonnegative clocks.
  Polyhedron time_elapse() const;
  Polyhedron time_past() const;
  Polyhedron reset(const std::vector<size_t>& clock_indices) const;
  // Frees one variable, then reimposes var >= 0.
  Polyhedron cylindrify(size_t var) const;
  Polyhedron project_to_params() const;  // result lives in space()->param_space()
  Polyhedron integer_hull() const;
  // Fixes all parameters to the given values; result is clock-only.
  Polyhedron substitute_params(const std::vector<Rational>& values) const;

  const ClosureGenerators& closure_generators() const;
  GeneratorSystem generators() const;

  std::string to_text() const;

 private:
  Polyhedron(VarSpacePtr space, bool empty, std::vector<AtomicConstraint> rows)
      : space_(std::move(space)), empty_(empty), rows_(std::move(rows)) {}

  VarSpacePtr space_;
  bool empty_ = true;
  std::vector<AtomicConstraint> rows_;
  mutable std::shared_ptr<const ClosureGenerators> gens_;  // lazy cache
};

// All variables of the space nonnegative.
Polyhedron nonneg_orthant(VarSpacePtr space);

}  // namespace polyparam::poly
