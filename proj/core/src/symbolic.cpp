#include "polyparam/symbolic.hpp"

namespace polyparam::symbolic {

using poly::AtomicConstraint;
using poly::LinearTerm;
using poly::Rel;

poly::AtomicConstraint atom_row(const poly::VarSpace& space,
                                const pta::ClockAtom& atom) {
  const size_t dim = space.dim();
  const size_t nclocks = space.clock_count();
  LinearTerm lhs = LinearTerm::var(dim, atom.clock);
  LinearTerm rhs = LinearTerm::zero(dim);
  rhs.constant = atom.rhs.constant;
  for (size_t j = 0; j < atom.rhs.coeffs.size(); ++j)
    rhs.coeffs[nclocks + j] = atom.rhs.coeffs[j];
  poly::CmpOp op;
  switch (atom.op) {
    case pta::Cmp::LT: op = poly::CmpOp::LT; break;
    case pta::Cmp::LE: op = poly::CmpOp::LE; break;
    case pta::Cmp::EQ: op = poly::CmpOp::EQ; break;
    case pta::Cmp::GE: op = poly::CmpOp::GE; break;
    case pta::Cmp::GT: op = poly::CmpOp::GT; break;
    default: op = poly::CmpOp::LE; break;
  }
  return make_constraint(lhs, op, rhs);
}

std::vector<AtomicConstraint> guard_rows(const poly::VarSpace& space,
                                         const pta::Guard& g) {
  std::vector<AtomicConstraint> rows;
  for (const auto& atom : g) rows.push_back(atom_row(space, atom));
  return rows;
}

std::vector<AtomicConstraint> domain_rows(const poly::VarSpace& space,
                                          const pta::ParamDomain& d) {
  std::vector<AtomicConstraint> rows;
  const size_t dim = space.dim();
  const size_t base = dim - d.lower.size();
  for (size_t j = 0; j < d.lower.size(); ++j) {
    LinearTerm p = LinearTerm::var(dim, base + j);
    rows.push_back(make_constraint(p, poly::CmpOp::GE,
                                   LinearTerm::number(dim, d.lower[j])));
    rows.push_back(make_constraint(p, poly::CmpOp::LE,
                                   LinearTerm::number(dim, d.upper[j])));
  }
  return rows;
}

std::optional<SymbolicState> initial_state(const pta::PTA& a) {
  poly::VarSpacePtr space = a.space();
  const size_t dim = space->dim();
  std::vector<AtomicConstraint> rows;
  for (size_t i = 0; i < space->clock_count(); ++i)
    rows.push_back(
        poly::make_constraint(LinearTerm::var(dim, i), Rel::EQ));
  for (auto& r : domain_rows(*space, a.domain)) rows.push_back(std::move(r));
  auto inv = guard_rows(*space, a.invariants[a.initial_location]);
  for (const auto& r : inv) rows.push_back(r);
  Polyhedron start = Polyhedron::from_constraints(space, std::move(rows));
  if (start.is_empty()) return std::nullopt;
  Polyhedron zone = start.time_elapse().intersect_rows(inv);
  if (zone.is_empty()) return std::nullopt;
  return SymbolicState{a.initial_location, std::move(zone)};
}

std::optional<SymbolicState> successor(const pta::PTA& a,
                                       const SymbolicState& s,
                                       const pta::Edge& e) {
  const poly::VarSpace& space = *s.zone.space();
  Polyhedron fired = s.zone.intersect_rows(guard_rows(space, e.guard));
  if (fired.is_empty()) return std::nullopt;
  auto inv = guard_rows(space, a.invariants[e.target]);
  Polyhedron landed = fired.reset(e.resets).intersect_rows(inv);
  if (landed.is_empty()) return std::nullopt;
  Polyhedron zone = landed.time_elapse().intersect_rows(inv);
  if (zone.is_empty()) return std::nullopt;
  return SymbolicState{e.target, std::move(zone)};
}

PolyhedralSet extrapolate_clock(const Polyhedron& zone, size_t clock,
                                const Int& m) {
  poly::VarSpacePtr space = zone.space();
  const size_t dim = space->dim();
  AtomicConstraint below = poly::make_constraint(
      LinearTerm::var(dim, clock), poly::CmpOp::LE, LinearTerm::number(dim, m));
  AtomicConstraint above = poly::make_constraint(
      LinearTerm::var(dim, clock), poly::CmpOp::GE, LinearTerm::number(dim, m));
  std::vector<Polyhedron> parts;
  Polyhedron low = zone.intersect_rows({below});
  if (!low.is_empty()) parts.push_back(std::move(low));
  Polyhedron high =
      zone.intersect_rows({above}).cylindrify(clock).intersect_rows({above});
  if (!high.is_empty()) parts.push_back(std::move(high));
  return PolyhedralSet::from_disjuncts(space, std::move(parts));
}

PolyhedralSet extrapolate(const Polyhedron& zone, size_t clock_count,
                          const Int& m) {
  poly::VarSpacePtr space = zone.space();
  std::vector<Polyhedron> parts{zone};
  for (size_t x = 0; x < clock_count; ++x) {
    std::vector<Polyhedron> next;
    for (const auto& s : parts)
      for (const auto& piece : extrapolate_clock(s, x, m).disjuncts())
        next.push_back(piece);
    parts = std::move(next);
  }
  return PolyhedralSet::from_disjuncts(space, std::move(parts));
}

StateKey hull_key(const SymbolicState& s, const Int& m) {
  PolyhedralSet hulled =
      extrapolate(s.zone, s.zone.space()->clock_count(), m).integer_hull();
  std::string text = hulled.to_text();
  return StateKey{s.location, std::move(hulled), std::move(text)};
}

bool key_equal(const StateKey& a, const StateKey& b) {
  if (a.location != b.location) return false;
  if (a.text == b.text) return true;
  return a.hulled.set_equals(b.hulled);
}

bool v_compatible(const SymbolicState& s, const std::vector<Rational>& v) {
  return s.zone.project_to_params().contains(v);
}

}  // namespace polyparam::symbolic
