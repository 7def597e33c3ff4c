#include "polyparam/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "polyparam/detail/dd.hpp"
#include "polyparam/detail/fm.hpp"

namespace polyparam::poly {
namespace {

using detail::Rows;

void check(bool cond, const char* msg) {
  if (!cond) throw KernelError(msg);
}

size_t leading(const std::vector<Int>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// Homogenization (x, lambda) with lambda last; strict rows are weakened, so
// the resulting cone describes the topological closure.
std::vector<std::vector<Int>> cone_rows_from_constraints(const Rows& rows,
                                                         size_t dim) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : rows) {
    check(r.term.coeffs.size() == dim, "row dimension mismatch");
    std::vector<Int> v(dim + 1);
    for (size_t i = 0; i < dim; ++i) v[i] = -r.term.coeffs[i];
    v[dim] = -r.term.constant;
    if (r.rel == Rel::EQ) {
      std::vector<Int> w(dim + 1);
      for (size_t i = 0; i <= dim; ++i) w[i] = -v[i];
      out.push_back(std::move(w));
    }
    out.push_back(std::move(v));
  }
  std::vector<Int> lam(dim + 1, 0);
  lam[dim] = 1;
  out.push_back(std::move(lam));
  return out;
}

ClosureGenerators split_cone(const detail::ConeDD& cone, size_t dim) {
  ClosureGenerators g;
  for (const auto& l : cone.lines) {
    check(l[dim] == 0, "generator line with nonzero scaling component");
    g.lines.emplace_back(l.begin(), l.begin() + dim);
  }
  for (const auto& r : cone.rays) {
    check(r[dim] >= 0, "generator ray with negative scaling component");
    if (r[dim] == 0) {
      g.rays.emplace_back(r.begin(), r.begin() + dim);
    } else {
      std::vector<Rational> p(dim);
      for (size_t i = 0; i < dim; ++i) p[i] = make_rational(r[i], r[dim]);
      g.points.push_back(std::move(p));
    }
  }
  return g;
}

std::vector<std::vector<Int>> dual_rows_from_gens(const ClosureGenerators& g,
                                                  size_t dim) {
  std::vector<std::vector<Int>> out;
  for (const auto& p : g.points) {
    Int den = 1;
    for (const auto& c : p) den = lcm(den, c.get_den());
    std::vector<Int> v(dim + 1);
    for (size_t i = 0; i < dim; ++i) {
      Rational scaled = p[i] * Rational(den);
      v[i] = scaled.get_num();
    }
    v[dim] = den;
    out.push_back(std::move(v));
  }
  for (const auto& r : g.rays) {
    std::vector<Int> v(r.begin(), r.end());
    v.push_back(0);
    out.push_back(std::move(v));
  }
  for (const auto& l : g.lines) {
    std::vector<Int> v(l.begin(), l.end());
    v.push_back(0);
    out.push_back(v);
    for (auto& c : v) c = -c;
    out.push_back(std::move(v));
  }
  return out;
}

// Rays of the dual cone are the facet inequalities of the primal closure;
// dual lines are its affine-hull equalities.
void decode_dual(const detail::ConeDD& cone, size_t dim, Rows& ineqs,
                 Rows& eqs) {
  for (const auto& r : cone.rays) {
    if (leading(r) == dim) {
      check(r[dim] > 0, "dual ray encodes 0 >= positive");
      continue;  // trivial 1 >= 0
    }
    AtomicConstraint c;
    c.term.coeffs.resize(dim);
    for (size_t i = 0; i < dim; ++i) c.term.coeffs[i] = -r[i];
    c.term.constant = -r[dim];
    c.rel = Rel::LE;
    normalize(c);
    ineqs.push_back(std::move(c));
  }
  for (const auto& l : cone.lines) {
    check(leading(l) < dim, "dual line without variable support");
    AtomicConstraint c;
    c.term.coeffs.assign(l.begin(), l.begin() + dim);
    c.term.constant = l[dim];
    c.rel = Rel::EQ;
    normalize(c);
    eqs.push_back(std::move(c));
  }
}

struct CanonOut {
  bool empty = true;
  Rows rows;
  std::shared_ptr<const ClosureGenerators> gens;
};

CanonOut canonicalize(const VarSpace& space, Rows rows) {
  const size_t dim = space.dim();
  for (const auto& r : rows)
    check(r.term.coeffs.size() == dim, "row dimension mismatch");
  if (!detail::simplify_rows(rows)) return {};
  if (!detail::rows_satisfiable(rows, dim)) return {};

  // Inequalities whose boundary contains the whole set become equalities.
  Rows eqs, ineqs;
  for (const auto& r : rows) (r.rel == Rel::EQ ? eqs : ineqs).push_back(r);
  {
    Rows rest;
    for (auto& r : ineqs) {
      bool implied_eq = false;
      if (r.rel == Rel::LE) {
        Rows test = rows;
        test.push_back(AtomicConstraint{r.term, Rel::LT});
        implied_eq = !detail::rows_satisfiable(std::move(test), dim);
      }
      if (implied_eq) {
        r.rel = Rel::EQ;
        eqs.push_back(r);
      } else {
        rest.push_back(r);
      }
    }
    ineqs = std::move(rest);
  }

  detail::IntEchelon ech;
  for (const auto& e : eqs) {
    std::vector<Int> v = e.term.coeffs;
    v.push_back(e.term.constant);
    ech.insert(std::move(v));
  }
  Rows eq_rows;
  for (const auto& v : ech.rows()) {
    check(leading(v) < dim, "affine hull inconsistency");
    AtomicConstraint c;
    c.term.coeffs.assign(v.begin(), v.begin() + dim);
    c.term.constant = v[dim];
    c.rel = Rel::EQ;
    normalize(c);
    eq_rows.push_back(std::move(c));
  }

  {
    Rows red;
    for (const auto& r : ineqs) {
      std::vector<Int> v = r.term.coeffs;
      v.push_back(r.term.constant);
      v = ech.reduce(std::move(v));
      AtomicConstraint c;
      c.term.coeffs.assign(v.begin(), v.begin() + dim);
      c.term.constant = v[dim];
      c.rel = r.rel;
      normalize(c);
      if (detail::ground_true(c)) continue;
      check(!detail::ground_false(c), "row reduction inconsistency");
      red.push_back(std::move(c));
    }
    detail::simplify_rows(red);
    ineqs = std::move(red);
  }

  Rows closure = eq_rows;
  for (const auto& r : ineqs)
    closure.push_back(AtomicConstraint{r.term, Rel::LE});
  auto cone1 = detail::cone_from_inequalities(
      cone_rows_from_constraints(closure, dim), dim + 1);
  auto gens = std::make_shared<ClosureGenerators>(split_cone(cone1, dim));
  check(!gens->points.empty(), "nonempty polyhedron without points");
  auto cone2 = detail::cone_from_inequalities(dual_rows_from_gens(*gens, dim),
                                              dim + 1);
  Rows facets, eq2;
  decode_dual(cone2, dim, facets, eq2);
  check(eq2.size() == eq_rows.size(), "affine hull rank mismatch");

  Rows nnc = eq_rows;
  nnc.insert(nnc.end(), ineqs.begin(), ineqs.end());
  Rows final_rows = eq_rows;
  for (auto& f : facets) {
    Rows test = nnc;
    test.push_back(AtomicConstraint{f.term, Rel::EQ});
    f.rel = detail::rows_satisfiable(std::move(test), dim) ? Rel::LE : Rel::LT;
    final_rows.push_back(f);
  }

  // Strict rows of the input not implied yet are carried as cuts (they slice
  // lower-dimensional pieces off facets, e.g. a removed vertex).
  std::vector<size_t> cuts;
  for (const auto& s : ineqs) {
    if (s.rel != Rel::LT) continue;
    Rows test = final_rows;
    test.push_back(detail::negate_le_lt(s));
    if (detail::rows_satisfiable(std::move(test), dim)) {
      final_rows.push_back(s);
      cuts.push_back(final_rows.size() - 1);
    }
  }
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    Rows without;
    for (size_t i = 0; i < final_rows.size(); ++i)
      if (i != *it) without.push_back(final_rows[i]);
    Rows test = without;
    test.push_back(detail::negate_le_lt(final_rows[*it]));
    if (!detail::rows_satisfiable(std::move(test), dim))
      final_rows = std::move(without);
  }

  detail::simplify_rows(final_rows);
  std::sort(final_rows.begin(), final_rows.end(), row_less);
  return {false, std::move(final_rows), std::move(gens)};
}

}  // namespace

Polyhedron Polyhedron::universe(VarSpacePtr space) {
  return Polyhedron(std::move(space), false, {});
}

Polyhedron Polyhedron::empty(VarSpacePtr space) {
  return Polyhedron(std::move(space), true, {});
}

Polyhedron Polyhedron::from_constraints(VarSpacePtr space,
                                        std::vector<AtomicConstraint> rows) {
  check(space != nullptr, "null variable space");
  CanonOut c = canonicalize(*space, std::move(rows));
  Polyhedron p(std::move(space), c.empty, std::move(c.rows));
  p.gens_ = std::move(c.gens);
  return p;
}

Polyhedron Polyhedron::from_closed_generators(
    VarSpacePtr space, const std::vector<std::vector<Rational>>& points,
    const std::vector<std::vector<Int>>& rays,
    const std::vector<std::vector<Int>>& lines) {
  check(space != nullptr, "null variable space");
  if (points.empty()) return empty(std::move(space));
  const size_t dim = space->dim();
  ClosureGenerators g{points, rays, lines};
  auto cone = detail::cone_from_inequalities(dual_rows_from_gens(g, dim),
                                             dim + 1);
  Rows ineqs, eqs;
  decode_dual(cone, dim, ineqs, eqs);
  eqs.insert(eqs.end(), ineqs.begin(), ineqs.end());
  return from_constraints(std::move(space), std::move(eqs));
}

Polyhedron Polyhedron::from_generators(VarSpacePtr space,
                                       const GeneratorSystem& gens) {
  check(space != nullptr, "null variable space");
  if (gens.vertices.empty()) return empty(std::move(space));
  const size_t dim = space->dim();
  // Epsilon encoding: vertices live at eps = 1, closure points at eps = 0;
  // the denoted set is the projection of the closed hull onto eps > 0.
  ClosureGenerators g;
  for (const auto& v : gens.vertices) {
    check(v.size() == dim, "vertex dimension mismatch");
    auto p = v;
    p.emplace_back(1);
    g.points.push_back(std::move(p));
  }
  for (const auto& c : gens.closure_points) {
    check(c.size() == dim, "closure point dimension mismatch");
    auto p = c;
    p.emplace_back(0);
    g.points.push_back(std::move(p));
  }
  for (const auto& r : gens.rays) {
    auto v = r;
    v.push_back(0);
    g.rays.push_back(std::move(v));
  }
  for (const auto& l : gens.lines) {
    auto v = l;
    v.push_back(0);
    g.lines.push_back(std::move(v));
  }
  auto cone = detail::cone_from_inequalities(dual_rows_from_gens(g, dim + 1),
                                             dim + 2);
  Rows ineqs, eqs;
  decode_dual(cone, dim + 1, ineqs, eqs);
  Rows all = std::move(eqs);
  all.insert(all.end(), ineqs.begin(), ineqs.end());
  {
    AtomicConstraint pos;  // eps > 0
    pos.term.coeffs.assign(dim + 1, 0);
    pos.term.coeffs[dim] = -1;
    pos.rel = Rel::LT;
    all.push_back(std::move(pos));
  }
  Rows projected = detail::eliminate(all, dim);
  Rows out;
  for (const auto& r : projected) {
    check(r.term.coeffs[dim] == 0, "eps elimination left residue");
    AtomicConstraint c;
    c.term.coeffs.assign(r.term.coeffs.begin(), r.term.coeffs.begin() + dim);
    c.term.constant = r.term.constant;
    c.rel = r.rel;
    out.push_back(std::move(c));
  }
  return from_constraints(std::move(space), std::move(out));
}

bool Polyhedron::contains(const std::vector<Rational>& point) const {
  check(point.size() == space_->dim(), "point dimension mismatch");
  if (empty_) return false;
  for (const auto& r : rows_)
    if (!r.sat(point)) return false;
  return true;
}

bool Polyhedron::includes(const Polyhedron& other) const {
  check(space_->same(*other.space_), "space mismatch");
  if (other.empty_) return true;
  if (empty_) return false;
  const size_t dim = space_->dim();
  for (const auto& c : rows_) {
    if (c.rel == Rel::EQ) {
      for (int side = 0; side < 2; ++side) {
        Rows test = other.rows_;
        test.push_back(make_constraint(
            side == 0 ? c.term : c.term.negated(), Rel::LT));
        if (detail::rows_satisfiable(std::move(test), dim)) return false;
      }
    } else {
      Rows test = other.rows_;
      test.push_back(detail::negate_le_lt(c));
      if (detail::rows_satisfiable(std::move(test), dim)) return false;
    }
  }
  return true;
}

bool Polyhedron::structurally_equal(const Polyhedron& other) const {
  if (!space_->same(*other.space_) || empty_ != other.empty_ ||
      rows_.size() != other.rows_.size())
    return false;
  for (size_t i = 0; i < rows_.size(); ++i)
    if (!row_equal(rows_[i], other.rows_[i])) return false;
  return true;
}

bool Polyhedron::equals(const Polyhedron& other) const {
  if (structurally_equal(other)) return true;
  return includes(other) && other.includes(*this);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  check(space_->same(*other.space_), "space mismatch");
  if (empty_) return *this;
  if (other.empty_) return other;
  Rows rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return from_constraints(space_, std::move(rows));
}

Polyhedron Polyhedron::intersect_rows(
    const std::vector<AtomicConstraint>& rows) const {
  if (empty_) return *this;
  Rows all = rows_;
  all.insert(all.end(), rows.begin(), rows.end());
  return from_constraints(space_, std::move(all));
}

namespace {

// Shared implementation of the two time operators: future uses coefficient
// -sum(clock coeffs) on the auxiliary delay variable, past uses +sum.
Polyhedron time_shift(const Polyhedron& p, const VarSpace& space, int sign) {
  const size_t dim = space.dim();
  const size_t nclocks = space.clock_count();
  Rows ext;
  for (const auto& r : p.constraints()) {
    AtomicConstraint c;
    c.term.coeffs = r.term.coeffs;
    Int s = 0;
    for (size_t i = 0; i < nclocks; ++i) s += r.term.coeffs[i];
    c.term.coeffs.push_back(sign * s);
    c.term.constant = r.term.constant;
    c.rel = r.rel;
    ext.push_back(std::move(c));
  }
  AtomicConstraint dpos;
  dpos.term.coeffs.assign(dim + 1, 0);
  dpos.term.coeffs[dim] = -1;
  dpos.rel = Rel::LE;
  ext.push_back(std::move(dpos));
  Rows projected = detail::eliminate(ext, dim);
  Rows out;
  for (const auto& r : projected) {
    check(r.term.coeffs[dim] == 0, "delay elimination left residue");
    AtomicConstraint c;
    c.term.coeffs.assign(r.term.coeffs.begin(), r.term.coeffs.begin() + dim);
    c.term.constant = r.term.constant;
    c.rel = r.rel;
    out.push_back(std::move(c));
  }
  return Polyhedron::from_constraints(p.space(), std::move(out));
}

}  // namespace

Polyhedron Polyhedron::time_elapse() const {
  if (empty_) return *this;
  return time_shift(*this, *space_, -1);
}

Polyhedron Polyhedron::time_past() const {
  if (empty_) return *this;
  Polyhedron shifted = time_shift(*this, *space_, 1);
  Rows clamp;
  for (size_t i = 0; i < space_->clock_count(); ++i) {
    AtomicConstraint c;
    c.term.coeffs.assign(space_->dim(), 0);
    c.term.coeffs[i] = -1;
    c.rel = Rel::LE;
    clamp.push_back(std::move(c));
  }
  return shifted.intersect_rows(clamp);
}

Polyhedron Polyhedron::reset(const std::vector<size_t>& clock_indices) const {
  if (empty_) return *this;
  Rows rows = rows_;
  for (size_t x : clock_indices) {
    check(space_->is_clock(x), "reset of a non-clock variable");
    rows = detail::eliminate(rows, x);
  }
  for (size_t x : clock_indices) {
    AtomicConstraint c;
    c.term.coeffs.assign(space_->dim(), 0);
    c.term.coeffs[x] = 1;
    c.rel = Rel::EQ;
    rows.push_back(std::move(c));
  }
  return from_constraints(space_, std::move(rows));
}

Polyhedron Polyhedron::cylindrify(size_t var) const {
  if (empty_) return *this;
  Rows rows = detail::eliminate(rows_, var);
  AtomicConstraint c;
  c.term.coeffs.assign(space_->dim(), 0);
  c.term.coeffs[var] = -1;
  c.rel = Rel::LE;
  rows.push_back(std::move(c));
  return from_constraints(space_, std::move(rows));
}

Polyhedron Polyhedron::project_to_params() const {
  VarSpacePtr pspace = space_->param_space();
  if (empty_) return empty(pspace);
  Rows rows = rows_;
  for (size_t x = 0; x < space_->clock_count(); ++x)
    rows = detail::eliminate(rows, x);
  Rows out;
  const size_t nclocks = space_->clock_count();
  for (const auto& r : rows) {
    for (size_t x = 0; x < nclocks; ++x)
      check(r.term.coeffs[x] == 0, "clock elimination left residue");
    AtomicConstraint c;
    c.term.coeffs.assign(r.term.coeffs.begin() + nclocks, r.term.coeffs.end());
    c.term.constant = r.term.constant;
    c.rel = r.rel;
    out.push_back(std::move(c));
  }
  return from_constraints(std::move(pspace), std::move(out));
}

Polyhedron Polyhedron::substitute_params(
    const std::vector<Rational>& values) const {
  check(values.size() == space_->param_count(), "parameter count mismatch");
  const size_t nclocks = space_->clock_count();
  std::vector<std::string> clock_names(space_->names().begin(),
                                       space_->names().begin() + nclocks);
  VarSpacePtr cspace = VarSpace::make(std::move(clock_names), {});
  if (empty_) return empty(cspace);
  Rows out;
  for (const auto& r : rows_) {
    Rational c0(r.term.constant);
    for (size_t j = 0; j < values.size(); ++j)
      c0 += Rational(r.term.coeffs[nclocks + j]) * values[j];
    const Int& den = c0.get_den();
    AtomicConstraint c;
    c.term.coeffs.resize(nclocks);
    for (size_t i = 0; i < nclocks; ++i) c.term.coeffs[i] = r.term.coeffs[i] * den;
    c.term.constant = c0.get_num();
    c.rel = r.rel;
    out.push_back(std::move(c));
  }
  return from_constraints(std::move(cspace), std::move(out));
}

const ClosureGenerators& Polyhedron::closure_generators() const {
  static const ClosureGenerators kEmpty;
  if (empty_) return kEmpty;
  if (!gens_) {
    auto cone = detail::cone_from_inequalities(
        cone_rows_from_constraints(rows_, space_->dim()), space_->dim() + 1);
    gens_ = std::make_shared<ClosureGenerators>(
        split_cone(cone, space_->dim()));
  }
  return *gens_;
}

GeneratorSystem Polyhedron::generators() const {
  GeneratorSystem g;
  if (empty_) return g;
  const size_t dim = space_->dim();
  Rows eps_rows;
  for (const auto& r : rows_) {
    AtomicConstraint c;
    c.term.coeffs = r.term.coeffs;
    c.term.coeffs.push_back(r.rel == Rel::LT ? 1 : 0);
    c.term.constant = r.term.constant;
    c.rel = r.rel == Rel::LT ? Rel::LE : r.rel;
    eps_rows.push_back(std::move(c));
  }
  AtomicConstraint lo, hi;
  lo.term.coeffs.assign(dim + 1, 0);
  lo.term.coeffs[dim] = -1;
  lo.rel = Rel::LE;
  hi.term.coeffs.assign(dim + 1, 0);
  hi.term.coeffs[dim] = 1;
  hi.term.constant = -1;
  hi.rel = Rel::LE;
  eps_rows.push_back(std::move(lo));
  eps_rows.push_back(std::move(hi));
  auto cone = detail::cone_from_inequalities(
      cone_rows_from_constraints(eps_rows, dim + 1), dim + 2);
  ClosureGenerators eps = split_cone(cone, dim + 1);
  auto push_unique = [](std::vector<std::vector<Rational>>& list,
                        std::vector<Rational> v) {
    for (const auto& u : list)
      if (u == v) return;
    list.push_back(std::move(v));
  };
  for (const auto& p : eps.points) {
    std::vector<Rational> x(p.begin(), p.begin() + dim);
    if (p[dim] > 0)
      push_unique(g.vertices, std::move(x));
  }
  for (const auto& p : eps.points) {
    if (p[dim] != 0) continue;
    std::vector<Rational> x(p.begin(), p.begin() + dim);
    bool is_vertex = false;
    for (const auto& v : g.vertices)
      if (v == x) {
        is_vertex = true;
        break;
      }
    if (!is_vertex) push_unique(g.closure_points, std::move(x));
  }
  for (const auto& r : eps.rays) {
    check(r[dim] == 0, "bounded direction escaped");
    g.rays.emplace_back(r.begin(), r.begin() + dim);
  }
  for (const auto& l : eps.lines) {
    check(l[dim] == 0, "bounded direction escaped");
    g.lines.emplace_back(l.begin(), l.begin() + dim);
  }
  return g;
}

Polyhedron Polyhedron::integer_hull() const {
  if (empty_) return *this;
  const size_t dim = space_->dim();
  const ClosureGenerators& cg = closure_generators();
  std::vector<Int> lo(dim), hi(dim);
  for (size_t i = 0; i < dim; ++i) {
    std::optional<Rational> mn, mx;
    for (const auto& p : cg.points) {
      if (!mn || p[i] < *mn) mn = p[i];
      if (!mx || p[i] > *mx) mx = p[i];
    }
    lo[i] = floor_int(*mn);
    hi[i] = ceil_int(*mx);
  }
  // Enumeration box: vertex bounds widened by one full step along every
  // unbounded direction; every integer point of the hull is then a convex
  // combination of integer points inside the box (Meyer's construction).
  for (const auto& r : cg.rays)
    for (size_t i = 0; i < dim; ++i) {
      if (r[i] > 0) hi[i] += r[i];
      else lo[i] += r[i];
    }
  for (const auto& l : cg.lines)
    for (size_t i = 0; i < dim; ++i) {
      hi[i] += abs(l[i]);
      lo[i] -= abs(l[i]);
    }
  Int cells = 1;
  for (size_t i = 0; i < dim; ++i) cells *= hi[i] - lo[i] + 1;
  check(cells <= 4000000, "integer hull enumeration exceeds ceiling");

  std::vector<std::vector<Rational>> found;
  std::vector<Int> z(dim);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == dim) {
      for (const auto& r : rows_) {
        Int acc = r.term.constant;
        for (size_t j = 0; j < dim; ++j) acc += r.term.coeffs[j] * z[j];
        bool ok = r.rel == Rel::EQ   ? acc == 0
                  : r.rel == Rel::LE ? acc <= 0
                                     : acc < 0;
        if (!ok) return;
      }
      found.emplace_back(z.begin(), z.end());
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      z[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  if (found.empty()) return empty(space_);
  return from_closed_generators(space_, found, cg.rays, cg.lines);
}

std::string Polyhedron::to_text() const {
  if (empty_) return "false";
  if (rows_.empty()) return "true";
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += " & ";
    out += poly::to_text(rows_[i], *space_);
  }
  return out;
}

Polyhedron nonneg_orthant(VarSpacePtr space) {
  Rows rows;
  for (size_t i = 0; i < space->dim(); ++i) {
    AtomicConstraint c;
    c.term.coeffs.assign(space->dim(), 0);
    c.term.coeffs[i] = -1;
    c.rel = Rel::LE;
    rows.push_back(std::move(c));
  }
  return Polyhedron::from_constraints(std::move(space), std::move(rows));
}

}  // namespace polyparam::poly
