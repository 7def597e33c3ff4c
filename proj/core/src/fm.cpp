#include "polyparam/detail/fm.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace polyparam::poly::detail {

bool ground_false(const AtomicConstraint& c) {
  if (!c.term.coeffs_all_zero()) return false;
  const Int& k = c.term.constant;
  switch (c.rel) {
    case Rel::EQ: return k != 0;
    case Rel::LE: return k > 0;
    case Rel::LT: return k >= 0;
  }
  return false;
}

bool ground_true(const AtomicConstraint& c) {
  return c.term.coeffs_all_zero() && !ground_false(c);
}

AtomicConstraint negate_le_lt(const AtomicConstraint& c) {
  switch (c.rel) {
    case Rel::LE: return make_constraint(c.term.negated(), Rel::LT);
    case Rel::LT: return make_constraint(c.term.negated(), Rel::LE);
    case Rel::EQ: break;
  }
  throw std::logic_error("negate_le_lt on an equality");
}

namespace {

// (bound, strictness) order: for rows sharing coefficients, the tighter of
// a.x <= -c0 vs a.x < -c0' is the one with the smaller bound, strict wins
// ties.
bool tighter(const AtomicConstraint& a, const AtomicConstraint& b) {
  int c = cmp(b.term.constant, a.term.constant);  // bound = -constant
  if (c != 0) return c < 0;
  return a.rel == Rel::LT && b.rel == Rel::LE;
}

}  // namespace

bool simplify_rows(Rows& rows) {
  for (auto& r : rows) normalize(r);
  for (const auto& r : rows)
    if (ground_false(r)) return false;
  Rows kept;
  // Tightest inequality per coefficient vector; all equalities kept (a
  // contradictory pair surfaces as ground-false during later elimination).
  std::map<std::vector<Int>, size_t> best_ineq;
  auto seen_eq = [&kept](const AtomicConstraint& c) {
    for (const auto& k : kept)
      if (k.rel == Rel::EQ && row_equal(k, c)) return true;
    return false;
  };
  for (const auto& r : rows) {
    if (ground_true(r)) continue;
    if (r.rel == Rel::EQ) {
      if (!seen_eq(r)) kept.push_back(r);
      continue;
    }
    auto it = best_ineq.find(r.term.coeffs);
    if (it == best_ineq.end()) {
      best_ineq.emplace(r.term.coeffs, kept.size());
      kept.push_back(r);
    } else if (tighter(r, kept[it->second])) {
      kept[it->second] = r;
    }
  }
  rows = std::move(kept);
  return true;
}

Rows eliminate(const Rows& rows, size_t var) {
  Rows out;
  std::vector<size_t> pos, neg;
  std::optional<size_t> pivot;
  for (size_t i = 0; i < rows.size(); ++i) {
    const Int& c = rows[i].term.coeffs.at(var);
    if (c == 0) {
      out.push_back(rows[i]);
      continue;
    }
    if (rows[i].rel == Rel::EQ) {
      if (!pivot || abs(c) < abs(rows[pivot.value()].term.coeffs[var]))
        pivot = i;
    }
    (c > 0 ? pos : neg).push_back(i);
  }
  auto combine = [&](const AtomicConstraint& a, const Int& ka,
                     const AtomicConstraint& b, const Int& kb, Rel rel) {
    AtomicConstraint r;
    size_t dim = a.term.coeffs.size();
    r.term.coeffs.resize(dim);
    for (size_t j = 0; j < dim; ++j)
      r.term.coeffs[j] = a.term.coeffs[j] * ka + b.term.coeffs[j] * kb;
    r.term.constant = a.term.constant * ka + b.term.constant * kb;
    r.rel = rel;
    normalize(r);
    return r;
  };
  if (pivot) {
    const AtomicConstraint& p = rows[pivot.value()];
    const Int& pc = p.term.coeffs[var];
    Int pabs = abs(pc);
    Int psign = pc > 0 ? 1 : -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot.value()) continue;
      const Int& c = rows[i].term.coeffs[var];
      if (c == 0) continue;
      // rows[i]*|pc| - p*(c*sign(pc)) zeroes the pivot column.
      out.push_back(combine(rows[i], pabs, p, -c * psign, rows[i].rel));
    }
    return out;
  }
  for (size_t i : pos) {
    for (size_t j : neg) {
      const AtomicConstraint& a = rows[i];
      const AtomicConstraint& b = rows[j];
      Rel rel = (a.rel == Rel::LT || b.rel == Rel::LT) ? Rel::LT : Rel::LE;
      out.push_back(combine(a, -b.term.coeffs[var], b, a.term.coeffs[var], rel));
    }
  }
  return out;
}

bool rows_satisfiable(Rows rows, size_t dim) {
  if (!simplify_rows(rows)) return false;
  std::vector<bool> done(dim, false);
  for (size_t round = 0; round < dim; ++round) {
    // Pick the variable with the fewest pos*neg pair combinations.
    std::vector<size_t> npos(dim, 0), nneg(dim, 0), neq(dim, 0);
    for (const auto& r : rows) {
      for (size_t v = 0; v < dim; ++v) {
        const Int& c = r.term.coeffs[v];
        if (c == 0) continue;
        if (r.rel == Rel::EQ)
          ++neq[v];
        else
          ++(c > 0 ? npos : nneg)[v];
      }
    }
    std::optional<size_t> pick;
    size_t best_cost = 0;
    for (size_t v = 0; v < dim; ++v) {
      if (done[v]) continue;
      if (npos[v] + nneg[v] + neq[v] == 0) continue;
      size_t cost = neq[v] > 0 ? rows.size() : npos[v] * nneg[v];
      if (!pick || cost < best_cost) {
        pick = v;
        best_cost = cost;
      }
    }
    if (!pick) break;
    rows = eliminate(rows, pick.value());
    done[pick.value()] = true;
    if (!simplify_rows(rows)) return false;
  }
  for (const auto& r : rows)
    if (ground_false(r)) return false;
  return true;
}

}  // namespace polyparam::poly::detail
