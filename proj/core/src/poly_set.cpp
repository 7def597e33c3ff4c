#include "polyparam/poly_set.hpp"

#include <algorithm>

#include "polyparam/detail/fm.hpp"

namespace polyparam::poly {
namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw KernelError(msg);
}

}  // namespace

PolyhedralSet PolyhedralSet::empty_set(VarSpacePtr space) {
  return PolyhedralSet(std::move(space), {});
}

PolyhedralSet PolyhedralSet::universe(VarSpacePtr space) {
  std::vector<Polyhedron> ds{Polyhedron::universe(space)};
  return PolyhedralSet(std::move(space), std::move(ds));
}

PolyhedralSet PolyhedralSet::of(Polyhedron p) {
  VarSpacePtr space = p.space();
  return from_disjuncts(std::move(space), {std::move(p)});
}

PolyhedralSet PolyhedralSet::from_disjuncts(VarSpacePtr space,
                                            std::vector<Polyhedron> ds) {
  std::vector<Polyhedron> live;
  for (auto& d : ds) {
    check(d.space()->same(*space), "disjunct space mismatch");
    if (!d.is_empty()) live.push_back(std::move(d));
  }
  // Deterministic order first, then drop disjuncts included in another
  // (textual duplicates collapse via the keep-first rule).
  std::vector<std::string> texts(live.size());
  std::vector<size_t> order(live.size());
  for (size_t i = 0; i < live.size(); ++i) {
    texts[i] = live[i].to_text();
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return texts[a] < texts[b]; });
  std::vector<Polyhedron> sorted;
  std::vector<std::string> stexts;
  for (size_t i : order) {
    if (!stexts.empty() && stexts.back() == texts[i]) continue;
    sorted.push_back(std::move(live[i]));
    stexts.push_back(std::move(texts[i]));
  }
  std::vector<bool> removed(sorted.size(), false);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (removed[i]) continue;
    for (size_t j = 0; j < sorted.size(); ++j) {
      if (i == j || removed[j]) continue;
      if (sorted[j].includes(sorted[i]) &&
          !(sorted[i].includes(sorted[j]) && i < j)) {
        removed[i] = true;
        break;
      }
    }
  }
  std::vector<Polyhedron> kept;
  for (size_t i = 0; i < sorted.size(); ++i)
    if (!removed[i]) kept.push_back(std::move(sorted[i]));
  return PolyhedralSet(std::move(space), std::move(kept));
}

PolyhedralSet PolyhedralSet::unite(const PolyhedralSet& other) const {
  check(space_->same(*other.space_), "space mismatch");
  std::vector<Polyhedron> ds = disjuncts_;
  ds.insert(ds.end(), other.disjuncts_.begin(), other.disjuncts_.end());
  return from_disjuncts(space_, std::move(ds));
}

PolyhedralSet PolyhedralSet::intersect(const PolyhedralSet& other) const {
  check(space_->same(*other.space_), "space mismatch");
  std::vector<Polyhedron> ds;
  for (const auto& a : disjuncts_)
    for (const auto& b : other.disjuncts_) ds.push_back(a.intersect(b));
  return from_disjuncts(space_, std::move(ds));
}

PolyhedralSet PolyhedralSet::intersect(const Polyhedron& other) const {
  std::vector<Polyhedron> ds;
  for (const auto& a : disjuncts_) ds.push_back(a.intersect(other));
  return from_disjuncts(space_, std::move(ds));
}

PolyhedralSet complement_in(const Polyhedron& p, const PolyhedralSet& domain) {
  VarSpacePtr space = domain.space();
  check(p.space()->same(*space), "space mismatch");
  if (p.is_empty()) return domain;
  std::vector<Polyhedron> pieces;
  for (const auto& c : p.constraints()) {
    std::vector<AtomicConstraint> negs;
    if (c.rel == Rel::EQ) {
      negs.push_back(make_constraint(c.term, Rel::LT));
      negs.push_back(make_constraint(c.term.negated(), Rel::LT));
    } else {
      negs.push_back(detail::negate_le_lt(c));
    }
    for (const auto& n : negs)
      for (const auto& d : domain.disjuncts())
        pieces.push_back(d.intersect_rows({n}));
  }
  return PolyhedralSet::from_disjuncts(std::move(space), std::move(pieces));
}

PolyhedralSet PolyhedralSet::subtract(const Polyhedron& other) const {
  return complement_in(other, *this);
}

PolyhedralSet PolyhedralSet::subtract(const PolyhedralSet& other) const {
  check(space_->same(*other.space_), "space mismatch");
  PolyhedralSet acc = *this;
  for (const auto& b : other.disjuncts_) {
    if (acc.is_empty()) break;
    acc = complement_in(b, acc);
  }
  return acc;
}

bool PolyhedralSet::includes_set(const PolyhedralSet& other) const {
  return other.subtract(*this).is_empty();
}

bool PolyhedralSet::set_equals(const PolyhedralSet& other) const {
  if (to_text() == other.to_text()) return true;
  return includes_set(other) && other.includes_set(*this);
}

bool PolyhedralSet::contains(const std::vector<Rational>& point) const {
  for (const auto& d : disjuncts_)
    if (d.contains(point)) return true;
  return false;
}

PolyhedralSet PolyhedralSet::project_to_params() const {
  std::vector<Polyhedron> ds;
  for (const auto& d : disjuncts_) ds.push_back(d.project_to_params());
  return from_disjuncts(space_->param_space(), std::move(ds));
}

PolyhedralSet PolyhedralSet::integer_hull() const {
  std::vector<Polyhedron> ds;
  for (const auto& d : disjuncts_) ds.push_back(d.integer_hull());
  return from_disjuncts(space_, std::move(ds));
}

std::string PolyhedralSet::to_text() const {
  if (disjuncts_.empty()) return "false";
  std::string out;
  for (size_t i = 0; i < disjuncts_.size(); ++i) {
    if (i) out += " | ";
    out += disjuncts_[i].to_text();
  }
  return out;
}

}  // namespace polyparam::poly
