// Finite unions of polyhedra with reduced, deterministically ordered
// disjunct lists.  Union, intersection, difference, complement and exact
// set equality.
#pragma once

#include "polyparam/polyhedron.hpp"

namespace polyparam::poly {

class PolyhedralSet {
 public:
  static PolyhedralSet empty_set(VarSpacePtr space);
  static PolyhedralSet universe(VarSpacePtr space);
  static PolyhedralSet of(Polyhedron p);
  static PolyhedralSet from_disjuncts(VarSpacePtr space,
                                      std::vector<Polyhedron> ds);

  const VarSpacePtr& space() const { return space_; }
  bool is_empty() const { return disjuncts_.empty(); }
  const std::vector<Polyhedron>& disjuncts() const { return disjuncts_; }

  PolyhedralSet unite(const PolyhedralSet& other) const;
  PolyhedralSet intersect(const PolyhedralSet& other) const;
  PolyhedralSet intersect(const Polyhedron& other) const;
  PolyhedralSet subtract(const PolyhedralSet& other) const;
  PolyhedralSet subtract(const Polyhedron& other) const;

  bool includes_set(const PolyhedralSet& other) const;  // other subset of this
  bool set_equals(const PolyhedralSet& other) const;
  bool contains(const std::vector<Rational>& point) const;

  PolyhedralSet project_to_params() const;
  PolyhedralSet integer_hull() const;  // per disjunct

  std::string to_text() const;

 private:
  PolyhedralSet(VarSpacePtr space, std::vector<Polyhedron> ds)
      : space_(std::move(space)), disjuncts_(std::move(ds)) {}
  VarSpacePtr space_;
  std::vector<Polyhedron> disjuncts_;  // nonempty, none includes another
};

// domain minus p, computed by negating p's constraints piece by piece.
PolyhedralSet complement_in(const Polyhedron& p, const PolyhedralSet& domain);

}  // namespace polyparam::poly
