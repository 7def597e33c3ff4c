// Exact double description of polyhedral cones, with lineality support:
// given rows a_1..a_m, computes minimal generators of
//   K = { y in Q^dim : a_i . y >= 0 for all i }
// as a lineality basis plus extreme rays modulo that basis.
#pragma once

#include <vector>

#include "polyparam/rational.hpp"

namespace polyparam::poly::detail {

struct ConeDD {
  std::vector<std::vector<Int>> lines;  // echelonized basis of the lineality space
  std::vector<std::vector<Int>> rays;   // extreme rays, reduced mod lines, gcd-reduced
};

ConeDD cone_from_inequalities(const std::vector<std::vector<Int>>& rows,
                              size_t dim);

// Integer echelon basis maintenance (used by the cone engine and by the
// polyhedron canonical form for affine-hull equalities).
class IntEchelon {
 public:
  // Returns true if v was independent and inserted; v is consumed.
  bool insert(std::vector<Int> v);
  // Linear reduction of v against all basis rows (no sign normalization),
  // followed by a gcd reduction.
  std::vector<Int> reduce(std::vector<Int> v) const;
  const std::vector<std::vector<Int>>& rows() const { return rows_; }
  size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<Int>> rows_;   // sorted by pivot column
  std::vector<size_t> pivots_;
};

void gcd_reduce(std::vector<Int>& v);

}  // namespace polyparam::poly::detail
