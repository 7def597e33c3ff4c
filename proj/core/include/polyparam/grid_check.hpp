// Valuation-by-valuation validation of a synthesized parameter set against
// the concrete oracle.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polyparam/poly_set.hpp"
#include "polyparam/pta.hpp"
#include "polyparam/parser.hpp"
#include "polyparam/synthesis.hpp"

namespace polyparam::grid {

using poly::Rational;

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridViolation {
  std::vector<Rational> point;
  bool in_result = false;
  bool oracle_truth = false;
  bool expected = false;  // integer-projected variants may miss rationals
};

struct GridReport {
  uint64_t integer_points = 0;
  uint64_t rational_points = 0;
  std::vector<GridViolation> violations;

  bool ok() const {
    for (const auto& v : violations)
      if (!v.expected) return false;
    return true;
  }
};

// Checks every integer point of the domain box (exact agreement required,
// at most 10000 points -- GridError beyond that) plus `rational_samples`
// non-integer grid points in a fixed order of increasing denominator, where
// membership must imply concrete truth.  For the integer-projected variants
// a rational point in the oracle's favour is recorded but expected.
GridReport grid_check(const pta::PTA& a, const pta::Property& prop,
                      synth::Variant variant,
                      const poly::PolyhedralSet& result,
                      size_t rational_samples);

}  // namespace polyparam::grid
