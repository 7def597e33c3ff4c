#include "polyparam/grid_check.hpp"

#include "polyparam/oracle.hpp"

namespace polyparam::grid {

namespace {

using poly::Int;

// Lexicographic walk over the integer points of the domain box.
template <typename Fn>
void each_integer_point(const pta::ParamDomain& d, Fn&& fn) {
  const size_t n = d.lower.size();
  std::vector<Int> cur = d.lower;
  while (true) {
    std::vector<Rational> point;
    point.reserve(n);
    for (const Int& x : cur) point.emplace_back(x);
    fn(point);
    size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < d.upper[i]) {
        ++cur[i];
        for (size_t j = i + 1; j < n; ++j) cur[j] = d.lower[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

// Grid points with denominator exactly q, lexicographic, first parameter
// slowest.  Returns how many the callback consumed before saying stop.
template <typename Fn>
size_t each_q_point(const pta::ParamDomain& d, const Int& q, Fn&& fn) {
  const size_t n = d.lower.size();
  std::vector<Int> num(n);
  std::vector<Int> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = d.lower[i] * q;
    hi[i] = d.upper[i] * q;
    num[i] = lo[i];
  }
  size_t produced = 0;
  while (true) {
    Int den_lcm = 1;
    for (size_t i = 0; i < n; ++i)
      den_lcm = poly::lcm(den_lcm, q / poly::gcd(num[i], q));
    if (den_lcm == q) {
      std::vector<Rational> point;
      point.reserve(n);
      for (size_t i = 0; i < n; ++i)
        point.push_back(poly::make_rational(num[i], q));
      ++produced;
      if (!fn(point)) return produced;
    }
    size_t i = n;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (num[i] < hi[i]) {
        ++num[i];
        for (size_t j = i + 1; j < n; ++j) num[j] = lo[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return produced;
  }
}

}  // namespace

GridReport grid_check(const pta::PTA& a, const pta::Property& prop,
                      synth::Variant variant,
                      const poly::PolyhedralSet& result,
                      size_t rational_samples) {
  const size_t n = a.params.size();
  if (n == 0) throw GridError("model has no parameters to check");
  Int cells = 1;
  for (size_t i = 0; i < n; ++i) {
    cells *= a.domain.upper[i] - a.domain.lower[i] + 1;
    if (cells > 10000)
      throw GridError("domain box holds more than 10000 integer points");
  }

  GridReport report;
  const bool integer_variant = variant == synth::Variant::Integer;

  each_integer_point(a.domain, [&](const std::vector<Rational>& v) {
    ++report.integer_points;
    bool member = result.contains(v);
    bool truth = oracle::holds(a, prop, v);
    if (member != truth)
      report.violations.push_back({v, member, truth, false});
  });

  size_t want = rational_samples;
  for (Int q = 2; want > 0; ++q) {
    size_t got = each_q_point(a.domain, q, [&](const std::vector<Rational>& v) {
      ++report.rational_points;
      bool member = result.contains(v);
      if (member && !oracle::holds(a, prop, v))
        report.violations.push_back({v, true, false, integer_variant});
      return --want > 0;
    });
    if (got == 0) break;  // box has no non-integer grid points at all
  }
  return report;
}

}  // namespace polyparam::grid
