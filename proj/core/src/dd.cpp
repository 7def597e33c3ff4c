#include "polyparam/detail/dd.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace polyparam::poly::detail {

void gcd_reduce(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& a : v) g = gcd(g, a);
  if (g > 1)
    for (auto& a : v) a /= g;
}

namespace {

size_t leading(const std::vector<Int>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool all_zero(const std::vector<Int>& v) {
  return leading(v) == v.size();
}

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace

std::vector<Int> IntEchelon::reduce(std::vector<Int> v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Int& vc = v[pivots_[k]];
    if (vc == 0) continue;
    const Int pc = rows_[k][pivots_[k]];  // positive
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = v[j] * pc - rows_[k][j] * vc;
  }
  gcd_reduce(v);
  return v;
}

bool IntEchelon::insert(std::vector<Int> v) {
  v = reduce(std::move(v));
  size_t p = leading(v);
  if (p == v.size()) return false;
  if (v[p] < 0)
    for (auto& a : v) a = -a;
  // Back-substitute into existing rows so reduce() stays deterministic.
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Int& rc = rows_[k][p];
    if (rc == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      rows_[k][j] = rows_[k][j] * v[p] - v[j] * rc;
    gcd_reduce(rows_[k]);
    if (rows_[k][pivots_[k]] < 0)
      for (auto& a : rows_[k]) a = -a;
  }
  size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, p);
  return true;
}

namespace {

using Bits = std::vector<uint64_t>;

bool bits_subset(const Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

struct Ray {
  std::vector<Int> v;
  Bits tight;  // of processed rows; exact by construction
};

}  // namespace

ConeDD cone_from_inequalities(const std::vector<std::vector<Int>>& rows,
                              size_t dim) {
  if (dim == 0) throw std::invalid_argument("zero-dimensional cone");
  IntEchelon lines;
  for (size_t i = 0; i < dim; ++i) {
    std::vector<Int> e(dim, 0);
    e[i] = 1;
    lines.insert(std::move(e));
  }
  std::vector<Ray> rays;
  const size_t words = (rows.size() + 63) / 64;
  auto set_bit = [](Bits& b, size_t i) { b[i / 64] |= uint64_t(1) << (i % 64); };

  for (size_t i = 0; i < rows.size(); ++i) {
    const std::vector<Int>& a = rows[i];
    if (a.size() != dim) throw std::invalid_argument("cone row dimension");
    // A line with a nonzero product turns into a ray (lineality drop).
    std::optional<size_t> hit;
    for (size_t k = 0; k < lines.rows().size(); ++k)
      if (dot(lines.rows()[k], a) != 0) {
        hit = k;
        break;
      }
    if (hit) {
      std::vector<Int> b0 = lines.rows()[hit.value()];
      Int d0 = dot(b0, a);
      if (d0 < 0) {
        for (auto& c : b0) c = -c;
        d0 = -d0;
      }
      IntEchelon next;
      for (size_t k = 0; k < lines.rows().size(); ++k) {
        if (k == hit.value()) continue;
        std::vector<Int> l = lines.rows()[k];
        const Int dl = dot(l, a);
        if (dl != 0)
          for (size_t j = 0; j < dim; ++j) l[j] = l[j] * d0 - b0[j] * dl;
        gcd_reduce(l);
        next.insert(std::move(l));
      }
      lines = std::move(next);
      for (auto& r : rays) {
        const Int dr = dot(r.v, a);
        if (dr != 0)
          for (size_t j = 0; j < dim; ++j) r.v[j] = r.v[j] * d0 - b0[j] * dr;
        r.v = lines.reduce(std::move(r.v));
        check(!all_zero(r.v), "ray vanished in lineality drop");
        set_bit(r.tight, i);
      }
      Ray nb;
      nb.v = lines.reduce(std::move(b0));
      check(!all_zero(nb.v), "new ray vanished");
      nb.tight.assign(words, 0);
      for (size_t k = 0; k < i; ++k) set_bit(nb.tight, k);
      rays.push_back(std::move(nb));
      continue;
    }
    // All lines orthogonal to the row: standard double-description step.
    std::vector<Int> d(rays.size());
    bool any_neg = false;
    for (size_t k = 0; k < rays.size(); ++k) {
      d[k] = dot(rays[k].v, a);
      if (d[k] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t k = 0; k < rays.size(); ++k)
        if (d[k] == 0) set_bit(rays[k].tight, i);
      continue;
    }
    std::vector<Ray> next;
    std::vector<size_t> pos, neg;
    for (size_t k = 0; k < rays.size(); ++k) {
      if (d[k] > 0) pos.push_back(k);
      else if (d[k] < 0) neg.push_back(k);
    }
    for (size_t k = 0; k < rays.size(); ++k) {
      if (d[k] < 0) continue;
      Ray r = rays[k];
      if (d[k] == 0) set_bit(r.tight, i);
      next.push_back(std::move(r));
    }
    for (size_t p : pos) {
      for (size_t n : neg) {
        Bits common(words);
        for (size_t w = 0; w < words; ++w)
          common[w] = rays[p].tight[w] & rays[n].tight[w];
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (bits_subset(common, rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray w;
        w.v.resize(dim);
        for (size_t j = 0; j < dim; ++j)
          w.v[j] = d[p] * rays[n].v[j] - d[n] * rays[p].v[j];
        w.v = lines.reduce(std::move(w.v));
        check(!all_zero(w.v), "combined ray vanished");
        w.tight = common;
        set_bit(w.tight, i);
        next.push_back(std::move(w));
      }
    }
    // Dedupe identical representatives (possible in degenerate inputs).
    std::vector<Ray> unique;
    for (auto& r : next) {
      bool dup = false;
      for (const auto& u : unique)
        if (u.v == r.v) {
          dup = true;
          break;
        }
      if (!dup) unique.push_back(std::move(r));
    }
    rays = std::move(unique);
  }
  ConeDD out;
  out.lines = lines.rows();
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace polyparam::poly::detail
