#pragma once

// Reference implementations for tests. They deliberately avoid the library's
// exact machinery: floating-point geometry, brute force and direct formulas.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "snf/snf.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx value(const snf::CycInt& a) {
  const int k = a.order();
  cplx z = 0;
  for (int j = 0; j < k; ++j) z += static_cast<double>(a[static_cast<std::size_t>(j)]) * std::polar(1.0, 2.0 * std::numbers::pi * j / k);
  return z;
}

inline int totient(int n) {
  int c = 0;
  for (int l = 1; l <= n; ++l) c += std::gcd(l, n) == 1;
  return c;
}

/// prod over primitive n-th roots w of (x - w), rounded to integers.
inline std::vector<std::int64_t> cyclotomic_numeric(int n) {
  std::vector<cplx> p{1.0};
  for (int l = 1; l <= n; ++l) {
    if (std::gcd(l, n) != 1) continue;
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * l / n);
    std::vector<cplx> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= w * p[i];
    }
    p = std::move(q);
  }
  std::vector<std::int64_t> out;
  for (auto c : p) out.push_back(std::llround(c.real()));
  return out;
}

inline std::vector<cplx> polygon(const snf::CycInt& barycenter) {
  const int k = barycenter.order();
  const cplx b = value(barycenter);
  std::vector<cplx> out;
  for (int j = 0; j < k; ++j) out.push_back(b + std::polar(1.0, 2.0 * std::numbers::pi * j / k));
  return out;
}

/// Vertex index pairs at which two cells coincide, by float comparison.
inline std::vector<std::pair<int, int>> shared_vertices(const snf::CycInt& a, const snf::CycInt& b) {
  const auto pa = polygon(a), pb = polygon(b);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (std::abs(pa[i] - pb[j]) < 1e-7) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

// Strictly inside a counter-clockwise convex polygon, by at least `margin`.
inline bool strictly_inside(const std::vector<cplx>& poly, cplx p, double margin) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const cplx e = poly[(i + 1) % poly.size()] - poly[i];
    const cplx d = p - poly[i];
    if ((e.real() * d.imag() - e.imag() * d.real()) / std::abs(e) <= margin) return false;
  }
  return true;
}

/// Interiors overlap, decided by sampling a fine grid over the first cell.
inline bool interiors_overlap_sampled(const snf::CycInt& a, const snf::CycInt& b, int grid = 200) {
  const auto pa = polygon(a), pb = polygon(b);
  const cplx c = value(a);
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const cplx p = c + cplx(-1.0 + 2.0 * i / grid, -1.0 + 2.0 * j / grid);
      if (strictly_inside(pa, p, 1e-4) && strictly_inside(pb, p, 1e-4)) return true;
    }
  }
  return false;
}

/// Exhaustive search for per-cell rotations making all shared vertices agree.
/// Depth-first over cells in list order; a partial assignment is abandoned
/// as soon as two assigned cells disagree on a common point.
inline std::optional<std::vector<int>> brute_force_glp(const snf::FractalSpec& spec) {
  const int k = spec.k();
  const std::size_t n = spec.size();
  std::map<std::pair<long long, long long>, std::vector<std::pair<std::size_t, int>>> at;
  for (std::size_t i = 0; i < n; ++i) {
    const auto poly = polygon(spec.cell(i).barycenter);
    for (int j = 0; j < k; ++j) {
      const auto key = std::pair{std::llround(poly[static_cast<std::size_t>(j)].real() * 1e6),
                                 std::llround(poly[static_cast<std::size_t>(j)].imag() * 1e6)};
      at[key].emplace_back(i, j);
    }
  }
  // For each cell, the (vertex j, other cell, other vertex) coincidences.
  std::vector<std::vector<std::tuple<int, std::size_t, int>>> meets(n);
  for (const auto& [key, list] : at)
    for (const auto& [i, j] : list)
      for (const auto& [i2, j2] : list)
        if (i2 != i) meets[i].emplace_back(j, i2, j2);

  std::vector<int> r(n, -1);
  auto consistent = [&](std::size_t i) {
    for (const auto& [j, i2, j2] : meets[i])
      if (r[i2] >= 0 && (j + r[i]) % k != (j2 + r[i2]) % k) return false;
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < k; ++v) {
      r[i] = v;
      if (consistent(i) && self(self, i + 1)) return true;
    }
    r[i] = -1;
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return r;
}

/// Sector of a point seen from the origin: 1..k for the half-open angle
/// (2 pi (i-1)/k, 2 pi i/k], computed in floating point.
inline int sector_by_angle(cplx p, int k) {
  double theta = std::arg(p);
  if (theta <= 1e-9) theta += 2.0 * std::numbers::pi;
  return static_cast<int>(std::ceil(theta * k / (2.0 * std::numbers::pi) - 1e-9));
}

}  // namespace oracle
