#pragma once

// Symmetric rings of cells: the simplest valid level-1 configurations.

#include <optional>
#include <vector>

#include "snf/model.hpp"

namespace snf::detail {

// -zeta^t (1 + zeta + ... + zeta^(m-1)); its product with (zeta - 1) is
// zeta^t - zeta^(t+m), a single-vertex contact step when m is k/2 (even k)
// or (k +- 1)/2 (odd k).
inline CycInt geometric_radius(int k, int t, int m) {
  CycInt sum(k);
  for (int i = 0; i < m; ++i) sum = sum + CycInt::root(k, i);
  return cyc_neg(cyc_rotate(sum, t));
}

inline bool valid_nondegenerate(const FractalSpec& spec, bool strict) {
  try {
    const auto report = validate(spec);
    return strict ? report.strict_valid() : report.valid();
  } catch (const spec_error&) {
    return false;
  }
}

inline bool real_positive(const CycInt& v) { return to_cartesian(v).x > geometry_eps && cyc_is_real(v); }

/// N = k ring: one corner cell per vertex axis, consecutive corners touching.
/// Exists iff 4 does not divide k.
inline std::optional<FractalSpec> corner_ring(int k) {
  std::vector<int> steps;
  if (k % 2 == 0)
    steps = {k / 2};
  else
    steps = {(k + 1) / 2, (k - 1) / 2};
  for (int m : steps) {
    for (int t = 0; t < k; ++t) {
      const CycInt radius = geometric_radius(k, t, m);
      if (!real_positive(radius)) continue;
      std::vector<CycInt> cells;
      for (int j = 0; j < k; ++j) cells.push_back(cyc_rotate(radius, j));
      FractalSpec spec(k, cells);
      if (valid_nondegenerate(spec, true)) return spec;
    }
  }
  return std::nullopt;
}

/// N = 2k ring for 4 | k: corners at R zeta^j plus one cell between each
/// neighbouring pair, touching both. Cells alternate corner, middle. Middle
/// cells inside the hull of the essential fixed points are preferred; for
/// k = 4 none exist and the outward ring is returned.
inline std::optional<FractalSpec> double_ring(int k) {
  if (k % 2 != 0) return std::nullopt;
  std::vector<int> gaps;
  for (int d = 1; d < k / 2; d += 2) {
    gaps.push_back(d);
    gaps.push_back(k - d);
  }
  for (bool strict : {true, false}) {
  for (int d : gaps) {
    const int m = (d + k / 2) % k;
    if (m == 0) continue;
    for (int a = 0; a < k; ++a) {
      if (mod(2 * a + d, k) != mod(k / 2 + 1, k)) continue;
      const CycInt radius = cyc_scale(geometric_radius(k, a, m), 2);
      if (!real_positive(radius)) continue;
      std::vector<CycInt> cells;
      for (int j = 0; j < k; ++j) {
        const CycInt corner = cyc_rotate(radius, j);
        cells.push_back(corner);
        cells.push_back(corner + CycInt::root(k, a + j, 2));
      }
      FractalSpec spec(k, cells);
      if (valid_nondegenerate(spec, strict)) return spec;
    }
  }
  }
  return std::nullopt;
}

}  // namespace snf::detail
