#pragma once

// Generators: GLP examples, counterexample cycles, seeded random
// configurations, and substitution expansion to deeper levels.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "snf/glp.hpp"
#include "snf/rings.hpp"

namespace snf {

struct GeneratorRecipe {
  enum class Kind { glp_example, counterexample };
  int k = 0;
  Kind kind = Kind::glp_example;
  int n = 1;           // counterexample: k = n * r (n a power of two for even k)
  int r = 1;           // counterexample: cycle length, odd and > 1
  int ring_cells = 0;  // example: k or 2k
};

/// k = 2^n r with r odd for even k; k = n r with n the smallest prime factor
/// for odd k, so that r < k.
inline GeneratorRecipe counterexample_recipe(int k) {
  if (k < 3 || k > max_order) throw std::invalid_argument("k must be in [3, " + std::to_string(max_order) + "]");
  if (is_prime(k)) throw std::invalid_argument("k=" + std::to_string(k) + " is prime: every configuration has GLP");
  if (is_power_of_two(k))
    throw std::invalid_argument("k=" + std::to_string(k) + " is a power of two: every configuration has GLP");
  GeneratorRecipe recipe;
  recipe.k = k;
  recipe.kind = GeneratorRecipe::Kind::counterexample;
  if (k % 2 == 0) {
    recipe.r = k;
    while (recipe.r % 2 == 0) recipe.r /= 2;
  } else {
    int p = 3;
    while (k % p != 0) p += 2;
    recipe.r = k / p;
  }
  recipe.n = k / recipe.r;
  return recipe;
}

/// Contact step out of a cell through its vertex a: diametral for even k,
/// the (k+1)/2 rotation class for odd k.
inline CycInt contact_step(int k, int a) {
  const int jump = k % 2 == 0 ? k / 2 : (k + 1) / 2;
  return CycInt::root(k, a) - CycInt::root(k, a + jump);
}

/// r cells at the partial sums of r contact steps whose directions are the
/// r-th roots of unity. The steps sum to zero, closing an odd cycle that is
/// either non-bipartite (even k) or has c - d = r not divisible by k (odd k).
inline FractalSpec generate_counterexample(int k) {
  const auto recipe = counterexample_recipe(k);
  std::vector<CycInt> cells{CycInt(k)};
  for (int h = 0; h + 1 < recipe.r; ++h) cells.push_back(cells.back() + contact_step(k, h * recipe.n));
  return FractalSpec(k, cells, true);
}

inline GeneratorRecipe example_recipe(int k) {
  if (k < 3 || k > max_order) throw std::invalid_argument("k must be in [3, " + std::to_string(max_order) + "]");
  GeneratorRecipe recipe;
  recipe.k = k;
  recipe.ring_cells = k % 4 == 0 ? 2 * k : k;
  return recipe;
}

/// One cycle of k corner cells when 4 does not divide k; otherwise 2k cells
/// with a connecting cell between neighbouring corners.
inline FractalSpec generate_glp_example(int k) {
  const auto recipe = example_recipe(k);
  auto ring = recipe.ring_cells == k ? detail::corner_ring(k) : detail::double_ring(k);
  if (!ring) throw std::logic_error("no ring configuration found for k=" + std::to_string(k));
  return *ring;
}

inline constexpr std::size_t expand_cell_limit = 100000;

/// Level-M configuration: cells at B + sum_{j<M} L^j t_{i_j}, where t_i are
/// the level-1 barycenters relative to the global barycenter B. Ordered with
/// the coarsest index most significant. M = 1 returns the input.
inline FractalSpec expand(const FractalSpec& spec, int levels) {
  if (levels < 1 || levels > 3) throw std::invalid_argument("expansion level must be 1, 2 or 3");
  if (levels == 1) return spec;
  std::size_t total = 1;
  for (int m = 0; m < levels; ++m) {
    total *= spec.size();
    if (total > expand_cell_limit)
      throw std::invalid_argument("expansion would exceed " + std::to_string(expand_cell_limit) + " cells");
  }
  const CycInt scale = derive_scaling(spec);
  const auto [sum, n] = global_barycenter(spec);
  const auto centre = cyc_divide_exact(sum, n);
  if (!centre) throw spec_error("global barycenter is not a cyclotomic integer; recentre the configuration");
  std::vector<CycInt> t;
  for (const auto& c : spec.cells()) t.push_back(c.barycenter - *centre);

  std::vector<CycInt> powers{CycInt::integer(spec.k(), 1)};
  for (int m = 1; m < levels; ++m) powers.push_back(powers.back() * scale);

  std::vector<CycInt> cells{*centre};
  for (int m = levels - 1; m >= 0; --m) {
    std::vector<CycInt> next;
    next.reserve(cells.size() * t.size());
    for (const auto& p : cells)
      for (const auto& ti : t) next.push_back(p + powers[static_cast<std::size_t>(m)] * ti);
    cells = std::move(next);
  }
  return FractalSpec(spec.k(), cells, true);
}

namespace detail {

// Every translation that makes two cells touch at exactly one vertex in a
// valid configuration.
inline std::vector<CycInt> legal_steps(int k) {
  std::vector<CycInt> steps;
  for (int a = 0; a < k; ++a) {
    if (k % 2 == 0) {
      steps.push_back(CycInt::root(k, a) - CycInt::root(k, a + k / 2));  // 2 zeta^a
    } else {
      steps.push_back(CycInt::root(k, a) - CycInt::root(k, a + (k + 1) / 2));
      steps.push_back(CycInt::root(k, a) - CycInt::root(k, a + (k - 1) / 2));
    }
  }
  return steps;
}

// Whether a new cell can join without coinciding with or overlapping any
// existing cell.
inline bool fits(const std::vector<CycInt>& cells, const CycInt& candidate) {
  const Cell c{candidate, cells.size()};
  const auto pc = to_cartesian(candidate);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto pi = to_cartesian(cells[i]);
    if (std::abs(pc.x - pi.x) > 2.0 + geometry_eps || std::abs(pc.y - pi.y) > 2.0 + geometry_eps) continue;
    if (std::hypot(pc.x - pi.x, pc.y - pi.y) > 2.0 + geometry_eps) continue;
    if (cyc_eq(cells[i], candidate)) return false;
    if (cells_conflict(Cell{cells[i], i}, c)) return false;
  }
  return true;
}

// Images of p under the dihedral group about 0, without repeats.
inline std::vector<CycInt> dihedral_orbit(const CycInt& p) {
  const int k = p.order();
  std::vector<CycInt> orbit;
  std::unordered_set<std::vector<std::int64_t>, ResidueHash> seen;
  for (const auto& base : {p, cyc_reflect(p, 0)}) {
    for (int j = 0; j < k; ++j) {
      auto q = cyc_rotate(base, j);
      if (seen.insert(phi_residue(q)).second) orbit.push_back(std::move(q));
    }
  }
  return orbit;
}

inline void append_orbit(std::vector<CycInt>& cells, const CycInt& p) {
  std::unordered_set<std::vector<std::int64_t>, ResidueHash> seen;
  for (const auto& c : cells) seen.insert(phi_residue(c));
  for (auto& q : dihedral_orbit(p))
    if (seen.insert(phi_residue(q)).second) cells.push_back(std::move(q));
}

// q with (zeta - 1) q == x, for x with coefficient sum 0.
inline CycInt divide_by_zeta_minus_one(const CycInt& x) {
  const auto c = x.coeffs();
  auto [q, r] = poly_divmod_monic(IntPolynomial({c.begin(), c.end()}), IntPolynomial({-1, 1}));
  if (!r.is_zero()) throw std::logic_error("divide_by_zeta_minus_one: coefficient sum is not zero");
  std::vector<std::int64_t> out(static_cast<std::size_t>(x.order()), 0);
  std::copy(q.coeffs.begin(), q.coeffs.end(), out.begin());
  return CycInt(x.order(), std::move(out));
}

// A symmetric necklace through all k corners. From the corner R on the
// zeta^0 axis a random path of contact steps (offset sum S) heads towards
// the bisector at angle pi/k and is closed by its own mirror image, either
// through one more contact step e or by ending on the bisector. Closing
// forces (zeta - 1) R = e + S - zeta conj(S), which is always divisible.
template <class Rng>
std::optional<std::vector<CycInt>> random_necklace(int k, std::size_t max_cells, Rng& rng,
                                                   const std::vector<CycInt>& steps) {
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t half = pick(4);
  const bool on_bisector = half > 0 && rng() % 2 == 0;
  std::vector<CycInt> path{CycInt(k)};
  for (std::size_t i = 0; i < half; ++i) path.push_back(path.back() + steps[pick(steps.size())]);
  const CycInt& s = path.back();
  CycInt closing = s - cyc_reflect(s, 1);
  if (!on_bisector) closing = closing + steps[pick(steps.size())];
  const CycInt radius = divide_by_zeta_minus_one(closing);
  if (!cyc_is_real(radius) || to_cartesian(radius).x < 1.0) return std::nullopt;
  std::vector<CycInt> cells;
  for (const auto& offset : path) {
    append_orbit(cells, radius + offset);
    if (cells.size() > max_cells) return std::nullopt;
  }
  return cells;
}

// Checks for adding a dihedral orbit to a valid symmetric configuration
// centred at 0 whose corner cell sits at distance `corner` on each axis.
inline bool orbit_admissible(std::vector<CycInt>& grown, const std::vector<CycInt>& orbit, double corner, bool strict) {
  const int k = orbit.front().order();
  const double hull_radius = corner + 1.0;
  std::vector<Point2> hull(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    hull[static_cast<std::size_t>(j)] = {hull_radius * std::cos(2.0 * std::numbers::pi * j / k),
                                         hull_radius * std::sin(2.0 * std::numbers::pi * j / k)};
  for (const auto& p : orbit) {
    if (cyc_is_zero(p) && !(k == 3 || k == 4 || k == 6)) return false;
    if (!fits(grown, p)) return false;
    const Cell cell{p, grown.size()};
    const auto pc = to_cartesian(p);
    if (k > 3 && std::abs(std::hypot(pc.x, pc.y) - 1.0) < 1e-3)
      for (int t = 0; t < k; ++t)
        if (cyc_is_zero(p + CycInt::root(k, t))) return false;
    if (k % 2 == 1) {
      for (std::size_t i = 0; i < grown.size(); ++i) {
        const auto shared = shared_vertices(Cell{grown[i], i}, cell);
        if (shared.empty()) continue;
        const int diff = mod(shared.front().second - shared.front().first, k);
        if (diff != (k + 1) / 2 && diff != (k - 1) / 2) return false;
      }
    }
    if (strict)
      for (const auto& v : polygon(cell))
        if (!in_closed_polygon(hull, v, geometry_eps)) return false;
    grown.push_back(p);
  }
  return true;
}

}  // namespace detail

inline constexpr int random_max_cells = 100;

/// Seeded random configuration with about `target_cells` cells.
///
/// Plain mode grows a partial configuration from one cell at 0 by attaching
/// new cells across uniformly drawn legal contact steps; the result has
/// exactly target_cells cells or the call throws.
///
/// Symmetrized mode returns a full configuration: a random symmetric
/// necklace through the k corners (the example ring when none is found),
/// extended by dihedral orbits of attached cells while it stays valid and
/// inside the hull of its corners. It has at most max(target_cells, ring
/// size) cells and grows towards target_cells within the retry budget.
inline FractalSpec random_valid_spec(int k, int target_cells, std::uint64_t seed, bool symmetrize = false) {
  if (k < 3 || k > max_order) throw std::invalid_argument("k must be in [3, " + std::to_string(max_order) + "]");
  if (target_cells < 1 || target_cells > random_max_cells)
    throw std::invalid_argument("target cell count must be in [1, " + std::to_string(random_max_cells) + "]");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto steps = detail::legal_steps(k);
  const int budget = 200 * target_cells;

  if (!symmetrize) {
    std::vector<CycInt> cells{CycInt(k)};
    for (int attempt = 0; attempt < budget && cells.size() < static_cast<std::size_t>(target_cells); ++attempt) {
      CycInt candidate = cells[pick(cells.size())] + steps[pick(steps.size())];
      if (detail::fits(cells, candidate)) cells.push_back(std::move(candidate));
    }
    if (cells.size() < static_cast<std::size_t>(target_cells))
      throw std::runtime_error("random_valid_spec: could not place " + std::to_string(target_cells) + " cells");
    return FractalSpec(k, cells, true);
  }

  const auto limit = static_cast<std::size_t>(target_cells);
  std::vector<CycInt> cells = generate_glp_example(k).barycenters();
  bool strict = validate(FractalSpec(k, cells)).strict_valid();
  for (int attempt = 0; attempt < 400; ++attempt) {
    auto necklace = detail::random_necklace(k, std::max(limit, cells.size()), rng, steps);
    if (!necklace) continue;
    try {
      if (!validate(FractalSpec(k, *necklace)).strict_valid()) continue;
    } catch (const spec_error&) {
      continue;
    }
    cells = std::move(*necklace);
    strict = true;
    break;
  }

  const auto corner = detail::corner_on_axis(cells);
  if (!corner) throw std::logic_error("random_valid_spec: base configuration has no corner");
  const double corner_x = to_cartesian(cells[*corner]).x;
  const bool try_centre = (k == 3 || k == 4 || k == 6) && rng() % 2 == 0;
  if (try_centre) {
    const CycInt centre(k);
    std::vector<CycInt> grown = cells;
    const bool touches = std::any_of(cells.begin(), cells.end(), [&](const CycInt& c) {
      return shared_vertices(Cell{c, 0}, Cell{centre, 1}).size() == 1;
    });
    if (touches && detail::orbit_admissible(grown, {centre}, corner_x, strict) && validate(FractalSpec(k, grown)).valid())
      cells = std::move(grown);
  }
  for (int attempt = 0; attempt < 1000 && cells.size() < limit; ++attempt) {
    const CycInt seed_point = cells[pick(cells.size())] + steps[pick(steps.size())];
    if (cyc_is_zero(seed_point) || !detail::fits(cells, seed_point)) continue;
    const auto orbit = detail::dihedral_orbit(seed_point);
    if (cells.size() + orbit.size() > limit) continue;
    auto grown = cells;
    if (!detail::orbit_admissible(grown, orbit, corner_x, strict)) continue;
    if (!strict) {
      try {
        if (!validate(FractalSpec(k, grown)).valid()) continue;
      } catch (const spec_error&) {
        continue;
      }
    }
    cells = std::move(grown);
  }
  FractalSpec spec(k, cells);
  if (!validate(spec).valid()) throw std::logic_error("random_valid_spec: produced an invalid configuration\n" + format_report(validate(spec)));
  return spec;
}

}  // namespace snf
