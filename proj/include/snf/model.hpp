#pragma once

// Level-1 configuration of a planar simple nested fractal.
//
// Every 0-complex is modelled as a regular k-gon of unit circumradius whose
// vertex j sits at barycenter + zeta^j. Cells are translates of each other,
// so a configuration is fully described by its list of barycenters.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snf/cyclotomic.hpp"

namespace snf {

/// Malformed or geometrically inconsistent configuration.
class spec_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double geometry_eps = 1e-6;

struct Cell {
  CycInt barycenter;
  std::size_t index = 0;
};

class FractalSpec {
 public:
  FractalSpec(int k, const std::vector<CycInt>& barycenters, bool partial = false) : k_(k), partial_(partial) {
    if (k < 3 || k > max_order)
      throw spec_error("k must be in [3, " + std::to_string(max_order) + "], got " + std::to_string(k));
    if (barycenters.empty()) throw spec_error("a configuration needs at least one cell");
    cells_.reserve(barycenters.size());
    for (const auto& b : barycenters) {
      if (b.order() != k) throw spec_error("cell order " + std::to_string(b.order()) + " differs from k=" + std::to_string(k));
      cells_.push_back(Cell{b, cells_.size()});
    }
  }

  int k() const { return k_; }
  bool partial() const { return partial_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t i) const { return cells_.at(i); }

  std::vector<CycInt> barycenters() const {
    std::vector<CycInt> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(c.barycenter);
    return out;
  }

 private:
  int k_;
  bool partial_;
  std::vector<Cell> cells_;
};

inline std::vector<CycInt> vertices(const Cell& cell) {
  const int k = cell.barycenter.order();
  std::vector<CycInt> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) out.push_back(cell.barycenter + CycInt::root(k, j));
  return out;
}

inline std::vector<Point2> polygon(const Cell& cell) {
  const int k = cell.barycenter.order();
  const Point2 c = to_cartesian(cell.barycenter);
  std::vector<Point2> out(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double t = 2.0 * std::numbers::pi * j / k;
    out[static_cast<std::size_t>(j)] = {c.x + std::cos(t), c.y + std::sin(t)};
  }
  return out;
}

/// Vertex index pairs (j_a, j_b) at which the two cells coincide, in
/// increasing j_a order.
inline std::vector<std::pair<int, int>> shared_vertices(const Cell& a, const Cell& b) {
  require_same_order(a.barycenter, b.barycenter);
  const int k = a.barycenter.order();
  const auto pa = polygon(a);
  const auto pb = polygon(b);
  std::vector<std::pair<int, int>> out;
  const CycInt delta = b.barycenter - a.barycenter;
  for (int ja = 0; ja < k; ++ja) {
    for (int jb = 0; jb < k; ++jb) {
      const auto& u = pa[static_cast<std::size_t>(ja)];
      const auto& v = pb[static_cast<std::size_t>(jb)];
      if (std::abs(u.x - v.x) > geometry_eps || std::abs(u.y - v.y) > geometry_eps) continue;
      // a + zeta^ja == b + zeta^jb  <=>  b - a == zeta^ja - zeta^jb
      if (cyc_eq(delta, CycInt::root(k, ja) - CycInt::root(k, jb))) out.emplace_back(ja, jb);
    }
  }
  return out;
}

namespace detail {

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

// Separating-axis test on two convex polygons; true when the open interiors
// overlap by more than eps on every candidate axis.
inline bool interiors_overlap(const std::vector<Point2>& p, const std::vector<Point2>& q, double eps) {
  auto separated_on_edges = [eps](const std::vector<Point2>& edges_of, const std::vector<Point2>& a,
                                  const std::vector<Point2>& b) {
    const std::size_t n = edges_of.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 e = sub(edges_of[(i + 1) % n], edges_of[i]);
      const Point2 axis{-e.y, e.x};
      double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
      for (const auto& v : a) {
        const double s = dot(axis, v);
        amin = std::min(amin, s);
        amax = std::max(amax, s);
      }
      for (const auto& v : b) {
        const double s = dot(axis, v);
        bmin = std::min(bmin, s);
        bmax = std::max(bmax, s);
      }
      const double len = std::sqrt(dot(axis, axis));
      if ((std::min(amax, bmax) - std::max(amin, bmin)) / len <= eps) return true;
    }
    return false;
  };
  return !separated_on_edges(p, p, q) && !separated_on_edges(q, p, q);
}

// Closed-polygon membership for a counter-clockwise convex polygon.
inline bool in_closed_polygon(const std::vector<Point2>& poly, Point2 p, double eps) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e = sub(poly[(i + 1) % n], poly[i]);
    const double len = std::sqrt(dot(e, e));
    if (cross(e, sub(p, poly[i])) / len < -eps) return false;
  }
  return true;
}

inline bool conflict_given_shared(const Cell& a, const Cell& b, const std::vector<std::pair<int, int>>& shared) {
  if (shared.size() >= 2) return true;
  const auto pa = polygon(a);
  const auto pb = polygon(b);
  if (interiors_overlap(pa, pb, geometry_eps)) return true;
  // Boundaries may only meet at the shared vertex.
  for (std::size_t j = 0; j < pa.size(); ++j) {
    if (!shared.empty() && static_cast<int>(j) == shared.front().first) continue;
    if (in_closed_polygon(pb, pa[j], geometry_eps)) return true;
  }
  for (std::size_t j = 0; j < pb.size(); ++j) {
    if (!shared.empty() && static_cast<int>(j) == shared.front().second) continue;
    if (in_closed_polygon(pa, pb[j], geometry_eps)) return true;
  }
  return false;
}

}  // namespace detail

/// True when the two cells intersect anywhere other than a single common
/// vertex: two or more shared vertices, overlapping interiors, or a vertex of
/// one resting on the boundary of the other.
inline bool cells_conflict(const Cell& a, const Cell& b) {
  const Point2 ca = to_cartesian(a.barycenter);
  const Point2 cb = to_cartesian(b.barycenter);
  if (std::hypot(ca.x - cb.x, ca.y - cb.y) > 2.0 + geometry_eps) return false;
  return detail::conflict_given_shared(a, b, shared_vertices(a, b));
}

/// Single-vertex contact between cells a < b.
struct Contact {
  std::size_t a = 0;
  std::size_t b = 0;
  int ja = 0;
  int jb = 0;
};

namespace detail {

// Candidate pairs (i < j) whose barycenters are within `radius`, in
// lexicographic order. Uniform grid bucketing keeps large expansions cheap.
inline std::vector<std::pair<std::size_t, std::size_t>> near_pairs(const std::vector<Point2>& centers, double radius) {
  std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
  auto key = [radius](Point2 p) {
    return std::pair<long, long>{static_cast<long>(std::floor(p.x / radius)), static_cast<long>(std::floor(p.y / radius))};
  };
  for (std::size_t i = 0; i < centers.size(); ++i) grid[key(centers[i])].push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const auto [gx, gy] = key(centers[i]);
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({gx + dx, gy + dy});
        if (it == grid.end()) continue;
        for (auto j : it->second) {
          if (j <= i) continue;
          if (std::hypot(centers[i].x - centers[j].x, centers[i].y - centers[j].y) <= radius) out.emplace_back(i, j);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PairScan {
  std::vector<Contact> contacts;
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

// One pass over nearby pairs: contacts in lexicographic order plus the first
// conflicting pair. Duplicate barycenters are a malformed spec.
inline PairScan scan_pairs(const FractalSpec& spec) {
  std::vector<Point2> centers;
  centers.reserve(spec.size());
  for (const auto& c : spec.cells()) centers.push_back(to_cartesian(c.barycenter));
  PairScan scan;
  for (auto [i, j] : near_pairs(centers, 2.0 + geometry_eps)) {
    const auto& a = spec.cell(i);
    const auto& b = spec.cell(j);
    if (std::hypot(centers[i].x - centers[j].x, centers[i].y - centers[j].y) < 1e-3 && cyc_eq(a.barycenter, b.barycenter))
      throw spec_error("duplicate barycenter at cells " + std::to_string(i) + " and " + std::to_string(j));
    const auto shared = shared_vertices(a, b);
    if (conflict_given_shared(a, b, shared)) {
      if (!scan.conflict) scan.conflict = {i, j};
      continue;
    }
    if (shared.size() == 1) scan.contacts.push_back({i, j, shared.front().first, shared.front().second});
  }
  return scan;
}

// N * b_i - sum(b): barycenters relative to the global barycenter, scaled by
// N so they stay in Z[zeta].
inline std::vector<CycInt> scaled_offsets(const FractalSpec& spec) {
  CycInt sum(spec.k());
  for (const auto& c : spec.cells()) sum = sum + c.barycenter;
  const auto n = static_cast<std::int64_t>(spec.size());
  std::vector<CycInt> out;
  out.reserve(spec.size());
  for (const auto& c : spec.cells()) out.push_back(cyc_scale(c.barycenter, n) - sum);
  return out;
}

inline std::vector<std::vector<std::int64_t>> sorted_residues(const std::vector<CycInt>& values) {
  std::vector<std::vector<std::int64_t>> keys;
  keys.reserve(values.size());
  for (const auto& v : values) keys.push_back(phi_residue(v));
  std::sort(keys.begin(), keys.end());
  return keys;
}

inline std::size_t count_components(std::size_t n, const std::vector<Contact>& contacts) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& c : contacts) {
    auto ra = find(c.a), rb = find(c.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

}  // namespace detail

/// Contacts of a configuration; throws spec_error on conflicting cells.
inline std::vector<Contact> adjacency(const FractalSpec& spec) {
  auto scan = detail::scan_pairs(spec);
  if (scan.conflict)
    throw spec_error("cells " + std::to_string(scan.conflict->first) + " and " + std::to_string(scan.conflict->second) +
                     " conflict");
  return std::move(scan.contacts);
}

/// Exact mean of the barycenters as (sum, N).
inline std::pair<CycInt, std::int64_t> global_barycenter(const FractalSpec& spec) {
  CycInt sum(spec.k());
  for (const auto& c : spec.cells()) sum = sum + c.barycenter;
  return {sum, static_cast<std::int64_t>(spec.size())};
}

namespace detail {

// Index of the cell farthest out on the ray through zeta^0 from the global
// barycenter, if any.
inline std::optional<std::size_t> corner_on_axis(const std::vector<CycInt>& offsets) {
  std::optional<std::size_t> best;
  double best_x = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const auto p = to_cartesian(offsets[i]);
    if (p.x <= geometry_eps || std::abs(p.y) > 0.5) continue;
    if (!cyc_is_real(offsets[i])) continue;
    if (!best || p.x > best_x) {
      best = i;
      best_x = p.x;
    }
  }
  return best;
}

}  // namespace detail

/// The similarity ratio L = 1 + b*, where b* is the corner barycenter on the
/// zeta^0 axis measured from the global barycenter.
inline CycInt derive_scaling(const FractalSpec& spec) {
  const auto offsets = detail::scaled_offsets(spec);
  const auto corner = detail::corner_on_axis(offsets);
  if (!corner) throw spec_error("no corner cell on the zeta^0 axis");
  const auto shifted = cyc_divide_exact(offsets[*corner], static_cast<std::int64_t>(spec.size()));
  if (!shifted) throw spec_error("global barycenter is not a cyclotomic integer; recentre the configuration");
  CycInt scale = *shifted + CycInt::integer(spec.k(), 1);
  if (!cyc_is_real(scale) || to_cartesian(scale).x <= 1.0) throw spec_error("derived scaling factor is not real and > 1");
  return scale;
}

struct SymmetryFailure {
  enum class Kind { rotation, reflection };
  Kind kind = Kind::rotation;
  int axis = 0;  // reflection axis m (angle m*pi/k)
};

struct ValidationReport {
  bool partial = false;
  std::size_t components = 0;
  std::optional<std::pair<std::size_t, std::size_t>> nesting;
  std::optional<SymmetryFailure> symmetry;
  std::optional<int> missing_corner;
  std::optional<std::pair<std::size_t, std::size_t>> odd_adjacency;
  std::optional<std::size_t> central_cell;
  bool central_cell_allowed = true;
  std::optional<std::pair<std::size_t, int>> barycenter_vertex;
  std::optional<std::size_t> outside_hull;

  bool connected() const { return components == 1; }

  bool valid() const {
    return connected() && !nesting && !symmetry && !missing_corner && !odd_adjacency &&
           (!central_cell || central_cell_allowed) && !barycenter_vertex;
  }

  /// valid() plus containment of every cell in the hull of the essential
  /// fixed points.
  bool strict_valid() const { return valid() && !outside_hull; }
};

inline std::string format_report(const ValidationReport& r) {
  std::ostringstream os;
  os << "connectivity " << (r.connected() ? "ok" : "fail") << " components=" << r.components << '\n';
  if (r.nesting)
    os << "nesting fail cells=" << r.nesting->first << ',' << r.nesting->second << '\n';
  else
    os << "nesting ok\n";
  if (r.partial) {
    os << "symmetry skipped\ncorner_coverage skipped\ncontainment skipped\n";
  } else {
    if (r.symmetry)
      os << "symmetry fail "
         << (r.symmetry->kind == SymmetryFailure::Kind::rotation ? "rotation"
                                                                  : "reflection axis=" + std::to_string(r.symmetry->axis))
         << '\n';
    else
      os << "symmetry ok\n";
    if (r.missing_corner)
      os << "corner_coverage fail corner=" << *r.missing_corner << '\n';
    else
      os << "corner_coverage ok\n";
    if (r.outside_hull)
      os << "containment warn cell=" << *r.outside_hull << '\n';
    else
      os << "containment ok\n";
  }
  if (r.odd_adjacency)
    os << "odd_adjacency_classes fail cells=" << r.odd_adjacency->first << ',' << r.odd_adjacency->second << '\n';
  else
    os << "odd_adjacency_classes ok\n";
  if (r.barycenter_vertex)
    os << "barycenter_vertex fail cell=" << r.barycenter_vertex->first << " vertex=" << r.barycenter_vertex->second
       << '\n';
  if (r.central_cell)
    os << "central_cell " << *r.central_cell << (r.central_cell_allowed ? " allowed" : " violation") << '\n';
  else
    os << "central_cell none\n";
  os << (r.valid() ? "VALID" : "INVALID") << '\n';
  return os.str();
}

/// Checks connectivity, nesting, dihedral symmetry, corner coverage,
/// containment in the scaled hull, odd-k contact classes and the central
/// cell rules. Symmetry-derived checks are skipped for partial specs.
inline ValidationReport validate(const FractalSpec& spec) {
  const int k = spec.k();
  const auto n = static_cast<std::int64_t>(spec.size());
  ValidationReport report;
  report.partial = spec.partial();

  const auto scan = detail::scan_pairs(spec);
  report.nesting = scan.conflict;
  report.components = detail::count_components(spec.size(), scan.contacts);

  if (k % 2 == 1) {
    for (const auto& c : scan.contacts) {
      const int diff = detail::mod(c.jb - c.ja, k);
      if (diff != (k + 1) / 2 && diff != (k - 1) / 2) {
        report.odd_adjacency = {c.a, c.b};
        break;
      }
    }
  }

  const auto offsets = detail::scaled_offsets(spec);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (cyc_is_zero(offsets[i])) {
      report.central_cell = i;
      break;
    }
  }
  if (spec.partial()) return report;

  report.central_cell_allowed = !report.central_cell || k == 3 || k == 4 || k == 6;

  if (k > 3) {
    for (std::size_t i = 0; i < offsets.size() && !report.barycenter_vertex; ++i) {
      const auto p = to_cartesian(offsets[i]);
      if (std::abs(std::hypot(p.x, p.y) - static_cast<double>(n)) > 1e-3 * static_cast<double>(n)) continue;
      for (int t = 0; t < k; ++t) {
        if (cyc_is_zero(offsets[i] + CycInt::root(k, t, n))) {
          report.barycenter_vertex = {i, t};
          break;
        }
      }
    }
  }

  const auto keys = detail::sorted_residues(offsets);
  auto transformed_keys = [&](auto&& f) {
    std::vector<CycInt> moved;
    moved.reserve(offsets.size());
    for (const auto& d : offsets) moved.push_back(f(d));
    return detail::sorted_residues(moved);
  };
  if (transformed_keys([](const CycInt& d) { return cyc_rotate(d, 1); }) != keys) {
    report.symmetry = SymmetryFailure{SymmetryFailure::Kind::rotation, 0};
  } else {
    for (int m = 0; m < k; ++m) {
      if (transformed_keys([m](const CycInt& d) { return cyc_reflect(d, m); }) != keys) {
        report.symmetry = SymmetryFailure{SymmetryFailure::Kind::reflection, m};
        break;
      }
    }
  }

  const auto corner = detail::corner_on_axis(offsets);
  if (!corner) {
    report.missing_corner = 0;
    return report;
  }
  std::unordered_map<std::vector<std::int64_t>, int, detail::ResidueHash> present;
  for (const auto& d : offsets) present.emplace(detail::phi_residue(d), 0);
  for (int j = 0; j < k; ++j) {
    if (!present.contains(detail::phi_residue(cyc_rotate(offsets[*corner], j)))) {
      report.missing_corner = j;
      break;
    }
  }

  // The whole configuration must fit in the hull of the essential fixed
  // points, i.e. the big k-gon with vertices (b* + 1) zeta^j (scaled by N).
  const auto outer = to_cartesian(offsets[*corner]).x + static_cast<double>(n);
  std::vector<Point2> hull(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double t = 2.0 * std::numbers::pi * j / k;
    hull[static_cast<std::size_t>(j)] = {outer * std::cos(t), outer * std::sin(t)};
  }
  for (std::size_t i = 0; i < offsets.size() && !report.outside_hull; ++i) {
    const auto c = to_cartesian(offsets[i]);
    for (int t = 0; t < k; ++t) {
      const double a = 2.0 * std::numbers::pi * t / k;
      const Point2 v{c.x + static_cast<double>(n) * std::cos(a), c.y + static_cast<double>(n) * std::sin(a)};
      if (!detail::in_closed_polygon(hull, v, geometry_eps * static_cast<double>(n))) {
        report.outside_hull = i;
        break;
      }
    }
  }
  return report;
}

}  // namespace snf
