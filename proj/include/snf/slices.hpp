#pragma once

// Angular slices of a symmetric configuration around its global barycenter.
//
// Sector i (1..k) is the half-open angle (2 pi (i-1)/k, 2 pi i/k]: a cell on
// the vertex axis at angle 2 pi j/k belongs to the sector whose
// counter-clockwise edge that axis is, so the axis through zeta^0 lands in
// sector k. Closed slices add the cells on the clockwise edge as well.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "snf/glp.hpp"

namespace snf {

inline constexpr int central_slice = 0;

struct SlicePosition {
  int sector = central_slice;  // 1..k, or central_slice
  std::optional<int> axis;     // j when the barycenter lies on the axis through zeta^j
};

inline std::vector<SlicePosition> slice_positions(const FractalSpec& spec) {
  const int k = spec.k();
  const auto offsets = detail::scaled_offsets(spec);
  std::vector<SlicePosition> out(spec.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const auto& d = offsets[i];
    if (cyc_is_zero(d)) continue;
    const auto p = to_cartesian(d);
    std::optional<int> axis;
    for (int j = 0; j < k && !axis; ++j) {
      const double c = p.x * std::cos(2.0 * std::numbers::pi * j / k) + p.y * std::sin(2.0 * std::numbers::pi * j / k);
      if (c > 0.0 && cyc_eq(cyc_reflect(d, 2 * j), d)) axis = j;
    }
    if (axis) {
      out[i] = {*axis == 0 ? k : *axis, axis};
      continue;
    }
    double theta = std::atan2(p.y, p.x);
    if (theta < 0) theta += 2.0 * std::numbers::pi;
    const int sector = static_cast<int>(std::floor(theta * k / (2.0 * std::numbers::pi))) + 1;
    out[i] = {std::clamp(sector, 1, k), std::nullopt};
  }
  return out;
}

/// Sector of every cell, central_slice for a cell at the global barycenter.
inline std::vector<int> slices(const FractalSpec& spec) {
  std::vector<int> out;
  for (const auto& pos : slice_positions(spec)) out.push_back(pos.sector);
  return out;
}

/// Cell indices of each closed slice; entry s-1 holds slice s.
inline std::vector<std::vector<std::size_t>> closed_slices(const FractalSpec& spec) {
  const int k = spec.k();
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k));
  const auto pos = slice_positions(spec);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i].sector == central_slice) continue;
    out[static_cast<std::size_t>(pos[i].sector - 1)].push_back(i);
    if (pos[i].axis) out[static_cast<std::size_t>(*pos[i].axis)].push_back(i);  // clockwise edge of slice axis+1
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

struct SubSpec {
  FractalSpec spec;
  std::vector<std::size_t> origin;  // origin[i] = index of cell i in the source spec
};

/// Partial spec made of the cells in the chosen slices, in source order.
inline SubSpec slice_subspec(const FractalSpec& spec, const std::vector<int>& ids, bool closed) {
  const int k = spec.k();
  for (int id : ids)
    if (id < 1 || id > k) throw std::invalid_argument("slice id " + std::to_string(id) + " outside 1.." + std::to_string(k));
  std::set<std::size_t> chosen;
  if (closed) {
    const auto cs = closed_slices(spec);
    for (int id : ids) chosen.insert(cs[static_cast<std::size_t>(id - 1)].begin(), cs[static_cast<std::size_t>(id - 1)].end());
  } else {
    const auto s = slices(spec);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::find(ids.begin(), ids.end(), s[i]) != ids.end()) chosen.insert(i);
  }
  if (chosen.empty()) throw std::invalid_argument("slice selection is empty");
  std::vector<CycInt> cells;
  std::vector<std::size_t> origin(chosen.begin(), chosen.end());
  for (auto i : origin) cells.push_back(spec.cell(i).barycenter);
  return {FractalSpec(k, cells, true), std::move(origin)};
}

enum class SliceRoute { central_cell, small_k, open_pair, closed_slice };

inline std::string to_string(SliceRoute r) {
  switch (r) {
    case SliceRoute::central_cell: return "central-cell";
    case SliceRoute::small_k: return "small-k";
    case SliceRoute::open_pair: return "open-pair";
    case SliceRoute::closed_slice: return "closed-slice";
  }
  return "";
}

struct SliceVerdict {
  SliceRoute route;
  Verdict verdict;  // indices refer to `examined`
  SubSpec examined;
};

/// Decides GLP from a small part of a valid symmetric configuration:
///   k = 6 with a central cell: no GLP, witnessed by the centre and two
///     touching neighbours;
///   k in {3, 4, 5}: always GLP, labelled in closed form;
///   odd k >= 7 and k divisible by 4: the union of slices 1 and 2;
///   other even k >= 6: the closed slice 1.
/// A slice union is treated as one partial configuration, so a vertex shared
/// by the two slices carries a single label.
inline SliceVerdict glp_via_slices(const FractalSpec& spec) {
  if (spec.partial()) throw spec_error("slice reduction needs a full configuration, not a partial one");
  const int k = spec.k();
  auto whole = [&spec] {
    std::vector<std::size_t> origin(spec.size());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
    return SubSpec{spec, std::move(origin)};
  };
  const auto pos = slice_positions(spec);
  std::optional<std::size_t> centre;
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i].sector == central_slice) centre = i;

  if (k == 6 && centre) {
    const auto g = build_constraint_graph(spec);
    for (auto e : g.incident[*centre]) {
      const auto u = g.other(e, *centre);
      for (auto f : g.incident[u]) {
        const auto v = g.other(f, u);
        if (v == *centre || !g.find_edge(v, *centre)) continue;
        return {SliceRoute::central_cell, Verdict::no_glp({*centre, u, v}), whole()};
      }
    }
    return {SliceRoute::central_cell, decide_glp(spec), whole()};
  }
  if (k <= 5) return {SliceRoute::small_k, Verdict::glp(*potential_labeling(spec)), whole()};

  // When 4 | k a contact can run perpendicular to a vertex axis, so a cell in
  // W_1 may touch its own mirror image in W_2 at a single vertex on the axis.
  // The closed slice then misses odd cycles through that contact.
  const bool pair = k % 2 == 1 || k % 4 == 0;
  auto sub = pair ? slice_subspec(spec, {1, 2}, false) : slice_subspec(spec, {1}, true);
  const auto g = build_constraint_graph(sub.spec);
  auto result = detail::solve_potential(g);
  const auto route = pair ? SliceRoute::open_pair : SliceRoute::closed_slice;
  if (!result.offsets) return {route, Verdict::no_glp(std::move(result.cycle)), std::move(sub)};
  auto labeling = labeling_from_offsets(sub.spec, std::move(*result.offsets));
  return {route, Verdict::glp(std::move(labeling)), std::move(sub)};
}

}  // namespace snf
