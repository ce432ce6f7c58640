#pragma once

// Good labeling property at level 1.
//
// A labeling assigns each cell a rotation offset r in Z_k; vertex j of the
// cell then carries label (j + r) mod k. Two cells touching at
// a + zeta^ja == b + zeta^jb agree on that vertex iff r_b == r_a + (ja - jb),
// so the problem is a system of difference constraints over Z_k on the
// contact graph. Cycles with a nonzero weight sum are the only obstructions.

#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "snf/model.hpp"

namespace snf {

struct ConstraintEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  int ja = 0;
  int jb = 0;
  int weight = 0;  // (ja - jb) mod k, applied when walking a -> b
};

struct ConstraintGraph {
  int k = 0;
  std::size_t nodes = 0;
  std::vector<ConstraintEdge> edges;                 // lexicographic in (a, b)
  std::vector<std::vector<std::size_t>> incident;    // edge ids per node, in edge order
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> component;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> cycle_edges;              // non-tree edges, in edge order
  std::size_t components = 0;

  std::size_t other(std::size_t e, std::size_t from) const { return edges[e].a == from ? edges[e].b : edges[e].a; }

  /// Weight picked up when crossing edge e starting at `from`.
  int step(std::size_t e, std::size_t from) const {
    const auto& ed = edges[e];
    return ed.a == from ? ed.weight : detail::mod(-ed.weight, k);
  }

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
    for (auto e : incident[u])
      if (other(e, u) == v) return e;
    return std::nullopt;
  }

  std::size_t parent(std::size_t v) const { return other(*parent_edge[v], v); }
};

inline ConstraintGraph graph_from_contacts(int k, std::size_t nodes, const std::vector<Contact>& contacts) {
  ConstraintGraph g;
  g.k = k;
  g.nodes = nodes;
  g.incident.resize(nodes);
  for (const auto& c : contacts) {
    g.incident[c.a].push_back(g.edges.size());
    g.incident[c.b].push_back(g.edges.size());
    g.edges.push_back({c.a, c.b, c.ja, c.jb, detail::mod(c.ja - c.jb, k)});
  }
  g.parent_edge.assign(nodes, std::nullopt);
  g.depth.assign(nodes, 0);
  g.component.assign(nodes, nodes);
  std::vector<bool> is_tree(g.edges.size(), false);
  for (std::size_t root = 0; root < nodes; ++root) {
    if (g.component[root] != nodes) continue;
    const std::size_t comp = g.components++;
    g.component[root] = comp;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto e : g.incident[u]) {
        const auto v = g.other(e, u);
        if (g.component[v] != nodes) continue;
        g.component[v] = comp;
        g.parent_edge[v] = e;
        g.depth[v] = g.depth[u] + 1;
        is_tree[e] = true;
        queue.push_back(v);
      }
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) (is_tree[e] ? g.tree_edges : g.cycle_edges).push_back(e);
  return g;
}

/// Contact graph with Z_k weights and a BFS spanning forest rooted at the
/// lowest index of each component. Throws spec_error on conflicting cells.
inline ConstraintGraph build_constraint_graph(const FractalSpec& spec) {
  return graph_from_contacts(spec.k(), spec.size(), adjacency(spec));
}

/// Cycle closed by non-tree edge e = (a, b): a, up to the common ancestor,
/// down to b; the walk returns to a across e.
inline std::vector<std::size_t> fundamental_cycle(const ConstraintGraph& g, std::size_t e) {
  std::size_t u = g.edges[e].a;
  std::size_t v = g.edges[e].b;
  std::vector<std::size_t> up, down;
  while (g.depth[u] > g.depth[v]) {
    up.push_back(u);
    u = g.parent(u);
  }
  while (g.depth[v] > g.depth[u]) {
    down.push_back(v);
    v = g.parent(v);
  }
  while (u != v) {
    up.push_back(u);
    down.push_back(v);
    u = g.parent(u);
    v = g.parent(v);
  }
  up.push_back(u);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

/// Sum of Z_k weights around a closed walk in the graph.
inline int cycle_weight(const ConstraintGraph& g, const std::vector<std::size_t>& cycle) {
  int total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto u = cycle[i];
    const auto v = cycle[(i + 1) % cycle.size()];
    const auto e = g.find_edge(u, v);
    if (!e) throw std::invalid_argument("cycle_weight: cells " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
    total = detail::mod(total + g.step(*e, u), g.k);
  }
  return total;
}

/// Weight sum of a cycle recomputed from the geometry alone.
inline int witness_residue(const FractalSpec& spec, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("witness_residue: a cycle needs at least three cells");
  int total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& a = spec.cell(cycle[i]);
    const auto& b = spec.cell(cycle[(i + 1) % cycle.size()]);
    const auto shared = shared_vertices(a, b);
    if (shared.size() != 1)
      throw std::invalid_argument("witness_residue: cells " + std::to_string(a.index) + " and " + std::to_string(b.index) +
                                  " do not touch at one vertex");
    total = detail::mod(total + shared.front().first - shared.front().second, spec.k());
  }
  return total;
}

struct VertexLabel {
  CycInt point;
  int label = 0;
};

struct Labeling {
  std::vector<int> offsets;         // per cell
  std::vector<VertexLabel> labels;  // one entry per distinct (point, label)
};

/// Induced vertex labels; disagreeing cells leave two entries for one point.
inline Labeling labeling_from_offsets(const FractalSpec& spec, std::vector<int> offsets) {
  if (offsets.size() != spec.size()) throw std::invalid_argument("labeling_from_offsets: one offset per cell");
  const int k = spec.k();
  Labeling out;
  std::unordered_map<std::vector<std::int64_t>, std::vector<int>, detail::ResidueHash> seen;
  for (const auto& cell : spec.cells()) {
    const int r = detail::mod(offsets[cell.index], k);
    for (int j = 0; j < k; ++j) {
      CycInt p = cell.barycenter + CycInt::root(k, j);
      const int label = (j + r) % k;
      auto& labels_here = seen[detail::phi_residue(p)];
      if (std::find(labels_here.begin(), labels_here.end(), label) != labels_here.end()) continue;
      labels_here.push_back(label);
      out.labels.push_back({std::move(p), label});
    }
  }
  for (auto& r : offsets) r = detail::mod(r, k);
  out.offsets = std::move(offsets);
  return out;
}

/// Direct check of the labeling against the definition: every vertex is
/// labelled, shared vertices carry one label, and each cell reads the
/// reference order 0..k-1 rotated by a single offset.
inline bool check_labeling(const FractalSpec& spec, const Labeling& labeling) {
  const int k = spec.k();
  std::unordered_map<std::vector<std::int64_t>, std::vector<int>, detail::ResidueHash> at;
  for (const auto& vl : labeling.labels) {
    if (vl.point.order() != k) return false;
    at[detail::phi_residue(vl.point)].push_back(vl.label);
  }
  for (const auto& cell : spec.cells()) {
    std::optional<int> shift;
    for (int j = 0; j < k; ++j) {
      auto it = at.find(detail::phi_residue(cell.barycenter + CycInt::root(k, j)));
      if (it == at.end())
        throw spec_error("vertex " + std::to_string(j) + " of cell " + std::to_string(cell.index) + " has no label");
      const auto& ls = it->second;
      for (auto l : ls)
        if (l != ls.front() || l < 0 || l >= k) return false;
      const int s = detail::mod(ls.front() - j, k);
      if (shift && *shift != s) return false;
      shift = s;
    }
  }
  return true;
}

class Verdict {
 public:
  static Verdict glp(Labeling labeling) { return Verdict(std::move(labeling)); }
  static Verdict no_glp(std::vector<std::size_t> cycle) { return Verdict(std::move(cycle)); }

  bool has_glp() const { return std::holds_alternative<Labeling>(v_); }
  const Labeling& labeling() const { return std::get<Labeling>(v_); }
  const std::vector<std::size_t>& cycle() const { return std::get<std::vector<std::size_t>>(v_); }

 private:
  explicit Verdict(Labeling l) : v_(std::move(l)) {}
  explicit Verdict(std::vector<std::size_t> c) : v_(std::move(c)) {}
  std::variant<Labeling, std::vector<std::size_t>> v_;
};

/// `GLP` + `offset <cell> <r>` lines, or `NOGLP` + one `cycle ...` line.
/// `index_map`, when given, renames cells (examined subspec -> source spec).
inline std::string serialize_verdict(const Verdict& v, const std::vector<std::size_t>* index_map = nullptr) {
  auto name = [index_map](std::size_t i) { return index_map ? (*index_map)[i] : i; };
  std::ostringstream os;
  if (v.has_glp()) {
    os << "GLP\n";
    const auto& offsets = v.labeling().offsets;
    for (std::size_t i = 0; i < offsets.size(); ++i) os << "offset " << name(i) << ' ' << offsets[i] << '\n';
  } else {
    os << "NOGLP\ncycle";
    for (auto c : v.cycle()) os << ' ' << name(c);
    os << '\n';
  }
  return os.str();
}

namespace detail {

struct PotentialResult {
  std::optional<std::vector<int>> offsets;
  std::vector<std::size_t> cycle;
};

// Propagate offsets down the spanning forest, then test every non-tree edge
// in order; the first violated one defines the witness.
inline PotentialResult solve_potential(const ConstraintGraph& g) {
  std::vector<int> r(g.nodes, 0);
  std::vector<std::size_t> order;
  order.reserve(g.nodes);
  std::vector<bool> done(g.nodes, false);
  for (std::size_t root = 0; root < g.nodes; ++root) {
    if (g.parent_edge[root] || done[root]) continue;
    std::deque<std::size_t> queue{root};
    done[root] = true;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto e : g.incident[u]) {
        const auto v = g.other(e, u);
        if (done[v] || g.parent_edge[v] != e) continue;
        r[v] = mod(r[u] + g.step(e, u), g.k);
        done[v] = true;
        queue.push_back(v);
      }
    }
  }
  for (auto e : g.cycle_edges) {
    const auto& ed = g.edges[e];
    if (mod(r[ed.a] + ed.weight - r[ed.b], g.k) != 0) return {std::nullopt, fundamental_cycle(g, e)};
  }
  return {std::move(r), {}};
}

inline void require_connected(const ConstraintGraph& g) {
  if (g.components != 1) throw spec_error("configuration is disconnected (" + std::to_string(g.components) + " components)");
}

}  // namespace detail

/// General decider: difference-constraint propagation over Z_k. Offsets are
/// normalised so that cell 0 has r = 0.
inline Verdict decide_glp(const FractalSpec& spec) {
  const auto g = build_constraint_graph(spec);
  detail::require_connected(g);
  auto result = detail::solve_potential(g);
  if (!result.offsets) return Verdict::no_glp(std::move(result.cycle));
  return Verdict::glp(labeling_from_offsets(spec, std::move(*result.offsets)));
}

struct BipartiteVerdict {
  Verdict verdict;
  std::vector<int> classes;  // 1 or 2 per cell on success, empty otherwise
};

/// Even k: GLP iff the contact graph is bipartite. Ignores weights.
inline BipartiteVerdict decide_glp_even(const FractalSpec& spec) {
  if (spec.k() % 2 != 0) throw std::invalid_argument("decide_glp_even: k must be even");
  const auto contacts = adjacency(spec);
  const std::size_t n = spec.size();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (const auto& c : contacts) {
    nbr[c.a].push_back(c.b);
    nbr[c.b].push_back(c.a);
  }
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> parent(n, n), depth(n, 0);
  colour[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : nbr[u]) {
      if (colour[v]) continue;
      colour[v] = 3 - colour[u];
      parent[v] = u;
      depth[v] = depth[u] + 1;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!colour[i]) throw spec_error("configuration is disconnected");
  for (const auto& c : contacts) {
    if (colour[c.a] != colour[c.b]) continue;
    std::size_t u = c.a, v = c.b;
    std::vector<std::size_t> up, down;
    while (depth[u] > depth[v]) up.push_back(std::exchange(u, parent[u]));
    while (depth[v] > depth[u]) down.push_back(std::exchange(v, parent[v]));
    while (u != v) {
      up.push_back(std::exchange(u, parent[u]));
      down.push_back(std::exchange(v, parent[v]));
    }
    up.push_back(u);
    up.insert(up.end(), down.rbegin(), down.rend());
    return {Verdict::no_glp(std::move(up)), {}};
  }
  std::vector<int> offsets(n);
  for (std::size_t i = 0; i < n; ++i) offsets[i] = colour[i] == 1 ? 0 : spec.k() / 2;
  return {Verdict::glp(labeling_from_offsets(spec, std::move(offsets))), std::move(colour)};
}

/// Rotation class of walking from cell u into cell v across their contact:
/// +1 for j_v - j_u == (k+1)/2, -1 for (k-1)/2 (odd k).
inline int rotation_class(int k, int ju, int jv) {
  const int diff = detail::mod(jv - ju, k);
  if (diff == (k + 1) / 2) return 1;
  if (diff == (k - 1) / 2) return -1;
  throw spec_error("contact is neither rotation class for odd k");
}

/// (c, d): counts of +1 and -1 rotations around a closed walk.
inline std::pair<int, int> rotation_counts(const FractalSpec& spec, const std::vector<std::size_t>& cycle) {
  int c = 0, d = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto shared = shared_vertices(spec.cell(cycle[i]), spec.cell(cycle[(i + 1) % cycle.size()]));
    if (shared.size() != 1) throw std::invalid_argument("rotation_counts: consecutive cells must touch at one vertex");
    (rotation_class(spec.k(), shared.front().first, shared.front().second) > 0 ? c : d) += 1;
  }
  return {c, d};
}

/// Odd k: GLP iff every cycle has k | (c - d).
inline Verdict decide_glp_odd(const FractalSpec& spec) {
  const int k = spec.k();
  if (k % 2 == 0) throw std::invalid_argument("decide_glp_odd: k must be odd");
  const auto g = build_constraint_graph(spec);
  detail::require_connected(g);
  auto sigma = [&](std::size_t e, std::size_t from) {
    const auto& ed = g.edges[e];
    return ed.a == from ? rotation_class(k, ed.ja, ed.jb) : rotation_class(k, ed.jb, ed.ja);
  };
  for (std::size_t e = 0; e < g.edges.size(); ++e) sigma(e, g.edges[e].a);
  // Signed rotation count (c - d) from the root along the tree.
  std::vector<long> q(g.nodes, 0);
  std::vector<bool> done(g.nodes, false);
  std::deque<std::size_t> queue{0};
  done[0] = true;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto e : g.incident[u]) {
      const auto v = g.other(e, u);
      if (done[v] || g.parent_edge[v] != e) continue;
      q[v] = q[u] + sigma(e, u);
      done[v] = true;
      queue.push_back(v);
    }
  }
  for (auto e : g.cycle_edges) {
    const auto& ed = g.edges[e];
    if ((q[ed.a] + sigma(e, ed.a) - q[ed.b]) % k != 0) return Verdict::no_glp(fundamental_cycle(g, e));
  }
  std::vector<int> offsets(g.nodes);
  for (std::size_t i = 0; i < g.nodes; ++i) offsets[i] = detail::mod(-static_cast<std::int64_t>((k + 1) / 2) * q[i], k);
  return Verdict::glp(labeling_from_offsets(spec, std::move(offsets)));
}

/// Fundamental cycles of odd length below k; each one rules out GLP for odd
/// k. An empty result is inconclusive.
inline std::vector<std::vector<std::size_t>> odd_cycle_scan(const FractalSpec& spec) {
  if (spec.k() % 2 == 0) throw std::invalid_argument("odd_cycle_scan: k must be odd");
  const auto g = build_constraint_graph(spec);
  std::vector<std::vector<std::size_t>> out;
  for (auto e : g.cycle_edges) {
    auto cycle = fundamental_cycle(g, e);
    if (cycle.size() % 2 == 1 && cycle.size() < static_cast<std::size_t>(spec.k())) out.push_back(std::move(cycle));
  }
  return out;
}

enum class KClass { prime, power_of_two, conditional };

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline KClass classify_k(int k) {
  if (k < 3) throw std::invalid_argument("classify_k: k must be at least 3");
  if (is_prime(k)) return KClass::prime;
  if (is_power_of_two(k)) return KClass::power_of_two;
  return KClass::conditional;
}

inline std::string to_string(KClass c) {
  switch (c) {
    case KClass::prime: return "AlwaysGLP(prime)";
    case KClass::power_of_two: return "AlwaysGLP(power_of_two)";
    case KClass::conditional: return "Conditional";
  }
  return "";
}

/// Closed-form labeling for k prime or a power of two, with no search.
///
/// Prime k: f(sum x_j zeta^j) = sum j x_j (mod k) is well defined on Z[zeta_k]
/// and sends every contact step zeta^ja - zeta^jb to ja - jb, so r = f(b) is a
/// valid potential outright.
/// k = 2^n: in the basis 1..zeta^(k/2-1) every contact step is +-2 on one
/// coordinate, so half the coordinate sum mod 2 two-colours each component.
inline std::optional<Labeling> potential_labeling(const FractalSpec& spec) {
  const int k = spec.k();
  std::vector<int> offsets(spec.size());
  if (is_prime(k)) {
    auto f = [k](const CycInt& z) {
      std::int64_t s = 0;
      for (int j = 0; j < k; ++j) s += j * z.coeffs()[static_cast<std::size_t>(j)];
      return detail::mod(s, k);
    };
    const int base = f(spec.cell(0).barycenter);
    for (const auto& cell : spec.cells()) offsets[cell.index] = detail::mod(f(cell.barycenter) - base, k);
  } else if (is_power_of_two(k)) {
    const auto g = build_constraint_graph(spec);
    std::vector<std::optional<std::size_t>> base(g.components);
    for (std::size_t i = 0; i < g.nodes; ++i)
      if (!base[g.component[i]]) base[g.component[i]] = i;
    for (const auto& cell : spec.cells()) {
      const auto residue = detail::phi_residue(cell.barycenter - spec.cell(*base[g.component[cell.index]]).barycenter);
      std::int64_t half = 0;
      for (auto y : residue) {
        if (y % 2 != 0) throw std::logic_error("potential_labeling: contact lattice parity broken");
        half += y / 2;
      }
      offsets[cell.index] = detail::mod(half, 2) * (k / 2);
    }
  } else {
    return std::nullopt;
  }
  return labeling_from_offsets(spec, std::move(offsets));
}

}  // namespace snf
