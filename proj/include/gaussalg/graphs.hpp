#pragma once

#include "gaussalg/algebra.hpp"
#include "gaussalg/errors.hpp"
#include "gaussalg/gauss.hpp"
#include "gaussalg/int_matrix.hpp"
#include "gaussalg/monomial.hpp"
#include "gaussalg/subset_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gaussalg {

/// A simple graph on vertices 0..d-1 plus a set of looped vertices, kept
/// separately from the edges. No multi-edges.
struct LoopedGraph {
  int d = 0;
  std::vector<std::pair<int, int>> edges; // normalized i < j, sorted, unique
  std::vector<int> loops;                 // sorted, unique

  static LoopedGraph make(int d, std::vector<std::pair<int, int>> edges, std::vector<int> loops = {}) {
    if (d < 1) throw input_error("graph needs at least one vertex");
    LoopedGraph g;
    g.d = d;
    for (auto& [a, b] : edges) {
      if (a == b) throw input_error("edge endpoints must differ (loops are declared separately)");
      if (a < 0 || b < 0 || a >= d || b >= d) throw input_error("edge endpoint out of range");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw input_error("duplicate edge");
    std::sort(loops.begin(), loops.end());
    if (std::adjacent_find(loops.begin(), loops.end()) != loops.end())
      throw input_error("duplicate loop");
    for (int v : loops)
      if (v < 0 || v >= d) throw input_error("loop vertex out of range");
    g.edges = std::move(edges);
    g.loops = std::move(loops);
    return g;
  }

  LoopedGraph with_loops(std::vector<int> new_loops) const { return make(d, edges, std::move(new_loops)); }
};

namespace detail {

inline std::vector<std::vector<int>> adjacency(int d, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(d));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

/// Component id per vertex (isolated vertices get their own component).
inline std::vector<int> component_ids(int d, const std::vector<std::pair<int, int>>& edges) {
  const auto adj = adjacency(d, edges);
  std::vector<int> comp(static_cast<std::size_t>(d), -1);
  int next = 0;
  for (int s = 0; s < d; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return comp;
}

inline int component_count(int d, const std::vector<std::pair<int, int>>& edges) {
  const auto comp = component_ids(d, edges);
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

/// Two-color every component; a component is bipartite iff coloring succeeds.
/// Returns one flag per component id.
inline std::vector<bool> component_bipartite_flags(int d, const std::vector<std::pair<int, int>>& edges) {
  const auto adj = adjacency(d, edges);
  const auto comp = component_ids(d, edges);
  const int ncomp = component_count(d, edges);
  std::vector<bool> bip(static_cast<std::size_t>(ncomp), true);
  std::vector<int> color(static_cast<std::size_t>(d), -1);
  for (int s = 0; s < d; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          bip[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = false;
        }
      }
    }
  }
  return bip;
}

inline bool is_bipartite(int d, const std::vector<std::pair<int, int>>& edges) {
  for (bool b : component_bipartite_flags(d, edges))
    if (!b) return false;
  return true;
}

} // namespace detail

/// Edge ring generators: x_i x_j per edge, x_i^2 per loop (edges first, then
/// loops, each in sorted order). Degree-2 monomial algebra on d variables.
inline MonomialAlgebra edge_ring(const LoopedGraph& g) {
  if (g.edges.empty() && g.loops.empty()) throw input_error("edge ring of an empty edge-and-loop set");
  MonomialSet gens;
  for (const auto& [a, b] : g.edges) gens.push_back(Monomial::from_vars(g.d, {a, b}));
  for (int v : g.loops) gens.push_back(Monomial::from_vars(g.d, {v, v}));
  return MonomialAlgebra(g.d, std::move(gens));
}

/// True iff every connected component (isolated vertices included) contains
/// an odd cycle, i.e. is non-bipartite. On a loop-less graph with as many
/// edges as vertices this is exactly non-vanishing of the incidence
/// determinant.
inline bool odd_cycle_every_component(const LoopedGraph& g) {
  if (!g.loops.empty()) throw input_error("odd cycle check expects a loop-less graph");
  // an isolated vertex is a bipartite component
  const auto flags = detail::component_bipartite_flags(g.d, g.edges);
  for (bool bipartite : flags)
    if (bipartite) return false;
  return true;
}

/// Search for an ordering e_1..e_r of E that picks up exactly one new
/// V-vertex at every step. Plain backtracking; sizes must agree.
inline bool labeling_condition(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edge_set) {
  if (vertices.size() != edge_set.size())
    throw input_error("labeling condition needs |V| = |E|");
  {
    std::set<int> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw input_error("labeling condition: repeated vertex");
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : edge_set) es.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    if (es.size() != edge_set.size()) throw input_error("labeling condition: repeated edge");
  }
  const int r = static_cast<int>(edge_set.size());
  if (r == 0) return true;
  std::set<int> in_v(vertices.begin(), vertices.end());
  std::set<int> covered;
  std::vector<bool> used(static_cast<std::size_t>(r), false);

  auto rec = [&](auto&& self, int step) -> bool {
    if (step == r) return true;
    for (int e = 0; e < r; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      const auto [a, b] = edge_set[static_cast<std::size_t>(e)];
      int fresh = 0;
      if (in_v.count(a) && !covered.count(a)) ++fresh;
      if (in_v.count(b) && !covered.count(b)) ++fresh;
      if (fresh != 1) continue;
      used[static_cast<std::size_t>(e)] = true;
      const bool had_a = covered.count(a) > 0, had_b = covered.count(b) > 0;
      covered.insert(a);
      covered.insert(b);
      if (self(self, step + 1)) return true;
      if (!had_a) covered.erase(a);
      if (!had_b) covered.erase(b);
      used[static_cast<std::size_t>(e)] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Find some E subset of E(G) with |E| = |V| and non-vanishing minor
/// Delta_{V,E}; guaranteed to exist when |V| <= d - (number of components).
inline std::optional<std::vector<std::pair<int, int>>> exists_nonsingular_minor(const LoopedGraph& g,
                                                                                const std::vector<int>& vertices) {
  {
    std::set<int> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw input_error("repeated vertex in V");
    for (int v : vertices)
      if (v < 0 || v >= g.d) throw input_error("vertex out of range");
  }
  const int c = detail::component_count(g.d, g.edges);
  const int r = static_cast<int>(vertices.size());
  if (r > g.d - c)
    throw input_error("no guarantee: |V| exceeds vertex count minus component count");
  if (r == 0) return std::vector<std::pair<int, int>>{};

  // incidence submatrix with rows V, columns all edges
  IntMatrix sub(r, static_cast<int>(g.edges.size()));
  for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
    const auto [a, b] = g.edges[static_cast<std::size_t>(j)];
    for (int i = 0; i < r; ++i) {
      if (vertices[static_cast<std::size_t>(i)] == a || vertices[static_cast<std::size_t>(i)] == b) sub(i, j) = 1;
    }
  }
  std::optional<std::vector<std::pair<int, int>>> found;
  ScanBudget budget;
  budget.limit = UINT64_MAX;
  scan_independent_subsets(sub, r, budget, [&](const std::vector<int>& subset) {
    std::vector<std::pair<int, int>> edges;
    IntMatrix check(r, r);
    for (int j = 0; j < r; ++j) {
      edges.push_back(g.edges[static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])]);
      for (int i = 0; i < r; ++i) check(i, j) = sub(i, subset[static_cast<std::size_t>(j)]);
    }
    GAUSSALG_CHECK(det_exact(check) != 0);
    found = std::move(edges);
    return false; // first hit suffices
  });
  GAUSSALG_CHECK(found.has_value());
  return found;
}

/// A rooted spanning forest certificate: T is a forest on all d vertices with
/// |T| = d - |V| edges and exactly one root of V in every component
/// (components may be isolated vertices).
struct ForestCertificate {
  std::vector<int> roots;
  std::vector<std::pair<int, int>> edges;
};

/// All certificates for the root set V (which must consist of looped
/// vertices). Backtracking over edges with union-find state; a branch dies as
/// soon as a cycle closes or a component acquires two roots.
inline std::vector<ForestCertificate> rooted_spanning_forests(const LoopedGraph& g, std::vector<int> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.empty()) throw input_error("root set must be non-empty");
  for (int v : roots)
    if (!std::binary_search(g.loops.begin(), g.loops.end(), v))
      throw input_error("root set must consist of looped vertices");

  const int d = g.d;
  const int m = static_cast<int>(g.edges.size());
  const int needed = d - static_cast<int>(roots.size());

  std::vector<int> parent(static_cast<std::size_t>(d));
  std::vector<int> size(static_cast<std::size_t>(d), 1);
  std::vector<int> root_count(static_cast<std::size_t>(d), 0);
  for (int v = 0; v < d; ++v) parent[static_cast<std::size_t>(v)] = v;
  for (int v : roots) root_count[static_cast<std::size_t>(v)] = 1;

  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };

  std::vector<ForestCertificate> out;
  std::vector<std::pair<int, int>> taken;

  auto rec = [&](auto&& self, int idx, int count) -> void {
    if (count == needed) {
      ForestCertificate cert;
      cert.roots = roots;
      cert.edges = taken;
      // exactly one root per component, isolated vertices included
      std::map<int, int> per_comp;
      for (int v = 0; v < d; ++v)
        per_comp[find(v)] += std::binary_search(roots.begin(), roots.end(), v) ? 1 : 0;
      for (const auto& [rep, cnt] : per_comp) GAUSSALG_CHECK(cnt == 1);
      out.push_back(std::move(cert));
      return;
    }
    if (idx == m || count + (m - idx) < needed) return;
    const auto [a, b] = g.edges[static_cast<std::size_t>(idx)];
    const int ra = find(a), rb = find(b);
    if (ra != rb && root_count[static_cast<std::size_t>(ra)] + root_count[static_cast<std::size_t>(rb)] <= 1) {
      // union by size, journaled for undo
      int big = ra, small = rb;
      if (size[static_cast<std::size_t>(big)] < size[static_cast<std::size_t>(small)]) std::swap(big, small);
      parent[static_cast<std::size_t>(small)] = big;
      size[static_cast<std::size_t>(big)] += size[static_cast<std::size_t>(small)];
      root_count[static_cast<std::size_t>(big)] += root_count[static_cast<std::size_t>(small)];
      taken.push_back(g.edges[static_cast<std::size_t>(idx)]);
      self(self, idx + 1, count + 1);
      taken.pop_back();
      root_count[static_cast<std::size_t>(big)] -= root_count[static_cast<std::size_t>(small)];
      size[static_cast<std::size_t>(big)] -= size[static_cast<std::size_t>(small)];
      parent[static_cast<std::size_t>(small)] = small;
    }
    self(self, idx + 1, count);
  };
  rec(rec, 0, 0);
  return out;
}

/// The forest monomial g_{V,T} = x_V * e_T / x_{V^c}.
inline Monomial forest_monomial(const LoopedGraph& g, const ForestCertificate& cert) {
  std::vector<int> e(static_cast<std::size_t>(g.d), -1);
  for (int v : cert.roots) e[static_cast<std::size_t>(v)] = 1;
  for (const auto& [a, b] : cert.edges) {
    ++e[static_cast<std::size_t>(a)];
    ++e[static_cast<std::size_t>(b)];
  }
  for (int x : e) GAUSSALG_CHECK(x >= 0);
  return Monomial(std::move(e));
}

/// Gauss generating set of the edge ring of a bipartite graph with loops, by
/// the rooted-forest description: all distinct g_{V,T} over non-empty root
/// sets V inside the loop set. Must agree with the brute-force enumeration.
inline MonomialSet gauss_from_forests(const LoopedGraph& g) {
  if (!detail::is_bipartite(g.d, g.edges))
    throw input_error("forest description needs a bipartite underlying graph");
  if (g.loops.empty()) throw input_error("forest description needs at least one loop");
  {
    const auto comp = detail::component_ids(g.d, g.edges);
    const int ncomp = detail::component_count(g.d, g.edges);
    std::vector<bool> met(static_cast<std::size_t>(ncomp), false);
    for (int v : g.loops) met[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = true;
    for (bool ok : met)
      if (!ok)
        throw input_error("algebra dimension deficient: a component of the graph carries no loop");
  }
  MonomialHashSet harvest;
  const int nl = static_cast<int>(g.loops.size());
  for (std::uint32_t mask = 1; mask < (1u << nl); ++mask) {
    std::vector<int> roots;
    for (int k = 0; k < nl; ++k)
      if (mask & (1u << k)) roots.push_back(g.loops[static_cast<std::size_t>(k)]);
    for (const ForestCertificate& cert : rooted_spanning_forests(g, roots))
      harvest.insert(forest_monomial(g, cert));
  }
  MonomialSet out(harvest.begin(), harvest.end());
  return canonicalized(std::move(out));
}

/// For a connected non-bipartite loop-less graph: all d-subsets of edges
/// whose spanned subgraph has an odd cycle in every component. These index
/// the Gauss generators of the edge ring.
inline std::vector<std::vector<int>> nonbipartite_gauss_supports(const LoopedGraph& g) {
  if (!g.loops.empty()) throw input_error("expected a loop-less graph");
  if (detail::component_count(g.d, g.edges) != 1) throw input_error("expected a connected graph");
  if (detail::is_bipartite(g.d, g.edges))
    throw input_error("bipartite input: the incidence determinants all vanish");
  const int m = static_cast<int>(g.edges.size());
  if (m < g.d) throw input_error("need at least d edges");

  std::vector<std::vector<int>> supports;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next, int left) -> void {
    if (left == 0) {
      std::vector<std::pair<int, int>> sub;
      for (int e : pick) sub.push_back(g.edges[static_cast<std::size_t>(e)]);
      const auto flags = detail::component_bipartite_flags(g.d, sub);
      for (bool bipartite : flags)
        if (bipartite) return;
      supports.push_back(pick);
      return;
    }
    for (int e = next; e <= m - left; ++e) {
      pick.push_back(e);
      self(self, e + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, g.d);
  return supports;
}

/// Monomial (product of the subset's edges) / (x_1...x_d).
inline Monomial support_monomial(const LoopedGraph& g, const std::vector<int>& edge_subset) {
  std::vector<int> e(static_cast<std::size_t>(g.d), -1);
  for (int idx : edge_subset) {
    ++e[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(idx)].first)];
    ++e[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(idx)].second)];
  }
  for (int x : e) GAUSSALG_CHECK(x >= 0);
  return Monomial(std::move(e));
}

/// Number of spanning trees, by the matrix-tree theorem (exact reduced
/// Laplacian determinant). Disconnected graphs give 0.
inline Integer spanning_tree_count(const LoopedGraph& g) {
  if (!g.loops.empty()) throw input_error("spanning tree count expects a loop-less graph");
  const int n = g.d;
  if (n == 1) return 1;
  IntMatrix lap(n, n);
  for (const auto& [a, b] : g.edges) {
    lap(a, a) += 1;
    lap(b, b) += 1;
    lap(a, b) -= 1;
    lap(b, a) -= 1;
  }
  IntMatrix red(n - 1, n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) red(i - 1, j - 1) = lap(i, j);
  Integer t = det_exact(red);
  GAUSSALG_CHECK(t >= 0);
  return t;
}

/// lambda_d: the sum over compositions (l_1,...,l_r) of d of the product
/// l_1*...*l_r — the number of Gauss generators of the fully looped path.
inline Integer path_lambda(int d) {
  if (d < 1) throw input_error("path length must be >= 1");
  Integer total = 0;
  auto rec = [&](auto&& self, int remaining, const Integer& product) -> void {
    if (remaining == 0) {
      total += product;
      return;
    }
    for (int part = 1; part <= remaining; ++part) self(self, remaining - part, product * part);
  };
  rec(rec, d, Integer(1));
  return total;
}

/// The path graph 1-2-...-d with the given loop set.
inline LoopedGraph path_graph(int d, std::vector<int> loops = {}) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < d; ++i) edges.emplace_back(i, i + 1);
  return LoopedGraph::make(d, std::move(edges), std::move(loops));
}

/// The cycle graph 1-2-...-d-1 with the given loop set (d >= 3).
inline LoopedGraph cycle_graph(int d, std::vector<int> loops = {}) {
  if (d < 3) throw input_error("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < d; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, d - 1);
  return LoopedGraph::make(d, std::move(edges), std::move(loops));
}

/// Complete bipartite K_{n,m}: parts {0..n-1} and {n..n+m-1}.
inline LoopedGraph complete_bipartite(int n, int m, std::vector<int> loops = {}) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) edges.emplace_back(i, n + j);
  return LoopedGraph::make(n + m, std::move(edges), std::move(loops));
}

/// One scanned (graph, loop) instance of the even-cycle question.
struct ScanRow {
  int d = 0;
  std::vector<std::pair<int, int>> edges;
  int loop = 0;
  int dim = 0;
  int edim = 0;
  int kernel_rank = 0;
  Integer tree_count;
  bool hypersurface_dim_d_minus_1 = false;
  bool even_cycle = false;
};

struct ScanReport {
  int max_d = 0;
  std::vector<ScanRow> rows;
  /// Indices of rows that look like a hypersurface of dimension d-1 without
  /// being an even cycle — candidates against the conjecture. The report
  /// asserts nothing beyond the table.
  std::vector<std::size_t> counterexample_candidates;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Degree-sequence-refined invariant of (graph, loop vertex): iterated
/// neighborhood color refinement. Isomorphic rooted graphs always collide;
/// the occasional accidental collision merely drops a duplicate row, which is
/// acceptable for a survey scan.
inline std::vector<std::uint64_t> refined_graph_key(int d, const std::vector<std::pair<int, int>>& edges,
                                                    int loop) {
  const auto adj = adjacency(d, edges);
  std::vector<std::uint64_t> color(static_cast<std::size_t>(d));
  for (int v = 0; v < d; ++v)
    color[static_cast<std::size_t>(v)] =
        mix64(static_cast<std::uint64_t>(adj[static_cast<std::size_t>(v)].size()) * 2 + (v == loop ? 1 : 0));
  for (int round = 0; round < d; ++round) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(d));
    for (int v = 0; v < d; ++v) {
      std::vector<std::uint64_t> nb;
      for (int w : adj[static_cast<std::size_t>(v)]) nb.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = color[static_cast<std::size_t>(v)];
      for (std::uint64_t x : nb) h = mix64(h ^ x);
      next[static_cast<std::size_t>(v)] = h;
    }
    color = std::move(next);
  }
  std::sort(color.begin(), color.end());
  color.push_back(static_cast<std::uint64_t>(d));
  color.push_back(static_cast<std::uint64_t>(edges.size()));
  return color;
}

} // namespace detail

inline constexpr int kConjectureScanCap = 7;

/// Survey every connected bipartite graph on up to max_d vertices (one
/// representative per refinement class) with every single-loop placement, and
/// tabulate dimension and relation rank of the Gauss set.
inline ScanReport conjecture_scan(int max_d) {
  if (max_d < 2) throw input_error("scan needs max_d >= 2");
  if (max_d > kConjectureScanCap)
    throw budget_error("enumeration cap exceeded: conjecture scan is configured for at most " +
                       std::to_string(kConjectureScanCap) + " vertices");
  ScanReport report;
  report.max_d = max_d;
  std::set<std::vector<std::uint64_t>> seen;
  for (int d = 2; d <= max_d; ++d) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) all_pairs.emplace_back(a, b);
    const int np = static_cast<int>(all_pairs.size());
    for (std::uint64_t mask = 1; mask < (1ULL << np); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int k = 0; k < np; ++k)
        if (mask & (1ULL << k)) edges.push_back(all_pairs[static_cast<std::size_t>(k)]);
      if (detail::component_count(d, edges) != 1) continue;
      if (!detail::is_bipartite(d, edges)) continue;
      for (int loop = 0; loop < d; ++loop) {
        auto key = detail::refined_graph_key(d, edges, loop);
        if (!seen.insert(std::move(key)).second) continue;
        const LoopedGraph g = LoopedGraph::make(d, edges, {loop});
        const MonomialSet gens = gauss_from_forests(g);
        const RelationReport rel = relation_report(gens);
        ScanRow row;
        row.d = d;
        row.edges = edges;
        row.loop = loop;
        row.dim = rel.dim;
        row.edim = rel.edim;
        row.kernel_rank = rel.kernel_rank;
        row.tree_count = spanning_tree_count(LoopedGraph::make(d, edges));
        // with one loop, the embedding dimension never beats the complexity
        GAUSSALG_CHECK(Integer(row.edim) <= row.tree_count);
        row.hypersurface_dim_d_minus_1 = (row.dim == d - 1 && row.kernel_rank == 1);
        bool all_deg2 = true;
        {
          std::vector<int> deg(static_cast<std::size_t>(d), 0);
          for (const auto& [a, b] : edges) {
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
          }
          for (int v = 0; v < d; ++v) all_deg2 = all_deg2 && deg[static_cast<std::size_t>(v)] == 2;
        }
        row.even_cycle = all_deg2 && d % 2 == 0; // connected and bipartite already
        if (row.hypersurface_dim_d_minus_1 && !row.even_cycle)
          report.counterexample_candidates.push_back(report.rows.size());
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

} // namespace gaussalg
