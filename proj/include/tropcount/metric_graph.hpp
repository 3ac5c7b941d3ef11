#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tropcount/matrix.hpp"
#include "tropcount/normal_form.hpp"

namespace tropcount {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  FieldScalar length;
};

/// Multigraph with exact positive edge lengths; loops and parallel edges
/// are ordinary edges. Edge e is oriented u -> v.
struct MetricGraph {
  std::size_t vertices = 0;
  std::vector<Edge> edges;

  std::int64_t disc() const { return edges.empty() ? 0 : edges.front().length.disc(); }

  std::vector<std::size_t> valences() const {
    std::vector<std::size_t> val(vertices, 0);
    for (const auto &e : edges) {
      ++val[e.u];
      ++val[e.v];
    }
    return val;
  }
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

} // namespace detail

inline bool is_connected(const MetricGraph &g) {
  if (g.vertices == 0) return false;
  detail::UnionFind uf(g.vertices);
  std::size_t parts = g.vertices;
  for (const auto &e : g.edges)
    if (uf.unite(e.u, e.v)) --parts;
  return parts == 1;
}

/// Structural checks: endpoints in range, one discriminant, positive
/// lengths, connected, and (unless relaxed) no 2-valent vertices.
inline void validate_graph(const MetricGraph &g, bool allow_two_valent = false) {
  if (g.vertices == 0) raise(ErrorKind::InvalidArgument, "graph has no vertices");
  const auto D = g.disc();
  for (const auto &e : g.edges) {
    if (e.u >= g.vertices || e.v >= g.vertices) raise(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (e.length.disc() != D) raise(ErrorKind::MixedDiscriminant, "edge lengths use different D");
    if (e.length.sign() <= 0) raise(ErrorKind::InvalidArgument, "edge length " + e.length.str() + " is not positive");
  }
  if (!is_connected(g)) raise(ErrorKind::Disconnected, "graph is not connected");
  if (!allow_two_valent)
    for (auto val : g.valences())
      if (val == 2) raise(ErrorKind::InvalidArgument, "graph has a 2-valent vertex");
}

/// First Betti number |E| - |V| + 1.
inline std::size_t genus(const MetricGraph &g) {
  if (!is_connected(g)) raise(ErrorKind::Disconnected, "genus of a disconnected graph");
  return g.edges.size() + 1 - g.vertices;
}

/// True iff removing any k < m points, interior to k distinct edges, leaves
/// the metric space connected. Each cut edge u-v is subdivided at a new
/// point which is then deleted, leaving stubs attached to u and to v.
inline bool is_m_edge_connected(const MetricGraph &g, std::size_t m) {
  if (!is_connected(g)) raise(ErrorKind::Disconnected, "graph is not connected");
  const std::size_t E = g.edges.size();
  std::vector<bool> cut(E, false);

  auto connected_after_cut = [&]() {
    // vertices, then two stub endpoints per edge
    detail::UnionFind uf(g.vertices + 2 * E);
    std::size_t parts = g.vertices + 2 * E;
    for (std::size_t k = 0; k < E; ++k) {
      const auto &e = g.edges[k];
      const std::size_t a = g.vertices + 2 * k, b = a + 1;
      if (uf.unite(e.u, a)) --parts;
      if (uf.unite(b, e.v)) --parts;
      if (!cut[k] && uf.unite(a, b)) --parts;
    }
    return parts == 1;
  };

  // all subsets of size k < m
  for (std::size_t k = 1; k < m && k <= E; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      std::fill(cut.begin(), cut.end(), false);
      for (auto i : idx) cut[i] = true;
      if (!connected_after_cut()) return false;
      std::size_t pos = k;
      while (pos-- > 0 && idx[pos] == E - k + pos) {
      }
      if (pos == static_cast<std::size_t>(-1)) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

/// Fundamental cycles of the spanning tree built greedily from the lowest
/// edge indices. Cycle for non-tree edge e = (u, v) is e followed by the
/// tree path v -> u, as a signed vector over the oriented edges.
inline std::vector<std::vector<Int>> cycle_basis(const MetricGraph &g) {
  if (!is_connected(g)) raise(ErrorKind::Disconnected, "cycle basis of a disconnected graph");
  const std::size_t E = g.edges.size();
  detail::UnionFind uf(g.vertices);
  std::vector<bool> in_tree(E, false);
  for (std::size_t k = 0; k < E; ++k)
    if (g.edges[k].u != g.edges[k].v && uf.unite(g.edges[k].u, g.edges[k].v)) in_tree[k] = true;

  struct Arc {
    std::size_t to, edge;
    int sign;
  };
  std::vector<std::vector<Arc>> adj(g.vertices);
  for (std::size_t k = 0; k < E; ++k)
    if (in_tree[k]) {
      adj[g.edges[k].u].push_back({g.edges[k].v, k, 1});
      adj[g.edges[k].v].push_back({g.edges[k].u, k, -1});
    }

  auto tree_path = [&](std::size_t from, std::size_t to, std::vector<Int> &acc) {
    std::vector<std::size_t> prev_edge(g.vertices, E), prev_vertex(g.vertices, g.vertices);
    std::vector<int> prev_sign(g.vertices, 0);
    std::vector<std::size_t> stack{from};
    std::vector<bool> seen(g.vertices, false);
    seen[from] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto &a : adj[x])
        if (!seen[a.to]) {
          seen[a.to] = true;
          prev_edge[a.to] = a.edge;
          prev_vertex[a.to] = x;
          prev_sign[a.to] = a.sign;
          stack.push_back(a.to);
        }
    }
    for (auto x = to; x != from; x = prev_vertex[x]) acc[prev_edge[x]] += prev_sign[x];
  };

  std::vector<std::vector<Int>> cycles;
  for (std::size_t k = 0; k < E; ++k) {
    if (in_tree[k]) continue;
    std::vector<Int> c(E, Int(0));
    c[k] = 1;
    if (g.edges[k].u != g.edges[k].v) tree_path(g.edges[k].v, g.edges[k].u, c);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

/// Gram matrix of the edge-length form on H_1(G, Z) in the cycle basis.
inline FieldMatrix jacobian_gram(const MetricGraph &g) {
  auto cycles = cycle_basis(g);
  if (cycles.empty()) raise(ErrorKind::GenusZero, "graph has genus 0");
  const std::size_t n = cycles.size();
  const auto D = g.disc();
  FieldMatrix Q(n, n, FieldScalar(0, D));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FieldScalar acc(0, D);
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Int w = cycles[i][e] * cycles[j][e];
        if (w != 0) acc += g.edges[e].length * Rational(w);
      }
      Q(i, j) = acc;
      Q(j, i) = acc;
    }
  return Q;
}

/// Contracts a non-loop edge, merging its endpoints (vertex v folds into u).
inline MetricGraph contract_edge(const MetricGraph &g, std::size_t edge) {
  const auto &c = g.edges.at(edge);
  if (c.u == c.v) raise(ErrorKind::InvalidArgument, "cannot contract a loop");
  const std::size_t keep = std::min(c.u, c.v), drop = std::max(c.u, c.v);
  auto relabel = [&](std::size_t x) {
    if (x == drop) return keep;
    return x > drop ? x - 1 : x;
  };
  MetricGraph out{g.vertices - 1, {}};
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (k != edge) out.edges.push_back({relabel(g.edges[k].u), relabel(g.edges[k].v), g.edges[k].length});
  return out;
}

// ---------------------------------------------------------------------------
// Balanced maps to R^g

struct EdgeMap {
  Int weight;             ///< w >= 0
  std::vector<Int> slope; ///< primitive direction along u -> v
};

struct BalancedMap {
  MetricGraph graph;
  std::size_t target_rank = 0;
  std::vector<EdgeMap> edge_data;
};

/// At each vertex the weighted outgoing slopes sum to zero.
inline bool validate_balanced_map(const BalancedMap &m) {
  if (m.edge_data.size() != m.graph.edges.size())
    raise(ErrorKind::DimensionMismatch, "one slope per edge required");
  for (const auto &d : m.edge_data) {
    if (d.slope.size() != m.target_rank) raise(ErrorKind::DimensionMismatch, "slope has wrong length");
    if (d.weight < 0) raise(ErrorKind::InvalidArgument, "negative weight");
    Int gg = 0;
    for (const auto &x : d.slope) gg = gcd_int(gg, x);
    if (d.weight != 0 && gg != 1) raise(ErrorKind::NonPrimitiveSlope, "slope is not primitive");
  }
  std::vector<std::vector<Int>> sums(m.graph.vertices, std::vector<Int>(m.target_rank, Int(0)));
  for (std::size_t k = 0; k < m.graph.edges.size(); ++k) {
    const auto &e = m.graph.edges[k];
    const auto &d = m.edge_data[k];
    for (std::size_t i = 0; i < m.target_rank; ++i) {
      sums[e.u][i] += d.weight * d.slope[i];
      sums[e.v][i] -= d.weight * d.slope[i];
    }
  }
  for (const auto &s : sums)
    for (const auto &x : s)
      if (x != 0) return false;
  return true;
}

// common shapes

inline MetricGraph theta_graph(const FieldScalar &l1, const FieldScalar &l2, const FieldScalar &l3) {
  return {2, {{0, 1, l1}, {0, 1, l2}, {0, 1, l3}}};
}

/// K4 with edges ordered (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
inline MetricGraph k4_graph(const std::vector<FieldScalar> &lengths) {
  if (lengths.size() != 6) raise(ErrorKind::DimensionMismatch, "K4 needs six lengths");
  MetricGraph g{4, {}};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) g.edges.push_back({i, j, lengths[k++]});
  return g;
}

} // namespace tropcount
