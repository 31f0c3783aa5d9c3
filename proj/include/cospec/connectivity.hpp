#pragma once

// Vertex and edge connectivity with certificates.
//
// Local connectivities come from unit-capacity max-flow: vertex-disjoint
// paths on the split digraph (v_in -> v_out carries one unit), edge-disjoint
// paths on the graph with every edge usable once in either direction. The
// global values minimize local values over a fixed enumeration, and the
// witness is read off the residual cut of the first minimizing flow.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/maxflow.hpp"

namespace cospec {

enum class PathMode { vertex_disjoint, edge_disjoint };

struct PathSystem {
  Vertex s = 0;
  Vertex t = 0;
  PathMode mode = PathMode::vertex_disjoint;
  std::vector<std::vector<Vertex>> paths;  // each runs s ... t

  int size() const noexcept { return static_cast<int>(paths.size()); }
};

/// value is kappa or kappa'; witness is a disconnecting set of exactly
/// `value` elements, absent only where no disconnecting set exists
/// (complete graphs in the vertex case, single vertices in the edge case).
template <class Element>
struct ConnectivityResult {
  int value = 0;
  std::optional<std::vector<Element>> witness;
};

using VertexConnectivity = ConnectivityResult<Vertex>;
using EdgeConnectivity = ConnectivityResult<Edge>;

namespace detail {

inline int in_node(Vertex v) { return 2 * v; }
inline int out_node(Vertex v) { return 2 * v + 1; }

/// Split digraph for s-t vertex-disjoint paths. Source is out(s), sink is
/// in(t). Edge arcs are uncapacitated (n + 1) except a direct s-t edge,
/// which counts as a single path.
inline FlowNetwork split_network(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  const int big = n + 1;
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v)
    if (v != s && v != t) net.add_arc(in_node(v), out_node(v), 1);
  for (const auto& e : g.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (b == s || a == t) continue;
      net.add_arc(out_node(a), in_node(b), (a == s && b == t) ? 1 : big);
    }
  }
  return net;
}

inline FlowNetwork edge_network(const Graph& g) {
  FlowNetwork net(g.order());
  for (const auto& e : g.edges()) net.add_arc(e.u, e.v, 1, 1);
  return net;
}

inline void check_endpoints(const Graph& g, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("path endpoints must differ");
}

inline std::vector<Vertex> vertex_cut_from(const FlowNetwork& net, const Graph& g, Vertex s,
                                           Vertex t) {
  auto seen = net.residual_reachable(out_node(s));
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != s && v != t && seen[in_node(v)] && !seen[out_node(v)]) cut.push_back(v);
  return cut;
}

inline std::vector<Edge> edge_cut_from(const FlowNetwork& net, const Graph& g, Vertex s) {
  auto seen = net.residual_reachable(s);
  std::vector<Edge> cut;
  for (const auto& e : g.edges())
    if (seen[e.u] != seen[e.v]) cut.push_back(e);
  return cut;
}

}  // namespace detail

/// Maximum system of internally vertex-disjoint s-t paths. If s and t are
/// adjacent the edge st is one of the paths.
inline PathSystem max_vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  using detail::in_node;
  using detail::out_node;
  detail::check_endpoints(g, s, t);
  auto net = detail::split_network(g, s, t);
  const int value = net.max_flow(out_node(s), in_node(t));

  PathSystem ps{s, t, PathMode::vertex_disjoint, {}};
  for (int k = 0; k < value; ++k) {
    std::vector<Vertex> path{s};
    int node = out_node(s);
    while (node != in_node(t)) {
      auto& arcs = net.out(node);
      auto it = std::find_if(arcs.begin(), arcs.end(),
                             [](const auto& a) { return a.cap > 0 && a.flow > 0; });
      if (it == arcs.end()) throw std::logic_error("flow decomposition failed");
      it->flow -= 1;
      net.out(it->to)[it->rev].flow += 1;
      node = it->to;
      if (node % 2 == 0) path.push_back(node / 2);
    }
    ps.paths.push_back(std::move(path));
  }
  return ps;
}

/// Maximum system of pairwise edge-disjoint s-t paths.
inline PathSystem max_edge_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  detail::check_endpoints(g, s, t);
  auto net = detail::edge_network(g);
  const int value = net.max_flow(s, t);

  PathSystem ps{s, t, PathMode::edge_disjoint, {}};
  std::vector<int> position(g.order(), -1);
  for (int k = 0; k < value; ++k) {
    std::vector<Vertex> path{s};
    position[s] = 0;
    Vertex v = s;
    while (v != t) {
      auto& arcs = net.out(v);
      auto it = std::find_if(arcs.begin(), arcs.end(), [](const auto& a) { return a.flow > 0; });
      if (it == arcs.end()) throw std::logic_error("flow decomposition failed");
      it->flow -= 1;
      net.out(it->to)[it->rev].flow += 1;
      v = it->to;
      if (position[v] != -1) {
        // Closed a cycle: its flow is already cancelled, drop it from the path.
        for (std::size_t i = position[v] + 1; i < path.size(); ++i) position[path[i]] = -1;
        path.resize(position[v] + 1);
      } else {
        position[v] = static_cast<int>(path.size());
        path.push_back(v);
      }
    }
    for (Vertex w : path) position[w] = -1;
    ps.paths.push_back(std::move(path));
  }
  return ps;
}

/// Checks endpoints, adjacency along each path, simplicity, and pairwise
/// disjointness (internal vertices or edges, per the system's mode).
inline bool verify_path_system(const Graph& g, const PathSystem& ps) {
  std::vector<int> used_vertex(g.order(), 0);
  std::vector<Edge> used_edges;
  for (const auto& p : ps.paths) {
    if (p.size() < 2 || p.front() != ps.s || p.back() != ps.t) return false;
    std::vector<Vertex> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.order() || p[i + 1] < 0 || p[i + 1] >= g.order()) return false;
      if (!g.adjacent(p[i], p[i + 1])) return false;
      used_edges.emplace_back(p[i], p[i + 1]);
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) ++used_vertex[p[i]];
  }
  if (ps.mode == PathMode::vertex_disjoint) {
    if (std::any_of(used_vertex.begin(), used_vertex.end(), [](int c) { return c > 1; }))
      return false;
    // Only one path may be the bare edge st.
    return std::count_if(ps.paths.begin(), ps.paths.end(),
                         [](const auto& p) { return p.size() == 2; }) <= 1;
  }
  std::sort(used_edges.begin(), used_edges.end());
  return std::adjacent_find(used_edges.begin(), used_edges.end()) == used_edges.end();
}

/// kappa(s, t) for nonadjacent s, t with a minimum separating vertex set.
inline VertexConnectivity local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  detail::check_endpoints(g, s, t);
  if (g.adjacent(s, t)) throw std::invalid_argument("local vertex cut needs nonadjacent vertices");
  auto net = detail::split_network(g, s, t);
  int value = net.max_flow(detail::out_node(s), detail::in_node(t));
  return {value, detail::vertex_cut_from(net, g, s, t)};
}

/// Global vertex connectivity. Disconnected graphs give 0 with an empty
/// witness; K_n gives n - 1 with no witness.
///
/// Let v0 be the lowest-index vertex of minimum degree. A minimum separator
/// either misses v0, and then separates v0 from some nonneighbor t, or
/// contains v0, and then separates two nonadjacent neighbors of v0. So the
/// minimum runs over kappa(v0, t) for t not adjacent to v0, then over
/// kappa(u, w) for nonadjacent u < w in N(v0), in that order.
inline VertexConnectivity vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {0, std::nullopt};
  if (!is_connected(g)) return {0, std::vector<Vertex>{}};
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return {n - 1, std::nullopt};

  auto deg = g.degrees();
  const Vertex v0 = static_cast<Vertex>(std::min_element(deg.begin(), deg.end()) - deg.begin());
  std::vector<std::pair<Vertex, Vertex>> work;
  for (Vertex t = 0; t < n; ++t)
    if (t != v0 && !g.adjacent(v0, t)) work.emplace_back(v0, t);
  auto nb = g.neighbors(v0);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) work.emplace_back(nb[i], nb[j]);

  VertexConnectivity best{std::numeric_limits<int>::max(), std::nullopt};
  for (auto [s, t] : work) {
    auto net = detail::split_network(g, s, t);
    int value = net.max_flow(detail::out_node(s), detail::in_node(t), best.value);
    if (value < best.value) {
      best.value = value;
      best.witness = detail::vertex_cut_from(net, g, s, t);
    }
  }
  return best;
}

/// lambda(s, t) with a minimum s-t edge cut (edges sorted).
inline EdgeConnectivity local_edge_connectivity(const Graph& g, Vertex s, Vertex t) {
  detail::check_endpoints(g, s, t);
  auto net = detail::edge_network(g);
  int value = net.max_flow(s, t);
  return {value, detail::edge_cut_from(net, g, s)};
}

/// Global edge connectivity: min over t != 0 of lambda(0, t). Disconnected
/// graphs give 0 with an empty witness; graphs with fewer than 2 vertices
/// give 0 with no witness.
inline EdgeConnectivity edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {0, std::nullopt};
  if (!is_connected(g)) return {0, std::vector<Edge>{}};
  EdgeConnectivity best{std::numeric_limits<int>::max(), std::nullopt};
  for (Vertex t = 1; t < n; ++t) {
    auto net = detail::edge_network(g);
    int value = net.max_flow(0, t, best.value);
    if (value < best.value) {
      best.value = value;
      best.witness = detail::edge_cut_from(net, g, 0);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Witness checks and brute force

/// True iff deleting the vertices leaves at least two components.
inline bool verify_disconnecting_set(const Graph& g, std::span<const Vertex> vertices) {
  return components(delete_vertices(g, vertices).graph).count >= 2;
}

/// True iff deleting the edges leaves at least two components. Every pair
/// must be an edge of g.
inline bool verify_disconnecting_set(const Graph& g, std::span<const Edge> edges) {
  return components(delete_edges(g, edges)).count >= 2;
}

enum class CutMode { vertex, edge };

class EnumerationRefused : public std::runtime_error {
 public:
  EnumerationRefused(std::uint64_t required, std::uint64_t ceiling)
      : std::runtime_error("enumeration needs " + std::to_string(required) +
                           " subsets, ceiling is " + std::to_string(ceiling)),
        required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 50'000'000;

/// Exhaustive oracle: smallest disconnecting set of at most `budget`
/// elements, or nullopt if none exists within the budget.
///
/// Vertex mode enumerates vertex subsets by increasing size. Edge mode
/// enumerates the 2^(n-1) vertex bipartitions {S, V - S} with 0 in S: every
/// minimal disconnecting edge set is the full edge boundary of such an S,
/// so the smallest boundary is the smallest disconnecting edge set.
inline std::optional<int> brute_force_connectivity(
    const Graph& g, CutMode mode, int budget,
    std::uint64_t ceiling = kDefaultEnumerationCeiling) {
  const int n = g.order();
  if (n <= 1 || budget < 0) return std::nullopt;

  if (mode == CutMode::edge) {
    if (n > 63) throw EnumerationRefused(std::numeric_limits<std::uint64_t>::max(), ceiling);
    const std::uint64_t required = std::uint64_t{1} << (n - 1);
    if (required > ceiling) throw EnumerationRefused(required, ceiling);
    auto es = g.edges();
    int best = std::numeric_limits<int>::max();
    // Bit i of `rest` places vertex i + 1 in S; the all-ones mask is S = V.
    for (std::uint64_t rest = 0; rest + 1 < required; ++rest) {
      auto in_s = [&](Vertex v) { return v == 0 || ((rest >> (v - 1)) & 1); };
      int cut = 0;
      for (const auto& e : es) cut += in_s(e.u) != in_s(e.v);
      best = std::min(best, cut);
    }
    if (best > budget) return std::nullopt;
    return best;
  }

  const int max_size = std::min(budget, n - 2);
  std::uint64_t required = 0;
  {
    std::uint64_t binom = 1;
    for (int k = 0; k <= max_size; ++k) {
      required += binom;
      if (required > ceiling) throw EnumerationRefused(required, ceiling);
      binom = binom * (n - k) / (k + 1);
    }
  }
  for (int size = 0; size <= max_size; ++size) {
    std::vector<Vertex> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      if (verify_disconnecting_set(g, subset)) return size;
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace cospec
