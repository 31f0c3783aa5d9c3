#pragma once

// Dense undirected simple graphs stored as bit rows.
//
// A Graph is immutable once built. Every edit (vertex/edge deletion,
// switching, line graph) produces a new value. Vertices are the indices
// 0..n-1 and every constructor documents the order it produces, so that
// positional roles such as "the first k+1 vertices" are well defined.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

class GraphBuilder;

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n), words_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  int order() const noexcept { return n_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return test(u, v);
  }

  int degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  /// Neighbors of v in ascending order.
  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
      auto word = r[w];
      while (word) {
        out.push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int words_per_row() const noexcept { return words_; }

  /// All edges, lexicographic on (u, v) with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto w : bits_) twice += std::popcount(w);
    return twice / 2;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  int min_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
  }

  int max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }

  /// Common degree if the graph is regular; the empty graph on 0 vertices
  /// counts as 0-regular.
  std::optional<int> regular_degree() const {
    if (n_ == 0) return 0;
    int d0 = degree(0);
    for (Vertex v = 1; v < n_; ++v)
      if (degree(v) != d0) return std::nullopt;
    return d0;
  }

  bool operator==(const Graph& other) const = default;

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for graph of order " +
                                  std::to_string(n_));
  }

 private:
  friend class GraphBuilder;

  static int words_for(int n) { return n <= 0 ? 0 : (n + 63) / 64; }

  bool test(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph. Symmetry and the absence of loops
/// hold by construction.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int order() const noexcept { return g_.order(); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    set(u, v, true);
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    set(u, v, false);
    return *this;
  }

  GraphBuilder& set_edge(Vertex u, Vertex v, bool present) {
    check_pair(u, v);
    set(u, v, present);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  void check_pair(Vertex u, Vertex v) const {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u) +
                                  " is not allowed in a simple graph");
  }

  void set(Vertex u, Vertex v, bool present) {
    auto flip = [&](Vertex a, Vertex b) {
      auto& word = g_.bits_[static_cast<std::size_t>(a) * g_.words_ + b / 64];
      auto mask = std::uint64_t{1} << (b % 64);
      word = present ? (word | mask) : (word & ~mask);
    };
    flip(u, v);
    flip(v, u);
  }

  Graph g_;
};

inline Graph graph_from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Standard graphs

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline Graph complete_bipartite_graph(int a, int b) {
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) gb.add_edge(u, v);
  return std::move(gb).build();
}

/// Vertices of g first, then vertices of h shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) b.add_edge(e.u + g.order(), e.v + g.order());
  return std::move(b).build();
}

/// Circulant graph on Z_n: i ~ i+j and i ~ i-j for every j in jumps.
/// Jumps j and n-j name the same generator.
inline Graph circulant(int n, std::span<const int> jumps) {
  if (n <= 0) throw std::invalid_argument("circulant order must be positive");
  if (jumps.empty()) throw std::invalid_argument("circulant jump set must be nonempty");
  GraphBuilder b(n);
  for (int j : jumps) {
    int r = ((j % n) + n) % n;
    if (r == 0)
      throw std::invalid_argument("circulant jump " + std::to_string(j) +
                                  " is congruent to 0 mod " + std::to_string(n));
    for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + r) % n);
  }
  return std::move(b).build();
}

inline Graph circulant(int n, std::initializer_list<int> jumps) {
  return circulant(n, std::span<const int>(jumps.begin(), jumps.size()));
}

/// Graph with vertex i of the result equal to vertex order[i] of g.
inline Graph relabel(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order())
    throw std::invalid_argument("relabel order has wrong length");
  std::vector<Vertex> pos(g.order(), -1);
  for (int i = 0; i < g.order(); ++i) {
    g.check_vertex(order[i]);
    if (pos[order[i]] != -1) throw std::invalid_argument("relabel order is not a permutation");
    pos[order[i]] = i;
  }
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(pos[e.u], pos[e.v]);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Derived graphs

/// One vertex per edge of g, in lexicographic (min endpoint, max endpoint)
/// order; two vertices are adjacent iff their edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  auto es = g.edges();
  std::vector<std::vector<int>> incident(g.order());
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    incident[es[i].u].push_back(i);
    incident[es[i].v].push_back(i);
  }
  GraphBuilder b(static_cast<int>(es.size()));
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t c = a + 1; c < list.size(); ++c) b.add_edge(list[a], list[c]);
  return std::move(b).build();
}

struct VertexDeletion {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
};

/// Induced subgraph on the complement of `removed`; survivors keep their
/// relative order.
inline VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    g.check_vertex(v);
    gone[v] = true;
  }
  std::vector<Vertex> map(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) map[v] = next++;
  GraphBuilder b(next);
  for (const auto& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) b.add_edge(map[e.u], map[e.v]);
  return {std::move(b).build(), std::move(map)};
}

inline VertexDeletion delete_vertices(const Graph& g, std::initializer_list<Vertex> removed) {
  return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

/// Same vertex set with the listed edges removed. Every pair must be an edge.
inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  GraphBuilder b(g);
  for (const auto& e : removed) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v || !g.adjacent(e.u, e.v))
      throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") is not an edge");
    b.remove_edge(e.u, e.v);
  }
  return std::move(b).build();
}

inline Graph delete_edges(const Graph& g, std::initializer_list<Edge> removed) {
  return delete_edges(g, std::span<const Edge>(removed.begin(), removed.size()));
}

// ---------------------------------------------------------------------------
// Component structure

struct ComponentPartition {
  std::vector<int> labels;  // labels[v] = component id, numbered by smallest member
  int count = 0;
};

inline ComponentPartition components(const Graph& g) {
  ComponentPartition cp;
  cp.labels.assign(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (cp.labels[s] != -1) continue;
    cp.labels[s] = cp.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (cp.labels[w] == -1) {
          cp.labels[w] = cp.count;
          stack.push_back(w);
        }
    }
    ++cp.count;
  }
  return cp;
}

inline bool is_connected(const Graph& g) { return components(g).count <= 1; }

/// Proper 2-coloring by BFS, or nullopt when g has an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_triangle_free(const Graph& g) {
  for (const auto& e : g.edges()) {
    auto a = g.row(e.u);
    auto b = g.row(e.v);
    for (int w = 0; w < g.words_per_row(); ++w)
      if (a[w] & b[w]) return false;
  }
  return true;
}

}  // namespace cospec
