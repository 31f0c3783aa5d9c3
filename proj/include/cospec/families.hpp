#pragma once

// Generators for cospectral pairs of regular graphs with different
// connectivity.
//
//   vertex_pair(k), k >= 2           2k-regular, order 6k, kappa 2k vs k+1
//   edge_pair(k), k even >= 6        (3k-5)-regular, order 10k-8,
//                                    kappa' 3k-5 vs 3k-6, kappa 3 for both
//   edge_pair_variant4()             7-regular, order 36, kappa' 7 vs 6
//   line_graph_family(instance)      line graphs of a regular pair
//
// Every instance carries the switching plan that produced gamma_prime from
// gamma, the positional roles of its special vertices, and the metric values
// the construction is known to have (absent where nothing is claimed).

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cospec/blocks.hpp"
#include "cospec/graph.hpp"
#include "cospec/switching.hpp"

namespace cospec {

enum class FamilyKind { vertex, edge, edge_variant4, line_of };

struct VertexRange {
  int begin = 0;
  int end = 0;  // exclusive

  int size() const noexcept { return end - begin; }
  bool contains(Vertex v) const noexcept { return v >= begin && v < end; }
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = begin; v < end; ++v) out.push_back(v);
    return out;
  }
  bool operator==(const VertexRange&) const = default;
};

struct ExpectedMetrics {
  int order = 0;
  int degree = 0;
  std::optional<int> kappa_gamma;
  std::optional<int> kappa_gamma_prime;
  std::optional<int> kappa_prime_gamma;
  std::optional<int> kappa_prime_gamma_prime;
};

struct FamilyInstance {
  FamilyKind kind = FamilyKind::vertex;
  std::optional<FamilyKind> base_kind;  // set for line_of
  int k = 0;
  Graph gamma;
  Graph gamma_prime;
  std::optional<SwitchingPlan> plan;
  std::map<std::string, Vertex> named;
  std::map<std::string, VertexRange> ranges;
  ExpectedMetrics expected;
};

inline std::string kind_tag(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::vertex: return "VERTEX_K";
    case FamilyKind::edge: return "EDGE_K";
    case FamilyKind::edge_variant4: return "EDGE_VARIANT4";
    case FamilyKind::line_of: return "LINE_OF";
  }
  return "?";
}

inline std::string family_tag(const FamilyInstance& fi) {
  if (fi.kind == FamilyKind::line_of && fi.base_kind)
    return "LINE_OF(" + kind_tag(*fi.base_kind) + ")";
  return kind_tag(fi.kind);
}

// ---------------------------------------------------------------------------
// Vertex-connectivity family

struct BaseCirculant {
  Graph graph;                 // relabeled: V0, V1, V2, V3 consecutively
  std::vector<Vertex> labels;  // labels[i] = residue mod 3k-1 of vertex i
  VertexRange v0, v1, v2, v3;
};

/// The k-regular circulant on Z_{3k-1} with jumps k..2k-1, relabeled so the
/// classes V0 = {0}, V1 = {k..2k-1}, V2 = {1..k-1}, V3 = {2k..3k-2} are
/// consecutive in that order.
inline BaseCirculant base_circulant_G(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const int n = 3 * k - 1;
  std::vector<int> jumps;
  for (int j = k; j <= 2 * k - 1; ++j) jumps.push_back(j);
  const Graph g = circulant(n, jumps);

  std::vector<Vertex> labels{0};
  for (int i = k; i <= 2 * k - 1; ++i) labels.push_back(i);
  for (int i = 1; i <= k - 1; ++i) labels.push_back(i);
  for (int i = 2 * k; i <= 3 * k - 2; ++i) labels.push_back(i);

  BaseCirculant out{relabel(g, labels), labels, {0, 1}, {1, k + 1}, {k + 1, 2 * k}, {2 * k, n}};
  return out;
}

namespace detail {

struct VertexPairBlocks {
  BinaryMatrix n_block;  // X x U
  BinaryMatrix m_block;  // X x V
};

inline VertexPairBlocks vertex_pair_blocks(int k) {
  using M = BinaryMatrix;
  auto n_block = vstack({M::identity(k + 1), M::ones(k - 1, k + 1)});
  auto k_block = vstack({M::zeros(k, k - 1), M::ones(k, k - 1)});
  auto m_block = hstack({n_block.complement(), k_block, k_block.complement()});
  return {std::move(n_block), std::move(m_block)};
}

inline Graph vertex_pair_graph(int k, const BinaryMatrix& n_block, const BinaryMatrix& m_block,
                               const Graph& base) {
  BlockSpec spec{{2 * k, k + 1, 3 * k - 1},
                 {2 * k, k + 1, 3 * k - 1},
                 {{Cell::zero(), Cell::of(n_block), Cell::of(m_block)},
                  {Cell::of(n_block.transpose()), Cell::clique(), Cell::zero()},
                  {Cell::of(m_block.transpose()), Cell::zero(),
                   Cell::of(BinaryMatrix::adjacency(base))}}};
  return from_blocks(spec).graph;
}

}  // namespace detail

/// Vertex order: X (2k), U (k+1), V (3k-1 as V0 V1 V2 V3). Gamma has
/// adjacency [[O, N, M], [N^T, J-I, O], [M^T, O, B]] with N = [I; J],
/// K = [O; J], M = [J-N, K, J-K] and B the relabeled base circulant.
/// Switching on X replaces N by J-N and M by J-M.
inline FamilyInstance vertex_pair(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const auto base = base_circulant_G(k);
  const auto blocks = detail::vertex_pair_blocks(k);

  FamilyInstance fi;
  fi.kind = FamilyKind::vertex;
  fi.k = k;
  fi.gamma = detail::vertex_pair_graph(k, blocks.n_block, blocks.m_block, base.graph);

  SwitchingPlan plan{6 * k, {VertexRange{0, 2 * k}.vertices()}};
  fi.gamma_prime = switch_graph(fi.gamma, plan);
  fi.plan = std::move(plan);

  const int u0 = 2 * k, v0 = 3 * k + 1;
  fi.ranges = {{"X", {0, 2 * k}},
               {"U", {u0, v0}},
               {"V", {v0, 6 * k}},
               {"V0", {v0 + base.v0.begin, v0 + base.v0.end}},
               {"V1", {v0 + base.v1.begin, v0 + base.v1.end}},
               {"V2", {v0 + base.v2.begin, v0 + base.v2.end}},
               {"V3", {v0 + base.v3.begin, v0 + base.v3.end}}};
  fi.expected = {6 * k, 2 * k, 2 * k, k + 1, std::nullopt, std::nullopt};
  return fi;
}

// ---------------------------------------------------------------------------
// Edge-connectivity family

struct EdgePairOptions {
  std::optional<Graph> h1;  // (k-4)-regular on 2k-3 vertices
  std::optional<Graph> h2;  // (k-6)-regular on 2k-5 vertices
};

namespace detail {

/// Circulant with jumps 1..degree/2, or the edgeless graph for degree 0.
inline Graph even_regular_circulant(int n, int degree) {
  if (degree == 0) return empty_graph(n);
  std::vector<int> jumps;
  for (int j = 1; j <= degree / 2; ++j) jumps.push_back(j);
  return circulant(n, jumps);
}

inline void check_regular(const Graph& g, int order, int degree, const char* name) {
  if (g.order() != order || g.regular_degree() != degree)
    throw std::invalid_argument(std::string(name) + " must be " + std::to_string(degree) +
                                "-regular of order " + std::to_string(order));
}

/// Assembles [[A1, L, M1], [L^T, A2, M2], [M1^T, M2^T, B]] for parameter k.
/// `xy` is the 4k x |Y| X-to-Y block; rows come in four groups of k:
/// X_{1,1}+x1, X_{1,2}-x1, X_{2,1}+x2, X_{2,2}-x2.
inline Graph edge_construction(int k, const BinaryMatrix& y_block, const BinaryMatrix& xy) {
  using M = BinaryMatrix;
  auto l_block = vstack({hstack({M::ones(k - 1, k - 1), M::zeros(k - 1, k + 1)}),
                         hstack({M::zeros(k + 1, k - 1), M::cycle(k + 1).complement()})});
  auto a_block = l_block.minus(M::identity(2 * k));
  const int ny = y_block.rows();
  auto m1 = xy.slice(0, 2 * k, 0, ny);
  auto m2 = xy.slice(2 * k, 4 * k, 0, ny);
  BlockSpec spec{{2 * k, 2 * k, ny},
                 {2 * k, 2 * k, ny},
                 {{Cell::of(a_block), Cell::of(l_block), Cell::of(m1)},
                  {Cell::of(l_block.transpose()), Cell::of(a_block), Cell::of(m2)},
                  {Cell::of(m1.transpose()), Cell::of(m2.transpose()), Cell::of(y_block)}}};
  return from_blocks(spec).graph;
}

/// X-to-Y block for gamma: row groups 1..4 see column groups 2, 3, 1, 4
/// (each k-2 wide); the trailing `rest` columns are never adjacent to X.
inline BinaryMatrix edge_xy_block(int k, int rest) {
  using M = BinaryMatrix;
  const int w = k - 2;
  auto row = [&](int hit) {
    return hstack({hit == 0 ? M::ones(k, w) : M::zeros(k, w), hit == 1 ? M::ones(k, w) : M::zeros(k, w),
                   hit == 2 ? M::ones(k, w) : M::zeros(k, w), hit == 3 ? M::ones(k, w) : M::zeros(k, w),
                   M::zeros(k, rest)});
  };
  return vstack({row(1), row(2), row(0), row(3)});
}

inline FamilyInstance finish_edge_instance(FamilyKind kind, int k, Graph gamma,
                                           std::map<std::string, VertexRange> y_ranges) {
  FamilyInstance fi;
  fi.kind = kind;
  fi.k = k;
  fi.gamma = std::move(gamma);
  const int n = fi.gamma.order();
  SwitchingPlan plan{n, {VertexRange{0, 2 * k}.vertices(), VertexRange{2 * k, 4 * k}.vertices()}};
  fi.gamma_prime = switch_graph(fi.gamma, plan);
  fi.plan = std::move(plan);

  fi.ranges = {{"X1", {0, 2 * k}},
               {"X2", {2 * k, 4 * k}},
               {"X11", {0, k - 1}},
               {"X12", {k - 1, 2 * k}},
               {"X21", {2 * k, 3 * k - 1}},
               {"X22", {3 * k - 1, 4 * k}},
               {"Y", {4 * k, n}}};
  fi.ranges.merge(y_ranges);
  fi.named = {{"x1", k - 1}, {"x2", 3 * k - 1}, {"y", fi.ranges.at("H1").end - 1}};
  return fi;
}

}  // namespace detail

/// Vertex order: X_1 = X_{1,1} (k-1) X_{1,2} (k+1), X_2 likewise, then
/// Y = H1 (2k-3), H2 (2k-5), K_{k-1}, K_{k+1}. H1 and H2 default to the
/// circulants with jumps 1..(k-4)/2 and 1..(k-6)/2. x1 and x2 are the first
/// vertices of X_{1,2} and X_{2,2}; y is the last vertex of H1.
inline FamilyInstance edge_pair(int k, const EdgePairOptions& options = {}) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("k must be even and >= 6");
  using M = BinaryMatrix;
  const int n1 = 2 * k - 3, n2 = 2 * k - 5;
  const Graph h1 = options.h1.value_or(detail::even_regular_circulant(n1, k - 4));
  const Graph h2 = options.h2.value_or(detail::even_regular_circulant(n2, k - 6));
  detail::check_regular(h1, n1, k - 4, "H1");
  detail::check_regular(h2, n2, k - 6, "H2");

  BlockSpec y_spec{{n1, n2, k - 1, k + 1},
                   {n1, n2, k - 1, k + 1},
                   {{Cell::of(M::adjacency(h1)), Cell::zero(), Cell::ones(), Cell::zero()},
                    {Cell::zero(), Cell::of(M::adjacency(h2)), Cell::zero(), Cell::ones()},
                    {Cell::ones(), Cell::zero(), Cell::clique(), Cell::zero()},
                    {Cell::zero(), Cell::ones(), Cell::zero(), Cell::clique()}}};
  const auto y_block = assemble(y_spec);
  const int y0 = 4 * k;
  auto gamma = detail::edge_construction(k, y_block, detail::edge_xy_block(k, 2 * k));

  auto fi = detail::finish_edge_instance(
      FamilyKind::edge, k, std::move(gamma),
      {{"H1", {y0, y0 + n1}},
       {"H2", {y0 + n1, y0 + n1 + n2}},
       {"K_small", {y0 + n1 + n2, y0 + n1 + n2 + k - 1}},
       {"K_large", {y0 + n1 + n2 + k - 1, y0 + 6 * k - 8}}});
  fi.expected = {10 * k - 8, 3 * k - 5, 3, 3, 3 * k - 5, 3 * k - 6};
  return fi;
}

/// The k = 4 construction with the component of H that contains H2 replaced
/// by the 12-vertex graph R = [[O, I, I, I], [I, J-I, J-I, J-I], ...] on
/// 3x3 cells. Y order: H1 (5, edgeless), R's first three vertices (in the
/// H2 position, carrying H2's X-adjacencies), K_3, R's remaining nine.
inline FamilyInstance edge_pair_variant4() {
  using M = BinaryMatrix;
  constexpr int k = 4;
  const auto i3 = M::identity(3);
  const auto c3 = i3.complement();
  const auto r_head_tail = hstack({i3, i3, i3});                 // 3 x 9
  const auto r_tail = vstack({hstack({c3, c3, c3}), hstack({c3, c3, c3}), hstack({c3, c3, c3})});

  BlockSpec y_spec{{5, 3, 3, 9},
                   {5, 3, 3, 9},
                   {{Cell::zero(), Cell::zero(), Cell::ones(), Cell::zero()},
                    {Cell::zero(), Cell::zero(), Cell::zero(), Cell::of(r_head_tail)},
                    {Cell::ones(), Cell::zero(), Cell::clique(), Cell::zero()},
                    {Cell::zero(), Cell::of(r_head_tail.transpose()), Cell::zero(), Cell::of(r_tail)}}};
  const auto y_block = assemble(y_spec);
  const int y0 = 4 * k;
  auto gamma = detail::edge_construction(k, y_block, detail::edge_xy_block(k, 20 - 4 * (k - 2)));

  auto fi = detail::finish_edge_instance(FamilyKind::edge_variant4, k, std::move(gamma),
                                         {{"H1", {y0, y0 + 5}},
                                          {"R_head", {y0 + 5, y0 + 8}},
                                          {"K_small", {y0 + 8, y0 + 11}},
                                          {"R_tail", {y0 + 11, y0 + 20}}});
  fi.expected = {36, 7, std::nullopt, std::nullopt, 7, 6};
  return fi;
}

// ---------------------------------------------------------------------------
// Line graphs

/// (L(gamma), L(gamma')) with expected kappa equal to the input's kappa'.
inline FamilyInstance line_graph_family(const FamilyInstance& fi) {
  auto d = fi.gamma.regular_degree();
  auto d2 = fi.gamma_prime.regular_degree();
  if (!d || !d2 || *d != *d2) throw std::invalid_argument("line graph family needs a regular pair");
  FamilyInstance out;
  out.kind = FamilyKind::line_of;
  out.base_kind = fi.kind;
  out.k = fi.k;
  out.gamma = line_graph(fi.gamma);
  out.gamma_prime = line_graph(fi.gamma_prime);
  out.expected.order = out.gamma.order();
  out.expected.degree = 2 * *d - 2;
  out.expected.kappa_gamma = fi.expected.kappa_prime_gamma;
  out.expected.kappa_gamma_prime = fi.expected.kappa_prime_gamma_prime;
  return out;
}

// ---------------------------------------------------------------------------
// Named disconnecting sets

/// Edges with one end in `a` and the other in `b`, sorted.
inline std::vector<Edge> edges_between(const Graph& g, const std::vector<Vertex>& a,
                                       const std::vector<Vertex>& b) {
  std::vector<Edge> out;
  for (Vertex u : a)
    for (Vertex v : b)
      if (u != v && g.adjacent(u, v)) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// In gamma': the edges between {x1, x2} and H2 together with the edges
/// between y and X_{1,1}. For edge_pair(k) this is a disconnecting set of
/// 3k-6 edges.
inline std::vector<Edge> edge_pair_switched_cut(const FamilyInstance& fi) {
  const std::vector<Vertex> xs{fi.named.at("x1"), fi.named.at("x2")};
  auto cut = edges_between(fi.gamma_prime, xs, fi.ranges.at("H2").vertices());
  auto more = edges_between(fi.gamma_prime, {fi.named.at("y")}, fi.ranges.at("X11").vertices());
  cut.insert(cut.end(), more.begin(), more.end());
  std::sort(cut.begin(), cut.end());
  return cut;
}

/// In gamma: the edges between {x1, x2} and H1 together with the edges
/// between y and X_{1,2}; 3k-4 edges, the smallest X-Y cut of gamma.
inline std::vector<Edge> edge_pair_original_cut(const FamilyInstance& fi) {
  const std::vector<Vertex> xs{fi.named.at("x1"), fi.named.at("x2")};
  auto cut = edges_between(fi.gamma, xs, fi.ranges.at("H1").vertices());
  auto more = edges_between(fi.gamma, {fi.named.at("y")}, fi.ranges.at("X12").vertices());
  cut.insert(cut.end(), more.begin(), more.end());
  std::sort(cut.begin(), cut.end());
  return cut;
}

// ---------------------------------------------------------------------------
// JSON export

inline nlohmann::json metrics_json(const ExpectedMetrics& e) {
  auto opt = [](const std::optional<int>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json("UNSTATED");
  };
  return {{"order", e.order},
          {"degree", e.degree},
          {"kappa_gamma", opt(e.kappa_gamma)},
          {"kappa_gamma_prime", opt(e.kappa_gamma_prime)},
          {"kappa_prime_gamma", opt(e.kappa_prime_gamma)},
          {"kappa_prime_gamma_prime", opt(e.kappa_prime_gamma_prime)}};
}

inline nlohmann::json instance_meta_json(const FamilyInstance& fi) {
  nlohmann::json ranges = nlohmann::json::object();
  for (const auto& [name, r] : fi.ranges) ranges[name] = {r.begin, r.end};
  nlohmann::json named = nlohmann::json::object();
  for (const auto& [name, v] : fi.named) named[name] = v;
  return {{"family", family_tag(fi)},
          {"k", fi.k},
          {"named", named},
          {"ranges", ranges},
          {"expected", metrics_json(fi.expected)}};
}

}  // namespace cospec
