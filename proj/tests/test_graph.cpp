#include <gtest/gtest.h>

#include <random>

#include "cospec/blocks.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "cospec/spectra.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

void expect_simple(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
}

}  // namespace

TEST(Circulant, FiveCycle) {
  auto g = circulant(5, {1});
  EXPECT_EQ(g, cycle_graph(5));
  EXPECT_EQ(g.regular_degree(), 2);
}

TEST(Circulant, BaseGraphForKThree) {
  auto g = circulant(8, {3, 4, 5});
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_TRUE(is_triangle_free(g));
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{3, 4, 5}));
  expect_simple(g);
}

TEST(Circulant, SymmetricClosureAndErrors) {
  // 1 and 6 are the same generator mod 7.
  EXPECT_EQ(circulant(7, {1, 6}), circulant(7, {1}));
  EXPECT_EQ(circulant(8, {4}).regular_degree(), 1);
  EXPECT_THROW(circulant(0, {1}), std::invalid_argument);
  EXPECT_THROW(circulant(6, {6}), std::invalid_argument);
  EXPECT_THROW(circulant(6, std::span<const int>{}), std::invalid_argument);
}

TEST(Circulant, RegularOfClosureSize) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 40)(rng);
    std::vector<int> jumps;
    std::set<int> closure;
    for (int j = 1; j < n; ++j)
      if (std::bernoulli_distribution(0.3)(rng)) {
        jumps.push_back(j);
        closure.insert(j);
        closure.insert(n - j);
      }
    if (jumps.empty()) continue;
    auto g = circulant(n, jumps);
    EXPECT_EQ(g.regular_degree(), static_cast<int>(closure.size()));
  }
}

TEST(FromBlocks, CompleteGraph) {
  BlockSpec spec{{4}, {4}, {{Cell::clique()}}};
  auto bg = from_blocks(spec);
  EXPECT_EQ(bg.graph, complete_graph(4));
  EXPECT_EQ(bg.class_offsets, (std::vector<int>{0, 4}));
}

TEST(FromBlocks, CycleCell) {
  BlockSpec spec{{5}, {5}, {{Cell::cycle()}}};
  EXPECT_EQ(from_blocks(spec).graph, cycle_graph(5));
}

TEST(FromBlocks, BipartiteLayout) {
  BlockSpec spec{{2, 3}, {2, 3}, {{Cell::zero(), Cell::ones()}, {Cell::ones(), Cell::zero()}}};
  auto bg = from_blocks(spec);
  EXPECT_EQ(bg.graph, complete_bipartite_graph(2, 3));
  EXPECT_EQ(bg.class_offsets, (std::vector<int>{0, 2, 5}));
}

TEST(FromBlocks, RejectsAsymmetryWithCoordinates) {
  BlockSpec spec{{2, 2}, {2, 2}, {{Cell::zero(), Cell::identity()}, {Cell::zero(), Cell::zero()}}};
  try {
    from_blocks(spec);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos) << e.what();
  }
}

TEST(FromBlocks, RejectsDiagonalAndBadCells) {
  EXPECT_THROW(from_blocks(BlockSpec{{3}, {3}, {{Cell::ones()}}}), std::invalid_argument);
  EXPECT_THROW(from_blocks(BlockSpec{{2, 3}, {2, 3},
                                     {{Cell::zero(), Cell::identity()}, {Cell::identity(), Cell::zero()}}}),
               std::invalid_argument);
  EXPECT_THROW(from_blocks(BlockSpec{{2}, {2}, {{Cell::cycle()}}}), std::invalid_argument);
}

TEST(BinaryMatrix, Algebra) {
  using M = BinaryMatrix;
  auto n = vstack({M::identity(3), M::ones(1, 3)});
  EXPECT_EQ(n.rows(), 4);
  EXPECT_EQ(n.complement().row_sum(0), 2);
  EXPECT_EQ(n.complement().row_sum(3), 0);
  EXPECT_EQ(n.transpose().transpose(), n);
  EXPECT_EQ(hstack({M::ones(2, 1), M::zeros(2, 2)}).row_sum(1), 1);
  EXPECT_EQ(M::ones(3, 3).minus(M::identity(3)), M::identity(3).complement());
  EXPECT_THROW(M::identity(3).minus(M::ones(3, 3)), std::invalid_argument);
  EXPECT_THROW(hstack({M::ones(2, 1), M::ones(3, 1)}), std::invalid_argument);
}

TEST(LineGraph, SmallCases) {
  EXPECT_EQ(line_graph(complete_graph(3)), complete_graph(3));
  EXPECT_EQ(line_graph(complete_bipartite_graph(1, 3)), complete_graph(3));
  EXPECT_EQ(line_graph(Graph(4)).order(), 0);
}

TEST(LineGraph, CycleIsCycle) {
  auto l = line_graph(cycle_graph(6));
  EXPECT_EQ(l.regular_degree(), 2);
  EXPECT_TRUE(is_connected(l));
  EXPECT_EQ(char_poly_adjacency(l), char_poly_adjacency(cycle_graph(6)));
}

TEST(LineGraph, LexicographicOrder) {
  // Edges of the path 0-1-2 plus 0-3: (0,1), (0,3), (1,2).
  auto g = graph_from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}});
  auto l = line_graph(g);
  EXPECT_TRUE(l.adjacent(0, 1));  // (0,1) ~ (0,3)
  EXPECT_TRUE(l.adjacent(0, 2));  // (0,1) ~ (1,2)
  EXPECT_FALSE(l.adjacent(1, 2));
}

TEST(LineGraph, RegularInvariants) {
  for (auto g : {circulant(11, {1, 3}), circulant(12, {2, 5, 6}), complete_graph(6)}) {
    int d = *g.regular_degree();
    auto e = g.edge_count();
    auto l = line_graph(g);
    EXPECT_EQ(l.order(), static_cast<int>(e));
    EXPECT_EQ(l.regular_degree(), 2 * d - 2);
    EXPECT_EQ(l.edge_count(), e * (2 * d - 2) / 2);
    expect_simple(l);
  }
}

TEST(DeleteVertices, Examples) {
  auto r = delete_vertices(complete_graph(4), {0});
  EXPECT_EQ(r.graph, complete_graph(3));
  EXPECT_EQ(r.old_to_new, (std::vector<Vertex>{-1, 0, 1, 2}));
  EXPECT_EQ(delete_vertices(cycle_graph(5), std::span<const Vertex>{}).graph, cycle_graph(5));
  EXPECT_THROW(delete_vertices(cycle_graph(5), {5}), std::invalid_argument);
}

TEST(DeleteVertices, ComponentsBounded) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(12, 0.3, rng);
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < 12; ++v)
      if (std::bernoulli_distribution(0.3)(rng)) drop.push_back(v);
    auto h = delete_vertices(g, drop).graph;
    EXPECT_EQ(h.order(), 12 - static_cast<int>(drop.size()));
    EXPECT_LE(components(h).count, h.order());
  }
}

TEST(DeleteEdges, Examples) {
  EXPECT_EQ(delete_edges(complete_graph(3), {Edge{0, 1}}),
            graph_from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}));
  auto two = delete_edges(cycle_graph(4), {Edge{0, 1}, Edge{2, 3}});
  EXPECT_EQ(components(two).count, 2);
  try {
    delete_edges(cycle_graph(4), {Edge{0, 2}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos);
  }
}

TEST(Components, Examples) {
  auto two = disjoint_union(complete_graph(3), complete_graph(3));
  auto cp = components(two);
  EXPECT_EQ(cp.count, 2);
  EXPECT_EQ(cp.labels, (std::vector<int>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(components(Graph(5)).count, 5);
  EXPECT_EQ(components(Graph(0)).count, 0);
}

TEST(TwoColoring, Examples) {
  EXPECT_TRUE(two_coloring(cycle_graph(6)).has_value());
  EXPECT_FALSE(two_coloring(cycle_graph(5)).has_value());
  auto c = *two_coloring(complete_bipartite_graph(2, 3));
  for (const auto& e : complete_bipartite_graph(2, 3).edges()) EXPECT_NE(c[e.u], c[e.v]);
}

TEST(GraphBuilder, RejectsLoopsAndRange) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(Graph(2).degree(2), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// graph6

TEST(Graph6, HandEncodedTriangle) {
  // Header 63 + 3 = 'B'; bits 111 padded to 111000 = 56, 56 + 63 = 'w'.
  EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
}

TEST(Graph6, SingleVertexAndEmpty) {
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(decode_graph6("@"), Graph(1));
  EXPECT_EQ(decode_graph6("?"), Graph(0));
}

TEST(Graph6, HandEncodedPath) {
  // P_4 edges (0,1), (1,2), (2,3): bit order x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1
  // = 0b101001 = 41, 41 + 63 = 104 = 'h'.
  EXPECT_EQ(encode_graph6(path_graph(4)), "Ch");
}

TEST(Graph6, LongHeader) {
  auto g = circulant(100, {1, 7});
  auto text = encode_graph6(g);
  ASSERT_EQ(text[0], '~');
  // 100 = 000000 000001 100100 -> 63, 64, 99.
  EXPECT_EQ(text.substr(1, 3), std::string({char(63), char(64), char(99)}));
  EXPECT_EQ(text.size(), 4u + (100 * 99 / 2 + 5) / 6);
  EXPECT_EQ(decode_graph6(text), g);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(0, 30)(rng);
    auto g = oracle::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6, HeaderPrefixAccepted) { EXPECT_EQ(decode_graph6(">>graph6<<Bw"), complete_graph(3)); }

TEST(Graph6, ParseErrorsCarryOffsets) {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      decode_graph6(s);
    } catch (const Graph6Error& e) {
      return e.offset();
    }
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("B"), 1u);       // payload missing
  EXPECT_EQ(offset_of("Bww"), 2u);     // one byte too many
  EXPECT_EQ(offset_of("B "), 1u);      // space is below 63
  EXPECT_EQ(offset_of("Bx"), 1u);      // 'x' = 57 sets a padding bit
  EXPECT_EQ(offset_of("~??"), 3u);     // truncated long header
}

TEST(Graph6, StreamReportsLine) {
  std::istringstream in("Bw\n\n@\nB!\n");
  try {
    read_graph6_stream(in);
    FAIL();
  } catch (const Graph6StreamError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  std::istringstream ok("Bw\r\nCh\n");
  EXPECT_EQ(read_graph6_stream(ok).size(), 2u);
}
