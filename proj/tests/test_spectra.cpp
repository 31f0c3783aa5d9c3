#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"
#include "oracles.hpp"

using namespace cospec;

TEST(CharPoly, SmallAdjacency) {
  EXPECT_EQ(char_poly_adjacency(complete_graph(2)), (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(char_poly_adjacency(cycle_graph(4)), (IntPolynomial{0, 0, -4, 0, 1}));
  EXPECT_EQ(char_poly_adjacency(Graph(3)), (IntPolynomial{0, 0, 0, 1}));
  // K3: (x - 2)(x + 1)^2 = x^3 - 3x - 2.
  EXPECT_EQ(char_poly_adjacency(complete_graph(3)), (IntPolynomial{-2, -3, 0, 1}));
  EXPECT_EQ(char_poly_adjacency(Graph(0)), (IntPolynomial{1}));
}

TEST(CharPoly, SmallLaplacian) {
  EXPECT_EQ(char_poly_laplacian(complete_graph(2)), (IntPolynomial{0, -2, 1}));
  // C4 Laplacian spectrum 0, 2, 2, 4.
  EXPECT_EQ(char_poly_laplacian(cycle_graph(4)), (IntPolynomial{0, -16, 20, -8, 1}));
}

TEST(CharPoly, Petersen) {
  // (x - 3)(x - 1)^5 (x + 2)^4
  auto p = char_poly_adjacency(oracle::petersen());
  EXPECT_EQ(p.evaluate(3), 0);
  EXPECT_EQ(p.evaluate(1), 0);
  EXPECT_EQ(p.evaluate(-2), 0);
  EXPECT_EQ(p[0], BigInt(-3) * 1 * 16 * -1);  // (-3)(-1)^5(2)^4 = 48
}

TEST(CharPoly, RoutesAgreeWithBareissOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 14)(rng);
    auto g = oracle::random_graph(n, 0.45, rng);
    for (auto m : {adjacency_matrix(g), laplacian_matrix(g)}) {
      auto a = characteristic_polynomial(m, CharPolyMethod::multimodular);
      auto b = characteristic_polynomial(m, CharPolyMethod::berkowitz);
      EXPECT_EQ(a, b);
      EXPECT_TRUE(oracle::is_char_poly_of(a, m)) << a.to_string();
    }
  }
}

TEST(CharPoly, DenseLargeEntriesOracle) {
  // Laplacian of K_25 has coefficients far beyond 64 bits.
  auto m = laplacian_matrix(complete_graph(25));
  auto p = characteristic_polynomial(m);
  EXPECT_TRUE(oracle::is_char_poly_of(p, m));
  EXPECT_EQ(p, characteristic_polynomial(m, CharPolyMethod::berkowitz));
}

TEST(CharPoly, TraceCoefficients) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 30)(rng);
    auto g = oracle::random_graph(n, 0.3, rng);
    auto p = char_poly_adjacency(g);
    EXPECT_EQ(p[n - 1], 0);
    EXPECT_EQ(p[n - 2], -BigInt(g.edge_count()));
    // Coefficient of x^{n-3} is -2 * (number of triangles).
    long long triangles = 0;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++triangles;
    EXPECT_EQ(p[n - 3], BigInt(-2 * triangles));
  }
}

TEST(CharPoly, RegularLaplacianRelation) {
  // For d-regular G, det(xI - L) = (-1)^n det((d - x)I - A).
  for (auto g : {circulant(9, {1, 2}), oracle::petersen(), circulant(14, {3, 7})}) {
    int d = *g.regular_degree();
    int n = g.order();
    auto pa = char_poly_adjacency(g);
    auto pl = char_poly_laplacian(g);
    for (int t = -3; t <= 5; ++t) {
      BigInt sign = n % 2 ? -1 : 1;
      EXPECT_EQ(pl.evaluate(t), sign * pa.evaluate(d - t));
    }
  }
}

TEST(Cospectral, StarVersusCyclePlusVertex) {
  auto a = disjoint_union(cycle_graph(4), Graph(1));
  auto b = complete_bipartite_graph(1, 4);
  EXPECT_TRUE(cospectral(a, b, MatrixKind::adjacency));
  EXPECT_FALSE(cospectral(a, b, MatrixKind::laplacian));
  EXPECT_FALSE(cospectral(a, Graph(4), MatrixKind::adjacency));
}

TEST(Cospectral, RelabelingInvariant) {
  std::mt19937_64 rng(3);
  auto g = oracle::random_graph(15, 0.4, rng);
  std::vector<Vertex> perm(15);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto h = relabel(g, perm);
  EXPECT_TRUE(cospectral(g, h, MatrixKind::adjacency));
  EXPECT_TRUE(cospectral(g, h, MatrixKind::laplacian));
  EXPECT_EQ(char_poly_adjacency(g).digest(), char_poly_adjacency(h).digest());
}

TEST(ZeroRoots, LaplacianCountsComponents) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 16)(rng);
    auto g = oracle::random_graph(n, 0.12, rng);
    EXPECT_EQ(zero_root_multiplicity(char_poly_laplacian(g)), components(g).count);
  }
  EXPECT_THROW(zero_root_multiplicity(IntPolynomial{}), std::invalid_argument);
}

TEST(SymmetricSpectrum, MatchesBipartiteness) {
  EXPECT_TRUE(spectrum_symmetric(char_poly_adjacency(cycle_graph(6))));
  EXPECT_FALSE(spectrum_symmetric(char_poly_adjacency(cycle_graph(5))));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    auto g = oracle::random_graph(n, 0.25, rng);
    EXPECT_EQ(spectrum_symmetric(char_poly_adjacency(g)), two_coloring(g).has_value());
  }
}

TEST(Fiedler, ExactIntegerCases) {
  auto tol = default_fiedler_tolerance();
  for (int n : {2, 3, 5, 8}) {
    auto iv = second_smallest_laplacian_eigenvalue(complete_graph(n));
    EXPECT_TRUE(iv.contains(BigRational(n)));
    EXPECT_LE(iv.width(), tol);
  }
  EXPECT_TRUE(second_smallest_laplacian_eigenvalue(cycle_graph(4)).contains(BigRational(2)));
  EXPECT_TRUE(second_smallest_laplacian_eigenvalue(path_graph(3)).contains(BigRational(1)));
  EXPECT_TRUE(second_smallest_laplacian_eigenvalue(oracle::petersen()).contains(BigRational(2)));
}

TEST(Fiedler, IrrationalCase) {
  // C5: 2 - 2 cos(2 pi / 5).
  const double mu = 2 - 2 * std::cos(2 * M_PI / 5);
  auto iv = second_smallest_laplacian_eigenvalue(cycle_graph(5), BigRational(1, 1 << 30));
  EXPECT_LE(static_cast<double>(iv.lo), mu + 1e-12);
  EXPECT_GE(static_cast<double>(iv.hi), mu - 1e-12);
  EXPECT_LE(iv.width(), BigRational(1, 1 << 30));
}

TEST(Fiedler, DisconnectedAndErrors) {
  auto iv = second_smallest_laplacian_eigenvalue(disjoint_union(complete_graph(3), complete_graph(2)));
  EXPECT_EQ(iv.lo, 0);
  EXPECT_EQ(iv.hi, 0);
  EXPECT_THROW(second_smallest_laplacian_eigenvalue(Graph(1)), std::invalid_argument);
  EXPECT_THROW(second_smallest_laplacian_eigenvalue(complete_graph(3), BigRational(0)),
               std::invalid_argument);
}

TEST(Fiedler, BoundedByVertexConnectivityOnRandomGraphs) {
  // Independent lower check: mu2 > 0 iff connected.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(10, 0.35, rng);
    auto iv = second_smallest_laplacian_eigenvalue(g);
    EXPECT_EQ(iv.hi > 0, is_connected(g));
  }
}

TEST(Polynomial, Formatting) {
  IntPolynomial p{-2, 0, 1};
  EXPECT_EQ(p.to_decimal_list(), "[-2, 0, 1]");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ(p.digest().size(), 16u);
  EXPECT_NE(p.digest(), IntPolynomial({-2, 1}).digest());
}
