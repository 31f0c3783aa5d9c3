#pragma once

// Exact characteristic polynomials and the spectral checks built on them.
//
// Two exact routes compute det(xI - M) for a small-integer matrix M:
//   * multimodular: Hessenberg reduction over F_p for enough 62-bit primes
//     to exceed twice the coefficient bound (1 + r)^n, r = max absolute row
//     sum, then Chinese remaindering to the symmetric residue. O(n^3) per
//     prime; this is the default.
//   * berkowitz: the division-free Samuelson-Berkowitz recurrence directly
//     over arbitrary-precision integers. O(n^4) big-integer operations.
// Neither route touches floating point.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/modular.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// Dense square integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;

  explicit IntMatrix(int order = 0) : n(order), a(static_cast<std::size_t>(order) * order, 0) {}

  long long& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  long long operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  long long max_abs_row_sum() const {
    long long best = 0;
    for (int r = 0; r < n; ++r) {
      long long s = 0;
      for (int c = 0; c < n; ++c) s += (*this)(r, c) < 0 ? -(*this)(r, c) : (*this)(r, c);
      best = std::max(best, s);
    }
    return best;
  }
};

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = 1;
  return m;
}

/// L = D - A.
inline IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix m(g.order());
  for (const auto& e : g.edges()) m(e.u, e.v) = m(e.v, e.u) = -1;
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = g.degree(v);
  return m;
}

enum class CharPolyMethod { multimodular, berkowitz };
enum class MatrixKind { adjacency, laplacian };

namespace detail {

/// det(xI - M) mod p, coefficients in standard (non-Montgomery) form,
/// index = power.
inline std::vector<u64> char_poly_mod_p(const IntMatrix& m, u64 p) {
  const Montgomery f(p);
  const int n = m.n;
  std::vector<u64> h(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = f.to_signed(m.a[i]);
  auto at = [&](int r, int c) -> u64& { return h[static_cast<std::size_t>(r) * n + c]; };

  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = f.inv(at(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 u = f.mul(at(i, j), inv);
      u64* ri = &at(i, 0);
      const u64* rp = &at(j + 1, 0);
      for (int c = j; c < n; ++c) ri[c] = f.sub(ri[c], f.mul(u, rp[c]));
      for (int r = 0; r < n; ++r) at(r, j + 1) = f.add(at(r, j + 1), f.mul(u, at(r, i)));
    }
  }

  // Characteristic polynomial of the Hessenberg matrix by the standard
  // recurrence on its leading principal blocks.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {f.to(1)};
  for (int mm = 1; mm <= n; ++mm) {
    auto& cur = polys[mm];
    const auto& prev = polys[mm - 1];
    cur.assign(mm + 1, 0);
    const u64 diag = at(mm - 1, mm - 1);
    for (int d = 0; d < mm; ++d) {
      cur[d + 1] = f.add(cur[d + 1], prev[d]);
      cur[d] = f.sub(cur[d], f.mul(diag, prev[d]));
    }
    u64 t = f.to(1);
    for (int i = mm - 1; i >= 1; --i) {
      t = f.mul(t, at(i, i - 1));
      if (t == 0) break;
      const u64 coef = f.mul(t, at(i - 1, mm - 1));
      if (coef == 0) continue;
      const auto& lower = polys[i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = f.sub(cur[d], f.mul(coef, lower[d]));
    }
  }
  std::vector<u64> out(n + 1);
  for (int d = 0; d <= n; ++d) out[d] = f.from(polys[n][d]);
  return out;
}

inline IntPolynomial char_poly_multimodular(const IntMatrix& m) {
  const int n = m.n;
  // |coefficient of x^i| <= C(n, i) r^i <= (1 + r)^n since every eigenvalue
  // is bounded by the maximum absolute row sum r.
  BigInt bound = 1;
  const BigInt base = BigInt(1) + m.max_abs_row_sum();
  for (int i = 0; i < n; ++i) bound *= base;
  const BigInt needed = 2 * bound + 1;

  std::vector<BigInt> residue(n + 1, 0);
  BigInt modulus = 1;
  std::size_t used = 0;
  while (modulus <= needed) {
    ++used;
    const u64 p = large_primes(used).back();
    auto rp = char_poly_mod_p(m, p);
    // Incremental CRT: x = x + modulus * ((r - x) * modulus^{-1} mod p).
    const u64 mod_p = static_cast<u64>(modulus % p);
    const u64 inv = powmod_slow(mod_p, p - 2, p);
    for (int d = 0; d <= n; ++d) {
      const u64 x_p = static_cast<u64>(residue[d] % p);
      const u64 diff = rp[d] >= x_p ? rp[d] - x_p : rp[d] + p - x_p;
      const u64 t = mulmod_slow(diff, inv, p);
      if (t) residue[d] += modulus * t;
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& c : residue)
    if (c > half) c -= modulus;
  return IntPolynomial(std::move(residue));
}

inline IntPolynomial char_poly_berkowitz(const IntMatrix& m) {
  const int n = m.n;
  if (n == 0) return IntPolynomial({1});
  // Descending coefficients of the leading r x r block's char poly.
  std::vector<BigInt> c = {1, -BigInt(m(0, 0))};
  for (int r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
    std::vector<BigInt> t(r + 2);
    t[0] = 1;
    t[1] = -BigInt(m(r, r));
    std::vector<BigInt> v(r);
    for (int i = 0; i < r; ++i) v[i] = m(i, r);  // S
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i)
        if (m(r, i) != 0 && v[i] != 0) dot += m(r, i) * v[i];
      t[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<BigInt> next(r, 0);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (m(i, j) != 0 && v[j] != 0) next[i] += m(i, j) * v[j];
        v = std::move(next);
      }
    }
    std::vector<BigInt> nc(r + 2, 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        if (c[j] != 0 && t[i - j] != 0) nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

}  // namespace detail

inline IntPolynomial characteristic_polynomial(const IntMatrix& m,
                                               CharPolyMethod method = CharPolyMethod::multimodular) {
  if (m.n == 0) return IntPolynomial({1});
  return method == CharPolyMethod::berkowitz ? detail::char_poly_berkowitz(m)
                                             : detail::char_poly_multimodular(m);
}

/// det(xI - A).
inline IntPolynomial char_poly_adjacency(const Graph& g,
                                         CharPolyMethod method = CharPolyMethod::multimodular) {
  return characteristic_polynomial(adjacency_matrix(g), method);
}

/// det(xI - (D - A)).
inline IntPolynomial char_poly_laplacian(const Graph& g,
                                         CharPolyMethod method = CharPolyMethod::multimodular) {
  return characteristic_polynomial(laplacian_matrix(g), method);
}

inline IntPolynomial char_poly(const Graph& g, MatrixKind kind) {
  return kind == MatrixKind::adjacency ? char_poly_adjacency(g) : char_poly_laplacian(g);
}

/// Exact coefficient-wise comparison of characteristic polynomials.
inline bool cospectral(const Graph& g, const Graph& h, MatrixKind kind) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return char_poly(g, kind) == char_poly(h, kind);
}

/// Largest t with x^t dividing p.
inline int zero_root_multiplicity(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root multiplicity");
  int t = 0;
  while (p[t] == 0) ++t;
  return t;
}

/// True iff p(-x) = +-p(x), i.e. the root multiset is closed under negation.
inline bool spectrum_symmetric(const IntPolynomial& p) {
  if (p.is_zero()) return true;
  const int parity = p.degree() % 2;
  for (int i = 0; i <= p.degree(); ++i)
    if (i % 2 != parity && p[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Algebraic connectivity enclosure

struct RationalInterval {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
};

namespace detail {

/// Number of roots of the real-rooted polynomial q that exceed a / 2^s,
/// counted with multiplicity. For a polynomial whose roots are all real,
/// the Descartes sign-variation count is exact.
inline int roots_above(const IntPolynomial& q, const BigInt& a, unsigned s) {
  const int d = q.degree();
  // R(y) = 2^{s d} q((y + a) / 2^s) has roots y = 2^s x - a.
  std::vector<BigInt> b(d + 1);
  for (int i = 0; i <= d; ++i) b[i] = q[i] << (s * static_cast<unsigned>(d - i));
  if (a != 0)
    for (int i = 0; i < d; ++i)
      for (int j = d - 1; j >= i; --j) b[j] += a * b[j + 1];
  int variations = 0;
  int last = 0;
  for (const auto& c : b) {
    int sign = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++variations;
    last = sign;
  }
  return variations;
}

}  // namespace detail

inline BigRational default_fiedler_tolerance() { return BigRational(1, BigInt(1) << 20); }

/// Interval (lo, hi] of width <= tol containing the second smallest
/// Laplacian eigenvalue. Bisection over dyadic rationals with exact
/// root counting on the Laplacian characteristic polynomial after the zero
/// roots are divided out.
inline RationalInterval second_smallest_laplacian_eigenvalue(
    const Graph& g, const BigRational& tol = default_fiedler_tolerance()) {
  if (g.order() < 2)
    throw std::invalid_argument("algebraic connectivity needs at least 2 vertices");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const auto p = char_poly_laplacian(g);
  const int zeros = zero_root_multiplicity(p);
  if (zeros >= 2) return {0, 0};

  std::vector<BigInt> shifted(p.coefficients().begin() + zeros, p.coefficients().end());
  const IntPolynomial q(std::move(shifted));
  const int d = q.degree();

  // All Laplacian eigenvalues lie in [0, 2 * max degree].
  BigInt lo = 0;
  BigInt hi = std::max(1, 2 * g.max_degree());
  unsigned scale = 0;
  while (BigRational(hi - lo, BigInt(1) << scale) > tol) {
    lo <<= 1;
    hi <<= 1;
    ++scale;
    const BigInt mid = (lo + hi) / 2;
    if (d - detail::roots_above(q, mid, scale) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  const BigInt den = BigInt(1) << scale;
  return {BigRational(lo, den), BigRational(hi, den)};
}

}  // namespace cospec
