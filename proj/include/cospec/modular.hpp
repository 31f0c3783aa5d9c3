#pragma once

// Word-size prime fields for the multimodular determinant kernels.

#include <cstdint>
#include <mutex>
#include <vector>

namespace cospec::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_slow(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod_slow(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_slow(r, base, m);
    base = mulmod_slow(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod_slow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_slow(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The first `count` primes below 2^62, in descending order.
inline std::vector<u64> large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard lock(mu);
  u64 candidate = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime_u64(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

/// Montgomery arithmetic modulo an odd p < 2^62. Values handed to mul/add/sub
/// are in Montgomery form.
class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    u64 r = static_cast<u64>((u128{1} << 64) % p);
    r2_ = mulmod_slow(r, r, p);
  }

  u64 modulus() const noexcept { return p_; }

  u64 reduce(u128 t) const noexcept {
    u64 m = static_cast<u64>(t) * neg_inv_;
    u64 u = static_cast<u64>((t + (u128)m * p_) >> 64);
    return u >= p_ ? u - p_ : u;
  }

  u64 to(u64 a) const noexcept { return reduce((u128)(a % p_) * r2_); }
  u64 from(u64 a) const noexcept { return reduce(a); }

  u64 to_signed(long long a) const noexcept {
    u64 mag = a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a);
    u64 m = to(mag % p_);
    return a < 0 ? neg(m) : m;
  }

  u64 mul(u64 a, u64 b) const noexcept { return reduce((u128)a * b); }
  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }

  u64 pow(u64 a, u64 e) const noexcept {
    u64 r = to(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Inverse of a nonzero element (Fermat).
  u64 inv(u64 a) const noexcept { return pow(a, p_ - 2); }

 private:
  u64 p_;
  u64 neg_inv_ = 0;
  u64 r2_ = 0;
};

}  // namespace cospec::detail
