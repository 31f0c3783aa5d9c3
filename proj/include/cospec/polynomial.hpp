#pragma once

// Exact integer polynomials (coefficients indexed by power).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class IntPolynomial {
 public:
  IntPolynomial() = default;

  /// coeffs[i] is the coefficient of x^i. Trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  const BigInt& operator[](std::size_t i) const {
    static const BigInt zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(x) -> p(-x).
  IntPolynomial reflect() const {
    auto c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
  }

  IntPolynomial operator-() const {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
  }

  bool operator==(const IntPolynomial&) const = default;

  /// Decimal coefficient list, index = power, e.g. "[-1, 0, 1]".
  std::string to_decimal_list() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += coeffs_[i].str();
    }
    return s + "]";
  }

  /// Human-readable form, highest power first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const auto& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (mag != 1 || i == 0) s += mag.str();
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  /// 64-bit FNV-1a over the decimal coefficient list, as 16 hex digits.
  /// For display only; equality decisions compare coefficients.
  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_decimal_list()) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace cospec
