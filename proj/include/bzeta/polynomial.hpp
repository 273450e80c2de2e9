#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bzeta/linalg.hpp"

namespace bzeta {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// stored ascending by power. Trailing zeros are always stripped, so the zero
// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t power);
  // x + c
  static IntPolynomial linear(const BigInt& c);

  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  // Zero beyond the degree.
  BigInt coeff(std::size_t power) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }

  bool operator==(const IntPolynomial& other) const = default;

  IntPolynomial pow(unsigned exponent) const;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;

  // p(-x)
  IntPolynomial negate_variable() const;

  // x^n p(1/x). Requires degree() <= n. Bridges det(I - tM) = t^dim charpoly(M)(1/t).
  IntPolynomial reversed(std::size_t n) const;

  // Descending powers, e.g. "-u^6 + 3u^4 - 3u^2 + 1".
  std::string to_text(std::string_view var = "x") const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

}  // namespace bzeta
