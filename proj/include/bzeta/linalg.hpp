#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

class IntPolynomial;

// Parses "p" or "p/q" into canonical form. Throws InputError on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// q = a / b, throwing ExactnessError unless b divides a.
BigInt exact_quotient(const BigInt& a, const BigInt& b);

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix square(std::size_t n) { return Matrix(n, n); }

  static Matrix identity(std::size_t n) {
    Matrix result(n, n);
    for (std::size_t i = 0; i < n; ++i) result(i, i) = 1;
    return result;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
BigInt trace(const IntMatrix& m);
RationalMatrix to_rational(const IntMatrix& m);

// Fraction-free (Bareiss) elimination; every division is checked for exactness.
BigInt determinant(const IntMatrix& m);

// Gaussian elimination over the rationals.
Rational det_rational(const RationalMatrix& m);

enum class CharpolyMethod {
  // Faddeev-LeVerrier recurrence; the division by k at each step is asserted exact.
  kFaddeevLeVerrier,
  // Berkowitz, division free.
  kBerkowitz,
};

// det(xI - m), monic of degree dim(m).
IntPolynomial charpoly(const IntMatrix& m, CharpolyMethod method = CharpolyMethod::kFaddeevLeVerrier);

}  // namespace bzeta
