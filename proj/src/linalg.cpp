#include "bzeta/linalg.hpp"

#include <utility>

#include "bzeta/errors.hpp"
#include "bzeta/polynomial.hpp"

namespace bzeta {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

IntPolynomial faddeev_leverrier(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<BigInt> coeffs(n + 1);
  coeffs[n] = 1;
  if (n == 0) return IntPolynomial(std::move(coeffs));

  // m holds the k-th adjugate iterate; it starts at the identity.
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = multiply(a, m);
    BigInt tr = trace(am);
    BigInt c = -exact_quotient(tr, BigInt(static_cast<unsigned long>(k)));
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c;
      m = std::move(am);
    }
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial berkowitz(const IntMatrix& a) {
  const std::size_t n = a.rows();
  // Descending coefficients of det(xI - A_r) for the leading r x r block.
  std::vector<BigInt> poly{BigInt(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t prev = r - 1;  // size of the leading block A_{r-1}
    const BigInt& corner = a(prev, prev);

    // First column of the Toeplitz factor: 1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C.
    std::vector<BigInt> column(r + 1);
    column[0] = 1;
    column[1] = -corner;
    std::vector<BigInt> v(prev);
    for (std::size_t i = 0; i < prev; ++i) v[i] = a(i, prev);
    for (std::size_t j = 2; j <= r; ++j) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < prev; ++i) mpz_addmul(dot.get_mpz_t(), a(prev, i).get_mpz_t(), v[i].get_mpz_t());
      column[j] = -dot;
      if (j == r) break;
      std::vector<BigInt> next(prev);
      for (std::size_t i = 0; i < prev; ++i) {
        for (std::size_t l = 0; l < prev; ++l) {
          if (sgn(a(i, l)) != 0) mpz_addmul(next[i].get_mpz_t(), a(i, l).get_mpz_t(), v[l].get_mpz_t());
        }
      }
      v = std::move(next);
    }

    std::vector<BigInt> next_poly(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) {
        mpz_addmul(next_poly[i].get_mpz_t(), column[i - j].get_mpz_t(), poly[j].get_mpz_t());
      }
    }
    poly = std::move(next_poly);
  }
  return IntPolynomial(std::vector<BigInt>(poly.rbegin(), poly.rend()));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  if (b == 0 || mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) {
    throw ExactnessError("inexact division " + to_string(a) + " / " + to_string(b));
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  IntMatrix result(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const BigInt& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        mpz_addmul(result(i, j).get_mpz_t(), x.get_mpz_t(), b(l, j).get_mpz_t());
      }
    }
  }
  return result;
}

BigInt trace(const IntMatrix& m) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) sum += m(i, i);
  return sum;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix result(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) result(i, j) = Rational(m(i, j));
  }
  return result;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  BigInt num;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_quotient(num, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det_rational(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_rational: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.swap_rows(k, pivot);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      a(i, k) = 0;
    }
  }
  return det;
}

IntPolynomial charpoly(const IntMatrix& m, CharpolyMethod method) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  switch (method) {
    case CharpolyMethod::kBerkowitz:
      return berkowitz(m);
    case CharpolyMethod::kFaddeevLeVerrier:
      break;
  }
  return faddeev_leverrier(m);
}

}  // namespace bzeta
