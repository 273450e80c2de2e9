#include "bzeta/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bzeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear(const BigInt& c) { return IntPolynomial({c, BigInt(1)}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      mpz_addmul(product[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(product);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::negate_variable() const {
  IntPolynomial result = *this;
  for (std::size_t i = 1; i < result.coeffs_.size(); i += 2) result.coeffs_[i] = -result.coeffs_[i];
  return result;
}

IntPolynomial IntPolynomial::reversed(std::size_t n) const {
  if (degree() > static_cast<long>(n)) throw std::invalid_argument("reversed: degree exceeds n");
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[n - i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_text(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool first = out.empty();
    if (sgn(c) < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    BigInt magnitude = abs(c);
    if (magnitude != 1 || i == 0) out += magnitude.get_str(10);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace bzeta
