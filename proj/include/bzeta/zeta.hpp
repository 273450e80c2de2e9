#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <string_view>
#include <vector>

#include "bzeta/graph.hpp"
#include "bzeta/linalg.hpp"
#include "bzeta/polynomial.hpp"

namespace bzeta {

enum class ZetaMethod { kDeterminant, kProduct, kCombinatorial };

std::string_view to_string(ZetaMethod method);

// The reduced Bartholdi polynomial det(T + uJ) in u, degree 2m, with
// d_k = coefficient of u^(2m-k).
struct ReducedZetaResult {
  std::size_t n = 0;
  std::size_t m = 0;
  ZetaMethod method = ZetaMethod::kDeterminant;
  IntPolynomial poly;

  // Throws std::out_of_range unless k <= 2m.
  BigInt d(std::size_t k) const;
  // d_0 .. d_2m
  std::vector<BigInt> d_coefficients() const;
};

BigInt coefficient_d(const ReducedZetaResult& result, std::size_t k);

// det(I - tT) as a polynomial in t (the reciprocal Ihara zeta function).
IntPolynomial ihara_reciprocal(const Graph& g);

// det(I - (T + uJ)t), also computed as det(I - (B - (1 - u)J)t); the two are
// asserted equal.
Rational bartholdi_edge_eval(const Graph& g, const Rational& u, const Rational& t);

// (1 - (1-u)^2 t^2)^(m-n) det(I - tA + (1-u)(D - (1-u)I)t^2) over the vertex
// adjacency A and degree matrix D. Throws PoleError when the prefactor base
// vanishes under a negative exponent.
Rational bartholdi_vertex_eval(const Graph& g, const Rational& u, const Rational& t);

struct BartholdiEvaluation {
  Rational u;
  Rational t;
  Rational edge_form;
  std::optional<Rational> vertex_form;  // empty at a pole of the vertex form
  bool agreement = false;               // true when the vertex form is defined and equal
};

BartholdiEvaluation bartholdi_evaluate(const Graph& g, const Rational& u, const Rational& t);

// Seeded (u, t) pairs with numerators in [-9, 9] and denominators in [1, 9].
std::vector<std::pair<Rational, Rational>> sample_evaluation_points(std::size_t count, std::uint64_t seed);

// det(T + uJ) = (-1)^m c(-u), c = charpoly(J T), since T + uJ = J (J T + uI).
ReducedZetaResult reduced_bartholdi_det(const Graph& g);

// (-1)^m prod_v (u + d(v) - 1)(u - 1)^(d(v) - 1); isolated vertices contribute 1.
ReducedZetaResult reduced_bartholdi_product(const Graph& g);

}  // namespace bzeta
