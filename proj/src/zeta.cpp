#include "bzeta/zeta.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "bzeta/arcs.hpp"
#include "bzeta/errors.hpp"
#include "detail/rng.hpp"

namespace bzeta {

namespace {

BigInt sign_power(std::size_t m) { return m % 2 == 0 ? BigInt(1) : BigInt(-1); }

// I - M t for a rational matrix M given as a callback over entries.
template <typename Entry>
RationalMatrix identity_minus(std::size_t dim, const Rational& t, Entry entry) {
  RationalMatrix result(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      result(i, j) = (i == j ? Rational(1) : Rational(0)) - entry(i, j) * t;
    }
  }
  return result;
}

}  // namespace

std::string_view to_string(ZetaMethod method) {
  switch (method) {
    case ZetaMethod::kDeterminant:
      return "det";
    case ZetaMethod::kProduct:
      return "product";
    case ZetaMethod::kCombinatorial:
      return "stars";
  }
  return "unknown";
}

BigInt ReducedZetaResult::d(std::size_t k) const {
  if (k > 2 * m) {
    throw std::out_of_range("coefficient index k = " + std::to_string(k) + " outside [0, " + std::to_string(2 * m) +
                            "]");
  }
  return poly.coeff(2 * m - k);
}

std::vector<BigInt> ReducedZetaResult::d_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(2 * m + 1);
  for (std::size_t k = 0; k <= 2 * m; ++k) out.push_back(d(k));
  return out;
}

BigInt coefficient_d(const ReducedZetaResult& result, std::size_t k) { return result.d(k); }

IntPolynomial ihara_reciprocal(const Graph& g) {
  const ArcSystem arcs(g);
  return charpoly(matrix_T(arcs).to_int()).reversed(arcs.size());
}

Rational bartholdi_edge_eval(const Graph& g, const Rational& u, const Rational& t) {
  const ArcSystem arcs(g);
  const BinaryMatrix tm = matrix_T(arcs);
  const BinaryMatrix jm = matrix_J(g.m());
  const BinaryMatrix bm = matrix_B(arcs);
  const Rational one_minus_u = 1 - u;

  const Rational via_t = det_rational(identity_minus(arcs.size(), t, [&](std::size_t i, std::size_t j) -> Rational {
    return Rational(tm(i, j) ? 1 : 0) + (jm(i, j) ? u : Rational(0));
  }));
  const Rational via_b = det_rational(identity_minus(arcs.size(), t, [&](std::size_t i, std::size_t j) -> Rational {
    return Rational(bm(i, j) ? 1 : 0) - (jm(i, j) ? one_minus_u : Rational(0));
  }));
  if (via_t != via_b) {
    throw ExactnessError("edge forms disagree: " + to_string(via_t) + " vs " + to_string(via_b));
  }
  return via_t;
}

Rational bartholdi_vertex_eval(const Graph& g, const Rational& u, const Rational& t) {
  const std::size_t n = g.n();
  const DegreeSequence degrees = degree_sequence(g);
  const Rational w = 1 - u;

  const Rational base = 1 - w * w * t * t;
  const long exponent = static_cast<long>(g.m()) - static_cast<long>(n);
  if (base == 0 && exponent < 0) {
    throw PoleError("vertex form has a pole at u = " + to_string(u) + ", t = " + to_string(t));
  }
  Rational prefactor = 1;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) prefactor *= base;
  if (exponent < 0) prefactor = 1 / prefactor;

  RationalMatrix m(n, n);
  const Rational t2 = t * t;
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = 1 + w * (Rational(static_cast<unsigned long>(degrees[v])) - w) * t2;
  }
  for (const auto& e : g.edges()) {
    m(e.u, e.v) -= t;
    m(e.v, e.u) -= t;
  }
  return prefactor * det_rational(m);
}

BartholdiEvaluation bartholdi_evaluate(const Graph& g, const Rational& u, const Rational& t) {
  BartholdiEvaluation eval;
  eval.u = u;
  eval.t = t;
  eval.edge_form = bartholdi_edge_eval(g, u, t);
  try {
    eval.vertex_form = bartholdi_vertex_eval(g, u, t);
  } catch (const PoleError&) {
    eval.vertex_form.reset();
  }
  eval.agreement = eval.vertex_form.has_value() && *eval.vertex_form == eval.edge_form;
  return eval;
}

std::vector<std::pair<Rational, Rational>> sample_evaluation_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto draw = [&rng]() -> Rational {
    const long num = static_cast<long>(detail::uniform_below(rng, 19)) - 9;
    const long den = static_cast<long>(detail::uniform_below(rng, 9)) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rational u = draw();
    Rational t = draw();
    points.emplace_back(std::move(u), std::move(t));
  }
  return points;
}

ReducedZetaResult reduced_bartholdi_det(const Graph& g) {
  const ArcSystem arcs(g);
  const IntMatrix jt = product(matrix_J(g.m()), matrix_T(arcs));
  IntPolynomial poly = charpoly(jt).negate_variable() * sign_power(g.m());
  return ReducedZetaResult{g.n(), g.m(), ZetaMethod::kDeterminant, std::move(poly)};
}

ReducedZetaResult reduced_bartholdi_product(const Graph& g) {
  const DegreeSequence degrees = degree_sequence(g);
  IntPolynomial poly = IntPolynomial::constant(sign_power(g.m()));
  const IntPolynomial u_minus_one = IntPolynomial::linear(-1);
  for (std::size_t d : degrees.degrees()) {
    if (d == 0) continue;
    const BigInt shift = static_cast<unsigned long>(d - 1);
    poly *= IntPolynomial::linear(shift);
    poly *= u_minus_one.pow(static_cast<unsigned>(d - 1));
  }
  return ReducedZetaResult{g.n(), g.m(), ZetaMethod::kProduct, std::move(poly)};
}

}  // namespace bzeta
