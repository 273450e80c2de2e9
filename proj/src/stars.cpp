#include "bzeta/stars.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bzeta/errors.hpp"

namespace bzeta {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt binomial(const BigInt& n, std::size_t k) {
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

BigInt factorial(std::size_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt sign_power(std::size_t m) { return m % 2 == 0 ? BigInt(1) : BigInt(-1); }

std::size_t half_degree_sum(const DegreeSequence& d) {
  const std::size_t sum = d.sum();
  if (sum % 2 != 0) throw std::invalid_argument("degree sum is odd");
  return sum / 2;
}

// caps[i] bounds the i-th largest part; an empty caps vector means no bound.
void generate(std::size_t remaining, std::size_t max_part, const std::vector<std::size_t>* caps,
              std::vector<std::size_t>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  std::size_t limit = std::min(max_part, remaining);
  if (caps != nullptr) {
    if (current.size() >= caps->size()) return;
    limit = std::min(limit, (*caps)[current.size()]);
  }
  for (std::size_t part = limit; part >= 2; --part) {
    // The rest must be expressible with parts in [2, part].
    const std::size_t rest = remaining - part;
    if (rest == 1) continue;
    current.push_back(part);
    generate(rest, part, caps, current, out);
    current.pop_back();
  }
}

BigInt prototype_closed_form(const Partition& p) {
  BigInt product = 1;
  for (std::size_t c : p.parts()) {
    const BigInt magnitude = static_cast<unsigned long>(c - 1);
    product *= (c % 2 == 1) ? magnitude : BigInt(-magnitude);
  }
  return product;
}

}  // namespace

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t c : parts_) {
    if (c < 2) throw std::invalid_argument("partition part " + std::to_string(c) + " is below 2");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t Partition::k() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

std::vector<Partition> partitions_min2(std::size_t k) {
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  generate(k, k, nullptr, current, out);
  return out;
}

std::vector<Partition> partitions_min2(std::size_t k, const DegreeSequence& fit) {
  std::vector<std::size_t> caps = fit.degrees();
  std::sort(caps.begin(), caps.end(), std::greater<>());
  while (!caps.empty() && caps.back() < 2) caps.pop_back();
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  generate(k, k, &caps, current, out);
  return out;
}

BigInt count_partitions_min2(std::size_t k) {
  std::vector<BigInt> ways(k + 1);
  ways[0] = 1;
  for (std::size_t part = 2; part <= k; ++part) {
    for (std::size_t s = part; s <= k; ++s) ways[s] += ways[s - part];
  }
  return ways[k];
}

IntMatrix prototype_matrix(const Partition& p) {
  const std::size_t k = p.k();
  IntMatrix m(k, k);
  std::size_t offset = 0;
  for (std::size_t c : p.parts()) {
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) m(offset + i, offset + j) = 1;
      }
    }
    offset += c;
  }
  return m;
}

BigInt prototype_det(const Partition& p) {
  static std::mutex mutex;
  static std::map<std::vector<std::size_t>, BigInt> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p.parts()); it != cache.end()) return it->second;
  }
  const BigInt direct = determinant(prototype_matrix(p));
  const BigInt closed = prototype_closed_form(p);
  if (direct != closed) {
    throw ExactnessError("prototype determinant " + to_string(direct) + " differs from closed form " +
                         to_string(closed));
  }
  std::lock_guard lock(mutex);
  cache.emplace(p.parts(), direct);
  return direct;
}

BigInt sink_star_count(const DegreeSequence& d, std::size_t q) {
  if (q < 2) throw std::invalid_argument("sink stars need at least 2 leaves");
  BigInt total = 0;
  for (std::size_t deg : d.degrees()) {
    if (deg >= q) total += binomial(deg, q);
  }
  return total;
}

BridgeTally vertex_bridge_tally(const DegreeSequence& d) {
  BridgeTally tally;
  tally.per_vertex.resize(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == 2) {
      tally.degree_two += 1;
    } else if (d[v] >= 3) {
      tally.per_vertex[v] = binomial(d[v], 2);
      tally.high_degree += tally.per_vertex[v];
    }
  }
  return tally;
}

BigInt legal_pair_count(const DegreeSequence& d) {
  const BridgeTally tally = vertex_bridge_tally(d);
  BigInt result = binomial(BigInt(tally.high_degree + tally.degree_two), 2);
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] >= 3) result -= binomial(tally.per_vertex[v], 2);
  }
  return result;
}

BigInt legal_set_count(const DegreeSequence& d, const Partition& p) {
  // Distinct part values with multiplicities; the DP state is the vector of
  // remaining multiplicities in mixed radix.
  std::vector<std::size_t> values;
  std::vector<std::size_t> mult;
  for (std::size_t c : p.parts()) {
    if (!values.empty() && values.back() == c) {
      ++mult.back();
    } else {
      values.push_back(c);
      mult.push_back(1);
    }
  }
  std::vector<std::size_t> radix(values.size());
  std::size_t states = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    radix[i] = states;
    states *= mult[i] + 1;
  }

  std::vector<BigInt> dp(states);
  dp[states - 1] = 1;
  std::vector<BigInt> next;
  std::vector<BigInt> weight(values.size());
  for (std::size_t deg : d.degrees()) {
    bool any = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
      weight[i] = deg >= values[i] ? binomial(deg, values[i]) : BigInt(0);
      any = any || weight[i] != 0;
    }
    if (!any) continue;
    next = dp;
    for (std::size_t s = 0; s < states; ++s) {
      if (sgn(dp[s]) == 0) continue;
      for (std::size_t i = 0; i < values.size(); ++i) {
        const std::size_t left = (s / radix[i]) % (mult[i] + 1);
        if (left == 0 || sgn(weight[i]) == 0) continue;
        // `left` labeled slots of this value could take the vertex.
        BigInt w = weight[i] * static_cast<unsigned long>(left);
        mpz_addmul(next[s - radix[i]].get_mpz_t(), dp[s].get_mpz_t(), w.get_mpz_t());
      }
    }
    dp.swap(next);
  }

  BigInt symmetry = 1;
  for (std::size_t c : mult) symmetry *= factorial(c);
  return exact_quotient(dp[0], symmetry);
}

BigInt d2_closed(const DegreeSequence& d) {
  const std::size_t m = half_degree_sum(d);
  BigInt line_graph_edges = 0;
  for (std::size_t deg : d.degrees()) line_graph_edges += binomial(deg, 2);
  return -sign_power(m) * line_graph_edges;
}

BigInt d3_closed(const DegreeSequence& d) {
  const std::size_t m = half_degree_sum(d);
  return sign_power(m) * 2 * sink_star_count(d, 3);
}

BigInt d4_closed(const DegreeSequence& d) {
  const std::size_t m = half_degree_sum(d);
  return sign_power(m) * (legal_pair_count(d) - 3 * sink_star_count(d, 4));
}

StarCountBreakdown dk_combinatorial(const Graph& g, std::size_t k, bool include_zero_rows) {
  if (k > 2 * g.m()) {
    throw std::out_of_range("coefficient index k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(2 * g.m()) + "]");
  }
  const DegreeSequence degrees = degree_sequence(g);
  StarCountBreakdown out;
  out.k = k;
  out.m = g.m();
  out.partition_count = count_partitions_min2(k);

  const std::vector<Partition> partitions = include_zero_rows ? partitions_min2(k) : partitions_min2(k, degrees);
  BigInt sum = 0;
  for (const auto& p : partitions) {
    StarCountRow row{p, legal_set_count(degrees, p), prototype_det(p), 0};
    row.term = row.legal_sets * row.prototype_det;
    sum += row.term;
    out.rows.push_back(std::move(row));
  }
  out.total = sign_power(g.m()) * sum;
  return out;
}

ReducedZetaResult reduced_poly_combinatorial(const Graph& g) {
  const std::size_t top = 2 * g.m();
  std::vector<BigInt> coeffs(top + 1);
  for (std::size_t k = 0; k <= top; ++k) coeffs[top - k] = dk_combinatorial(g, k).total;
  return ReducedZetaResult{g.n(), g.m(), ZetaMethod::kCombinatorial, IntPolynomial(std::move(coeffs))};
}

}  // namespace bzeta
