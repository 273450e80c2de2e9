#include "bzeta/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bzeta/errors.hpp"
#include "bzeta/zeta.hpp"
#include "detail/rng.hpp"

namespace bzeta {

namespace {

void require_within(std::size_t dim, const BruteForceBounds& bounds) {
  if (dim > bounds.max_arcs) {
    throw BoundExceededError("brute-force minor enumeration needs 2m <= " + std::to_string(bounds.max_arcs) +
                             " (got " + std::to_string(dim) + ")");
  }
}

__extension__ using Wide = __int128;

// Bareiss on 0/1 minors of bounded size. Intermediates are minors of the
// input, hence below the Hadamard bound, and fit comfortably in 64 bits.
std::int64_t small_determinant(const BinaryMatrix& s) {
  const std::size_t n = s.dim();
  if (n == 0) return 1;
  std::vector<std::int64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = s(i, j) ? 1 : 0;
  }
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide num = static_cast<Wide>(a[i * n + j]) * a[k * n + k] - static_cast<Wide>(a[i * n + k]) * a[k * n + j];
        if (num % prev != 0) throw ExactnessError("inexact Bareiss step in minor determinant");
        a[i * n + j] = static_cast<std::int64_t>(num / prev);
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

bool has_zero_row(const BinaryMatrix& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (s.row_sum(r) == 0) return true;
  }
  return false;
}

template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  if (k > n) return;
  while (true) {
    visit(subset);
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

using PolyMatrix = std::vector<IntPolynomial>;

PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t n) {
  PolyMatrix out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const IntPolynomial& x = a[i * n + l];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const IntPolynomial& y = b[l * n + j];
        if (!y.is_zero()) out[i * n + j] += x * y;
      }
    }
  }
  return out;
}

}  // namespace

MinorIndexSet make_minor_index_set(std::vector<std::size_t> rows, std::size_t m) {
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) throw std::invalid_argument("repeated arc in minor");
  if (!rows.empty() && rows.back() >= 2 * m) throw std::invalid_argument("arc index out of range");
  MinorIndexSet index;
  index.cols.reserve(rows.size());
  for (std::size_t r : rows) index.cols.push_back(r < m ? r + m : r - m);
  index.rows = std::move(rows);
  return index;
}

BinaryMatrix semi_principal_submatrix(const BinaryMatrix& t, const MinorIndexSet& index) {
  const std::size_t q = index.rows.size();
  BinaryMatrix s(q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) s.set(a, b, t(index.rows[a], index.cols[b]));
  }
  return s;
}

BigInt semi_principal_minor_sum(const BinaryMatrix& t, std::size_t k, const BruteForceBounds& bounds) {
  require_within(t.dim(), bounds);
  const std::size_t dim = t.dim();
  const std::size_t m = dim / 2;
  if (k > dim) throw std::out_of_range("minor size exceeds 2m");
  BigInt total = 0;
  for_each_subset(dim, k, [&](const std::vector<std::size_t>& rows) {
    const BinaryMatrix s = semi_principal_submatrix(t, make_minor_index_set(rows, m));
    if (has_zero_row(s)) return;
    total += static_cast<long>(small_determinant(s));
  });
  return total;
}

MinorExpansionReport verify_minor_expansion(const Graph& g, const BruteForceBounds& bounds) {
  const ArcSystem arcs(g);
  require_within(arcs.size(), bounds);
  const BinaryMatrix t = matrix_T(arcs);
  const ReducedZetaResult reduced = reduced_bartholdi_det(g);
  const BigInt sign = g.m() % 2 == 0 ? 1 : -1;

  MinorExpansionReport report;
  for (std::size_t k = 0; k <= arcs.size(); ++k) {
    report.minor_sums.push_back(semi_principal_minor_sum(t, k, bounds));
    report.expected.push_back(sign * reduced.d(k));
    if (!report.first_mismatch && report.minor_sums.back() != report.expected.back()) report.first_mismatch = k;
  }
  return report;
}

MinorStructureReport verify_minor_structure(const ArcSystem& arcs, const BinaryMatrix& t,
                                            const MinorStructureOptions& options) {
  require_within(t.dim(), options.bounds);
  const std::size_t dim = t.dim();
  const std::size_t m = arcs.m();
  MinorStructureReport report;

  const auto fail = [&](bool& flag, const char* name, const std::vector<std::size_t>& subset) {
    if (flag) {
      flag = false;
      if (report.first_failure.empty()) {
        report.first_failure = name;
        report.counterexample = subset;
      }
    }
  };

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == i || !t(i, arcs.inverse(j))) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        if (k == i || k == j || !t(k, arcs.inverse(j))) continue;
        if (!t(i, arcs.inverse(k)) || !t(k, arcs.inverse(i))) {
          fail(report.relative_transitive, "relative_transitive", {i, j, k});
        }
      }
    }
  }

  const auto check = [&](const std::vector<std::size_t>& rows) {
    ++report.subsets_checked;
    const MinorIndexSet index = make_minor_index_set(rows, m);
    const BinaryMatrix s = semi_principal_submatrix(t, index);
    const std::size_t q = s.dim();
    bool permutation = true;
    for (std::size_t a = 0; a < q; ++a) {
      if (s(a, a)) fail(report.symmetric_zero_diagonal, "symmetric_zero_diagonal", index.rows);
      if (s.row_sum(a) != 1) permutation = false;
      for (std::size_t b = 0; b < q; ++b) {
        if (s(a, b) != s(b, a)) fail(report.symmetric_zero_diagonal, "symmetric_zero_diagonal", index.rows);
        const bool shared = a != b && arcs[index.rows[a]].head == arcs[index.rows[b]].head;
        if (s(a, b) != shared) fail(report.sink_star_blocks, "sink_star_blocks", index.rows);
      }
    }
    if (permutation) {
      for (std::size_t b = 0; b < q; ++b) {
        std::size_t col = 0;
        for (std::size_t a = 0; a < q; ++a) col += s(a, b) ? 1 : 0;
        if (col != 1) permutation = false;
      }
    }
    if (q % 2 == 1 && permutation) fail(report.odd_never_permutation, "odd_never_permutation", index.rows);
    if (small_determinant(s) != 0) {
      for (std::size_t a = 0; a < q; ++a) {
        bool partner = false;
        for (std::size_t b = 0; b < q && !partner; ++b) {
          partner = a != b && arcs[index.rows[a]].head == arcs[index.rows[b]].head;
        }
        if (!partner) fail(report.nonzero_needs_shared_heads, "nonzero_needs_shared_heads", index.rows);
      }
    }
  };

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> pool(dim);
  for (std::size_t q = 1; q <= dim; ++q) {
    if (binomial(dim, q) <= options.exhaustive_limit) {
      for_each_subset(dim, q, check);
      continue;
    }
    report.sampled = true;
    for (std::size_t s = 0; s < options.sample_size; ++s) {
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      for (std::size_t i = 0; i < q; ++i) {
        const std::size_t j = i + detail::uniform_below(rng, dim - i);
        std::swap(pool[i], pool[j]);
      }
      std::vector<std::size_t> rows(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(q));
      std::sort(rows.begin(), rows.end());
      check(rows);
    }
  }
  return report;
}

TraceReport verify_trace_identity(const Graph& g, std::size_t k_max, const BruteForceBounds& bounds) {
  const ArcSystem arcs(g);
  require_within(arcs.size(), bounds);
  if (k_max > bounds.max_walk_length) {
    throw BoundExceededError("trace identity needs k <= " + std::to_string(bounds.max_walk_length));
  }
  const std::size_t n = arcs.size();
  const BinaryMatrix t = matrix_T(arcs);
  const BinaryMatrix j = matrix_J(g.m());
  const IntPolynomial u = IntPolynomial::monomial(1, 1);

  PolyMatrix m(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (t(r, c)) m[r * n + c] += IntPolynomial::constant(1);
      if (j(r, c)) m[r * n + c] += u;
    }
  }
  const IntMatrix t_int = t.to_int();

  TraceReport report;
  PolyMatrix power = m;
  IntMatrix t_power = t_int;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) {
      power = poly_multiply(power, m, n);
      t_power = multiply(t_power, t_int);
    }
    TraceRow row;
    row.k = k;
    for (std::size_t i = 0; i < n; ++i) row.trace += power[i * n + i];
    row.walks = closed_walk_bump_poly(arcs, k, bounds);
    row.backtrackless_matches = row.trace.coeff(0) == trace(t_power);
    if (!report.first_mismatch && (row.trace != row.walks || !row.backtrackless_matches)) report.first_mismatch = k;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace bzeta
