#include "bzeta/arcs.hpp"

#include <sstream>

#include "bzeta/errors.hpp"

namespace bzeta {

ArcSystem::ArcSystem(const Graph& g) : n_(g.n()), m_(g.m()) {
  arcs_.reserve(2 * m_);
  for (const auto& e : g.edges()) arcs_.push_back({e.u, e.v});
  for (const auto& e : g.edges()) arcs_.push_back({e.v, e.u});
}

ArcSystem build_arcs(const Graph& g) { return ArcSystem(g); }

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix result(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) result.set(c, r, (*this)(r, c));
  }
  return result;
}

std::size_t BinaryMatrix::row_sum(std::size_t r) const {
  std::size_t sum = 0;
  for (std::size_t c = 0; c < dim_; ++c) sum += (*this)(r, c) ? 1 : 0;
  return sum;
}

IntMatrix BinaryMatrix::to_int() const {
  IntMatrix result(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if ((*this)(r, c)) result(r, c) = 1;
    }
  }
  return result;
}

IntMatrix product(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("product: dimension mismatch");
  const std::size_t n = a.dim();
  IntMatrix result(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (!a(i, l)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(l, j)) result(i, j) += 1;
      }
    }
  }
  return result;
}

BinaryMatrix matrix_T(const ArcSystem& arcs) {
  BinaryMatrix t(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (arcs[i].head == arcs[j].tail && j != arcs.inverse(i)) t.set(i, j);
    }
  }
  return t;
}

BinaryMatrix matrix_J(std::size_t m) {
  BinaryMatrix j(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j.set(i, i + m);
    j.set(i + m, i);
  }
  return j;
}

BinaryMatrix matrix_B(const ArcSystem& arcs) {
  BinaryMatrix b(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (arcs[i].head == arcs[j].tail) b.set(i, j);
    }
  }
  return b;
}

std::string to_text(const BinaryMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out << (m(r, c) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

StructureReport check_structure(const Graph& g, const BinaryMatrix& t, const BinaryMatrix& j) {
  const std::size_t m = g.m();
  if (t.dim() != 2 * m || j.dim() != 2 * m) throw std::invalid_argument("check_structure: dimension mismatch");

  StructureReport report;
  report.off_diagonal_blocks_symmetric = true;
  report.off_diagonal_blocks_zero_diagonal = true;
  report.diagonal_blocks_zero_diagonal = true;
  report.lower_right_is_transpose = true;
  for (std::size_t a = 0; a < m; ++a) {
    if (t(a, a + m) || t(a + m, a)) report.off_diagonal_blocks_zero_diagonal = false;
    if (t(a, a) || t(a + m, a + m)) report.diagonal_blocks_zero_diagonal = false;
    for (std::size_t b = 0; b < m; ++b) {
      if (t(a, b + m) != t(b, a + m) || t(a + m, b) != t(b + m, a)) report.off_diagonal_blocks_symmetric = false;
      if (t(a + m, b + m) != t(b, a)) report.lower_right_is_transpose = false;
    }
  }

  const IntMatrix jtj = multiply(product(j, t), j.to_int());
  report.transpose_identity = jtj == t.transpose().to_int();

  const Graph lg = line_graph(g);
  BinaryMatrix adjacency(m);
  for (const auto& e : lg.edges()) {
    adjacency.set(e.u, e.v);
    adjacency.set(e.v, e.u);
  }
  report.line_graph_adjacency = true;
  for (std::size_t a = 0; a < m && report.line_graph_adjacency; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const int sum = int(t(a, b)) + int(t(a, b + m)) + int(t(a + m, b)) + int(t(b, a));
      if (sum != (adjacency(a, b) ? 1 : 0)) {
        report.line_graph_adjacency = false;
        break;
      }
    }
  }
  return report;
}

namespace {

struct WalkCounter {
  const ArcSystem& arcs;
  const std::vector<std::vector<std::size_t>>& out_arcs;  // arcs leaving each vertex
  std::size_t length;
  std::vector<std::size_t> walk;
  std::vector<BigInt>& by_bumps;

  void extend() {
    const std::size_t last = walk.back();
    if (walk.size() == length) {
      if (arcs[last].head != arcs[walk.front()].tail) return;
      std::size_t bumps = 0;
      for (std::size_t i = 0; i < length; ++i) {
        if (walk[(i + 1) % length] == arcs.inverse(walk[i])) ++bumps;
      }
      by_bumps[bumps] += 1;
      return;
    }
    for (std::size_t next : out_arcs[arcs[last].head]) {
      walk.push_back(next);
      extend();
      walk.pop_back();
    }
  }
};

}  // namespace

IntPolynomial closed_walk_bump_poly(const ArcSystem& arcs, std::size_t k, const BruteForceBounds& bounds) {
  if (k == 0) throw std::invalid_argument("closed_walk_bump_poly: k must be at least 1");
  if (arcs.size() > bounds.max_arcs || k > bounds.max_walk_length) {
    throw BoundExceededError("closed-walk enumeration needs 2m <= " + std::to_string(bounds.max_arcs) +
                             " and k <= " + std::to_string(bounds.max_walk_length) + " (got 2m = " +
                             std::to_string(arcs.size()) + ", k = " + std::to_string(k) + ")");
  }
  std::vector<std::vector<std::size_t>> out_arcs(arcs.n());
  for (std::size_t a = 0; a < arcs.size(); ++a) out_arcs[arcs[a].tail].push_back(a);

  std::vector<BigInt> by_bumps(k + 1);
  WalkCounter counter{arcs, out_arcs, k, {}, by_bumps};
  for (std::size_t start = 0; start < arcs.size(); ++start) {
    counter.walk = {start};
    counter.extend();
  }
  return IntPolynomial(std::move(by_bumps));
}

}  // namespace bzeta

namespace bzeta {

bool has_tail_block_structure(const ArcSystem& arcs, const IntMatrix& jt) {
  if (jt.rows() != arcs.size() || jt.cols() != arcs.size()) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      const bool expected = i != j && arcs[i].tail == arcs[j].tail;
      if (jt(i, j) != (expected ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace bzeta
