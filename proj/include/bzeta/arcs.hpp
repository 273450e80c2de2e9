#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bzeta/graph.hpp"
#include "bzeta/linalg.hpp"
#include "bzeta/polynomial.hpp"

namespace bzeta {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  bool operator==(const Arc&) const = default;
};

// The 2m arcs of the symmetric digraph. Arc i < m is edge i oriented (u, v)
// with u < v; arc i + m is its inverse (v, u).
class ArcSystem {
 public:
  ArcSystem() = default;
  explicit ArcSystem(const Graph& g);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const Arc& operator[](std::size_t a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::size_t inverse(std::size_t a) const noexcept { return a < m_ ? a + m_ : a - m_; }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Arc> arcs_;
};

ArcSystem build_arcs(const Graph& g);

// Square 0/1 matrix indexed by arcs.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t dim) : dim_(dim), bits_(dim * dim, 0) {}

  std::size_t dim() const noexcept { return dim_; }
  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * dim_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool value = true) { bits_[r * dim_ + c] = value ? 1 : 0; }

  BinaryMatrix transpose() const;
  std::size_t row_sum(std::size_t r) const;
  IntMatrix to_int() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Integer product, e.g. J*T.
IntMatrix product(const BinaryMatrix& a, const BinaryMatrix& b);

// T[i][j] = 1 iff head(i) = tail(j) and j is not the inverse of i.
BinaryMatrix matrix_T(const ArcSystem& arcs);
// The inversion pairing i <-> i + m.
BinaryMatrix matrix_J(std::size_t m);
// B[i][j] = 1 iff head(i) = tail(j); equals T + J.
BinaryMatrix matrix_B(const ArcSystem& arcs);

// Rows of 0/1 digits, one line per row.
std::string to_text(const BinaryMatrix& m);

// Block checks of T = [A B; C D] in the arc labeling above.
struct StructureReport {
  bool off_diagonal_blocks_symmetric = false;    // B = B^T, C = C^T
  bool off_diagonal_blocks_zero_diagonal = false;
  bool diagonal_blocks_zero_diagonal = false;    // holds for every loopless graph
  bool lower_right_is_transpose = false;         // D = A^T
  bool transpose_identity = false;               // T^T = J T J
  bool line_graph_adjacency = false;             // A + B + C + A^T = adj(L(G))

  bool passed() const noexcept {
    return off_diagonal_blocks_symmetric && off_diagonal_blocks_zero_diagonal && diagonal_blocks_zero_diagonal &&
           lower_right_is_transpose && transpose_identity && line_graph_adjacency;
  }
};

StructureReport check_structure(const Graph& g, const BinaryMatrix& t, const BinaryMatrix& j);

struct BruteForceBounds {
  std::size_t max_arcs = 16;
  std::size_t max_walk_length = 8;
};

// Sum over closed arc walks of length k of u^(cyclic bump count).
// Throws BoundExceededError when 2m or k exceed the bounds.
IntPolynomial closed_walk_bump_poly(const ArcSystem& arcs, std::size_t k, const BruteForceBounds& bounds = {});

}  // namespace bzeta

namespace bzeta {

// True iff (J T)[i][j] = 1 exactly when i != j and tail(i) = tail(j), i.e.
// J T is block diagonal by tail vertex with (all-ones - identity) blocks.
bool has_tail_block_structure(const ArcSystem& arcs, const IntMatrix& jt);

}  // namespace bzeta
