#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bzeta/arcs.hpp"
#include "bzeta/graph.hpp"
#include "bzeta/linalg.hpp"
#include "bzeta/polynomial.hpp"

namespace bzeta {

// Rows alpha (ascending) and columns alpha' = inverse image of alpha, in the
// paired order: column a of the minor is the inverse of row a.
struct MinorIndexSet {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

MinorIndexSet make_minor_index_set(std::vector<std::size_t> rows, std::size_t m);

// Semi-principal minor matrix S[alpha; alpha'] of T.
BinaryMatrix semi_principal_submatrix(const BinaryMatrix& t, const MinorIndexSet& index);

// Sum over all k-subsets alpha of det S[alpha; alpha']. The empty minor is 1.
// Throws BoundExceededError when dim(T) > bounds.max_arcs.
BigInt semi_principal_minor_sum(const BinaryMatrix& t, std::size_t k, const BruteForceBounds& bounds = {});

struct MinorExpansionReport {
  std::vector<BigInt> minor_sums;  // index k
  std::vector<BigInt> expected;    // (-1)^m d_k from the determinant pipeline
  std::optional<std::size_t> first_mismatch;

  bool passed() const noexcept { return !first_mismatch.has_value(); }
};

// Compares every minor sum with (-1)^m d_k.
MinorExpansionReport verify_minor_expansion(const Graph& g, const BruteForceBounds& bounds = {});

struct MinorStructureOptions {
  BruteForceBounds bounds;
  std::uint64_t exhaustive_limit = 100000;  // largest C(2m, q) enumerated exhaustively
  std::size_t sample_size = 10000;          // subsets per q otherwise
  std::uint64_t seed = 1;
};

struct MinorStructureReport {
  bool relative_transitive = true;
  bool symmetric_zero_diagonal = true;
  bool odd_never_permutation = true;
  bool nonzero_needs_shared_heads = true;
  bool sink_star_blocks = true;  // S[a][b] = 1 iff a != b and the arcs share a head
  std::size_t subsets_checked = 0;
  bool sampled = false;
  std::string first_failure;
  std::vector<std::size_t> counterexample;  // arc subset of the first failure

  bool passed() const noexcept {
    return relative_transitive && symmetric_zero_diagonal && odd_never_permutation && nonzero_needs_shared_heads &&
           sink_star_blocks;
  }
};

MinorStructureReport verify_minor_structure(const ArcSystem& arcs, const BinaryMatrix& t,
                                            const MinorStructureOptions& options = {});

struct TraceRow {
  std::size_t k = 0;
  IntPolynomial trace;  // tr((T + uJ)^k)
  IntPolynomial walks;  // closed_walk_bump_poly(k)
  bool backtrackless_matches = false;  // trace at u = 0 equals tr(T^k)
};

struct TraceReport {
  std::vector<TraceRow> rows;
  std::optional<std::size_t> first_mismatch;

  bool passed() const noexcept { return !first_mismatch.has_value(); }
};

TraceReport verify_trace_identity(const Graph& g, std::size_t k_max, const BruteForceBounds& bounds = {});

}  // namespace bzeta
