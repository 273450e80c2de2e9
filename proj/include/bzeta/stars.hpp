#pragma once

#include <cstddef>
#include <vector>

#include "bzeta/graph.hpp"
#include "bzeta/linalg.hpp"
#include "bzeta/zeta.hpp"

namespace bzeta {

// Non-increasing parts, each >= 2. The empty partition stands for k = 0.
class Partition {
 public:
  Partition() = default;
  // Sorts into non-increasing order; throws std::invalid_argument on a part < 2.
  explicit Partition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t k() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<std::size_t> parts_;
};

// All partitions of k into parts >= 2, lexicographically descending:
// k = 7 gives (7), (5,2), (4,3), (3,2,2). k = 0 gives the empty partition,
// k = 1 gives nothing.
std::vector<Partition> partitions_min2(std::size_t k);

// Only partitions that fit a degree sequence: sorting both descending, the
// i-th part may not exceed the i-th degree. Exactly the partitions with a
// nonzero legal-set count.
std::vector<Partition> partitions_min2(std::size_t k, const DegreeSequence& fit);

// Number of partitions of k into parts >= 2.
BigInt count_partitions_min2(std::size_t k);

// Block diagonal, one (all-ones - identity) block per part.
IntMatrix prototype_matrix(const Partition& p);

// Direct determinant of prototype_matrix(p), checked against
// prod_i (-1)^(c_i - 1) (c_i - 1). Results are memoized.
BigInt prototype_det(const Partition& p);

// sum over vertices of C(d(v), q); q >= 2.
BigInt sink_star_count(const DegreeSequence& d, std::size_t q);

struct BridgeTally {
  BigInt degree_two;               // vertices of degree exactly 2
  BigInt high_degree;              // sum of C(d, 2) over d >= 3
  std::vector<BigInt> per_vertex;  // C(d(v), 2) when d(v) >= 3, else 0
};

BridgeTally vertex_bridge_tally(const DegreeSequence& d);

// Pairs of vertex bridges with distinct sinks.
BigInt legal_pair_count(const DegreeSequence& d);

// Unordered collections of sink stars, one per part, with pairwise distinct
// sinks; a c-leaf star at v can be chosen in C(d(v), c) ways. Dynamic
// programming over vertices counts ordered tuples, which are then divided by
// the multiplicity factorials of repeated parts.
BigInt legal_set_count(const DegreeSequence& d, const Partition& p);

// Closed forms for d_2, d_3, d_4. m is taken as half the degree sum.
BigInt d2_closed(const DegreeSequence& d);
BigInt d3_closed(const DegreeSequence& d);
BigInt d4_closed(const DegreeSequence& d);

struct StarCountRow {
  Partition partition;
  BigInt legal_sets;
  BigInt prototype_det;
  BigInt term;  // legal_sets * prototype_det
};

struct StarCountBreakdown {
  std::size_t k = 0;
  std::size_t m = 0;
  BigInt partition_count;  // all partitions of k into parts >= 2
  std::vector<StarCountRow> rows;
  BigInt total;            // d_k = (-1)^m * sum of terms
};

// Throws std::out_of_range unless k <= 2m. Rows cover the partitions that fit
// the degree sequence; include_zero_rows lists every partition of k.
StarCountBreakdown dk_combinatorial(const Graph& g, std::size_t k, bool include_zero_rows = false);

ReducedZetaResult reduced_poly_combinatorial(const Graph& g);

}  // namespace bzeta
