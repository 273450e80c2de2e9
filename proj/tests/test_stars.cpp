#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bzeta/stars.hpp"
#include "corpus.hpp"
#include "example_poly.hpp"
#include "oracles.hpp"

using namespace bzeta;

namespace {

std::vector<std::vector<std::size_t>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

BigInt binom(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST_CASE("partition enumeration") {
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(parts_of(partitions_min2(5)) == V{{5}, {3, 2}});
  CHECK(parts_of(partitions_min2(3)) == V{{3}});
  CHECK(parts_of(partitions_min2(7)) == V{{7}, {5, 2}, {4, 3}, {3, 2, 2}});
  CHECK(parts_of(partitions_min2(0)) == V{{}});
  CHECK(partitions_min2(1).empty());
  CHECK(Partition({2, 3}).parts() == std::vector<std::size_t>{3, 2});
  CHECK_THROWS_AS(Partition({3, 1}), std::invalid_argument);

  for (std::size_t k = 0; k <= 16; ++k) {
    const auto brute = testing::brute_partitions(k);
    CHECK(parts_of(partitions_min2(k)) == brute);
    CHECK(count_partitions_min2(k) == static_cast<unsigned long>(brute.size()));
    for (const auto& p : partitions_min2(k)) CHECK(p.k() == k);
  }
  CHECK(count_partitions_min2(40) == 6153);
}

TEST_CASE("feasible partitions") {
  const auto fit = partitions_min2(5, testing::example_degrees());
  CHECK(parts_of(fit) == std::vector<std::vector<std::size_t>>{{5}, {3, 2}});
  CHECK(partitions_min2(6, degree_sequence(testing::complete_graph(3))).size() == 1);
  for (const Graph& g : testing::small_corpus(15, 8)) {
    const DegreeSequence d = degree_sequence(g);
    for (std::size_t k = 0; k <= 2 * g.m(); ++k) {
      const auto feasible = partitions_min2(k, d);
      for (const auto& p : partitions_min2(k)) {
        const bool listed = std::find(feasible.begin(), feasible.end(), p) != feasible.end();
        CHECK(listed == (legal_set_count(d, p) != 0));
      }
    }
  }
}

TEST_CASE("prototype determinants") {
  CHECK(prototype_det(Partition({3})) == 2);
  CHECK(prototype_det(Partition({2, 2})) == 1);
  CHECK(prototype_det(Partition({4})) == -3);
  CHECK(prototype_det(Partition({3, 2})) == -2);
  CHECK(prototype_det(Partition({5})) == 4);
  CHECK(prototype_det(Partition({3, 2, 2})) == 2);
  CHECK(prototype_det(Partition()) == 1);

  const IntMatrix p2 = prototype_matrix(Partition({2}));
  CHECK(p2(0, 1) == 1);
  CHECK(p2(1, 0) == 1);
  CHECK(p2(0, 0) == 0);
  const IntMatrix p22 = prototype_matrix(Partition({2, 2}));
  CHECK(p22.rows() == 4);
  CHECK(p22(0, 2) == 0);
  CHECK(p22(2, 3) == 1);
}

TEST_CASE("prototype determinants survive permutation similarity") {
  std::mt19937_64 rng(31);
  for (std::size_t k = 2; k <= 8; ++k) {
    for (const auto& p : partitions_min2(k)) {
      const IntMatrix m = prototype_matrix(p);
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      IntMatrix similar(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) similar(i, j) = m(perm[i], perm[j]);
      }
      CHECK(testing::cofactor_det(similar) == prototype_det(p));
    }
  }
}

TEST_CASE("sink star and bridge counts") {
  const DegreeSequence& ex = testing::example_degrees();
  const DegreeSequence k3 = degree_sequence(testing::complete_graph(3));
  const DegreeSequence star4({4, 1, 1, 1, 1});
  CHECK(sink_star_count(ex, 5) == 7);
  CHECK(sink_star_count(ex, 2) == 37);
  CHECK(sink_star_count(k3, 2) == 3);
  CHECK_THROWS_AS(sink_star_count(ex, 1), std::invalid_argument);

  CHECK(vertex_bridge_tally(ex).degree_two == 3);
  CHECK(vertex_bridge_tally(ex).high_degree == 34);
  CHECK(vertex_bridge_tally(k3).degree_two == 3);
  CHECK(vertex_bridge_tally(k3).high_degree == 0);
  CHECK(vertex_bridge_tally(star4).degree_two == 0);
  CHECK(vertex_bridge_tally(star4).high_degree == 6);

  CHECK(legal_pair_count(ex) == 498);
  CHECK(legal_pair_count(k3) == 3);
  CHECK(legal_pair_count(DegreeSequence({5, 1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("legal sets") {
  const DegreeSequence& ex = testing::example_degrees();
  CHECK(legal_set_count(ex, Partition({3, 2})) == 868);
  CHECK(legal_set_count(ex, Partition({5})) == 7);
  CHECK(legal_set_count(degree_sequence(testing::complete_graph(3)), Partition({2, 2})) == 3);
  CHECK(legal_set_count(ex, Partition()) == 1);

  for (const Graph& g : testing::small_corpus(30, 7)) {
    const DegreeSequence d = degree_sequence(g);
    for (std::size_t q = 2; q <= d.max(); ++q) CHECK(legal_set_count(d, Partition({q})) == sink_star_count(d, q));
    CHECK(legal_set_count(d, Partition({2, 2})) == legal_pair_count(d));
    for (std::size_t k = 2; k <= std::min<std::size_t>(2 * g.m(), 8); ++k) {
      for (const auto& p : partitions_min2(k)) CHECK(legal_set_count(d, p) == testing::brute_legal_sets(g, p));
    }
  }
}

TEST_CASE("low-order closed forms") {
  const DegreeSequence& ex = testing::example_degrees();
  CHECK(d2_closed(ex) == -37);
  CHECK(d3_closed(ex) == 70);
  CHECK(d4_closed(ex) == 435);
  CHECK_THROWS(d2_closed(DegreeSequence({1, 2})));

  for (const Graph& g : testing::random_corpus()) {
    const DegreeSequence d = degree_sequence(g);
    const ReducedZetaResult r = reduced_bartholdi_det(g);
    const BigInt sign = g.m() % 2 == 0 ? 1 : -1;
    BigInt cubes = 0;
    for (std::size_t v : d.degrees()) cubes += binom(v, 3);
    CHECK(r.d(0) == sign);
    if (g.m() >= 1) CHECK(r.d(1) == 0);
    CHECK(d2_closed(d) == BigInt(-sign * BigInt(line_graph(g).m())));
    CHECK(d3_closed(d) == sign * 2 * cubes);
    if (2 * g.m() >= 2) CHECK(d2_closed(d) == r.d(2));
    if (2 * g.m() >= 3) CHECK(d3_closed(d) == r.d(3));
    if (2 * g.m() >= 4) CHECK(d4_closed(d) == r.d(4));
  }
}

TEST_CASE("coefficient breakdowns") {
  const Graph g = realize_degree_sequence(testing::example_degrees());
  const StarCountBreakdown b = dk_combinatorial(g, 5);
  CHECK(b.k == 5);
  CHECK(b.m == 12);
  CHECK(b.partition_count == 2);
  REQUIRE(b.rows.size() == 2);
  CHECK(b.rows[0].partition == Partition({5}));
  CHECK(b.rows[0].legal_sets == 7);
  CHECK(b.rows[0].prototype_det == 4);
  CHECK(b.rows[0].term == 28);
  CHECK(b.rows[1].partition == Partition({3, 2}));
  CHECK(b.rows[1].legal_sets == 868);
  CHECK(b.rows[1].prototype_det == -2);
  CHECK(b.rows[1].term == -1736);
  CHECK(b.total == -1708);

  const Graph k3 = testing::complete_graph(3);
  const StarCountBreakdown six = dk_combinatorial(k3, 6, true);
  CHECK(six.partition_count == 4);
  CHECK(six.rows.size() == 4);
  CHECK(six.total == 1);
  CHECK(dk_combinatorial(k3, 6).rows.size() == 1);
  CHECK(dk_combinatorial(k3, 0).total == -1);
  CHECK_THROWS_AS(dk_combinatorial(k3, 7), std::out_of_range);
}

TEST_CASE("combinatorial pipeline") {
  CHECK(reduced_poly_combinatorial(testing::complete_graph(3)).poly ==
        IntPolynomial(std::vector<BigInt>{1, 0, -3, 0, 3, 0, -1}));
  CHECK(reduced_poly_combinatorial(testing::path_graph(2)).poly == IntPolynomial::monomial(-1, 2));
  CHECK(reduced_poly_combinatorial(realize_degree_sequence(testing::example_degrees())).poly ==
        testing::example_polynomial());
  for (const Graph& g : testing::random_corpus()) {
    CHECK(reduced_poly_combinatorial(g).poly == reduced_bartholdi_det(g).poly);
  }
}
