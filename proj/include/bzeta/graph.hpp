#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bzeta/linalg.hpp"

namespace bzeta {

using Vertex = std::size_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on vertices 0..n-1. Edges are kept in
// canonical form: u < v, sorted lexicographically, no duplicates.
class Graph {
 public:
  Graph() = default;

  // Orients each pair as (min, max) and sorts. Throws InputError on
  // self-loops, duplicate edges, or endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {}

  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  std::size_t operator[](std::size_t i) const { return degrees_[i]; }
  std::size_t sum() const noexcept;
  std::size_t max() const noexcept;
  std::size_t min() const noexcept;

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<std::size_t> degrees_;
};

// Edge-list text: '#' comments, optional "n <count>" header, "<u> <v>" lines.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Canonical text form with an "n <count>" header.
std::string serialize_edge_list(const Graph& g);

// "2,2,2,3" or "2 2 2 3".
DegreeSequence parse_degree_list(std::string_view text);

DegreeSequence degree_sequence(const Graph& g);

// Deterministic Havel-Hakimi: the highest unsatisfied vertex joins the next
// highest ones, ties broken by lower index. Vertex i receives degree d[i].
// Throws NonGraphicalError naming the violated Erdos-Gallai inequality.
Graph realize_degree_sequence(const DegreeSequence& d);

// Havel-Hakimi followed by seeded degree-preserving double-edge swaps.
Graph random_realization(const DegreeSequence& d, std::uint64_t seed, std::size_t swaps = 0);

// Erdos-Renyi G(n, p). Each pair (u < v), in lexicographic order, is kept when
// a uniform draw from [0, den(p)) is below num(p). The generator is
// std::mt19937_64 with rejection sampling, so output is bit-reproducible.
Graph random_graph(std::size_t n, const Rational& p, std::uint64_t seed);

// Vertex i of the result is edge i of g.
Graph line_graph(const Graph& g);

}  // namespace bzeta
