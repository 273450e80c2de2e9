#include "bzeta/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bzeta/errors.hpp"
#include "detail/rng.hpp"

namespace bzeta {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  const std::string where = "line " + std::to_string(line_no) + ": ";
  if (!token.empty() && token.front() == '-') {
    throw InputError(where + "negative vertex index '" + std::string(token) + "'");
  }
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError(where + "malformed token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") exceeds vertex count " +
                       std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + ")");
  }
}

std::size_t DegreeSequence::sum() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
}

std::size_t DegreeSequence::max() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t DegreeSequence::min() const noexcept {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t header_n = 0;
  bool has_header = false;
  bool seen_content = false;
  std::size_t needed = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (tokens.front() == "n") {
      if (seen_content) throw InputError(where + "header must precede all edges");
      if (tokens.size() != 2) throw InputError(where + "header must be 'n <count>'");
      header_n = parse_index(tokens[1], line_no);
      has_header = true;
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) throw InputError(where + "expected '<u> <v>'");
    Edge e{parse_index(tokens[0], line_no), parse_index(tokens[1], line_no)};
    if (e.u == e.v) throw InputError(where + "self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(e).second) {
      throw InputError(where + "duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    needed = std::max(needed, e.v + 1);
    edges.push_back(e);
  }

  if (has_header && header_n < needed) {
    throw InputError("header declares " + std::to_string(header_n) + " vertices but index " +
                     std::to_string(needed - 1) + " is used");
  }
  return Graph(has_header ? header_n : needed, std::move(edges));
}

Graph parse_edge_list(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_edge_list(std::string_view(text));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DegreeSequence parse_degree_list(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::vector<std::size_t> degrees;
  for (const auto token : split_ws(normalized)) degrees.push_back(parse_index(token, 1));
  return DegreeSequence(std::move(degrees));
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.n(), 0);
  for (const auto& e : g.edges()) {
    ++degrees[e.u];
    ++degrees[e.v];
  }
  return DegreeSequence(std::move(degrees));
}

Graph realize_degree_sequence(const DegreeSequence& d) {
  const std::size_t n = d.size();
  if (d.sum() % 2 != 0) throw NonGraphicalError("non-graphical: degree sum is odd", 0);

  std::vector<std::size_t> sorted = d.degrees();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::size_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += sorted[k - 1];
    std::size_t rhs = k * (k - 1);
    for (std::size_t i = k; i < n; ++i) rhs += std::min(sorted[i], k);
    if (prefix > rhs) {
      throw NonGraphicalError("non-graphical: Erdos-Gallai inequality fails at k=" + std::to_string(k) + " (" +
                                  std::to_string(prefix) + " > " + std::to_string(rhs) + ")",
                              k);
    }
  }

  std::vector<std::size_t> remaining = d.degrees();
  std::vector<Edge> edges;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  const auto by_remaining = [&](Vertex a, Vertex b) {
    return remaining[a] != remaining[b] ? remaining[a] > remaining[b] : a < b;
  };
  while (true) {
    if (order.empty()) break;
    std::sort(order.begin(), order.end(), by_remaining);
    const Vertex hub = order.front();
    const std::size_t need = remaining[hub];
    if (need == 0) break;
    if (need >= n || remaining[order[need]] == 0) {
      throw ExactnessError("Havel-Hakimi stalled on a sequence that passed Erdos-Gallai");
    }
    for (std::size_t i = 1; i <= need; ++i) {
      edges.push_back({hub, order[i]});
      --remaining[order[i]];
    }
    remaining[hub] = 0;
  }
  return Graph(n, std::move(edges));
}

Graph random_realization(const DegreeSequence& d, std::uint64_t seed, std::size_t swaps) {
  Graph base = realize_degree_sequence(d);
  std::vector<Edge> edges = base.edges();
  if (edges.size() < 2) return base;
  if (swaps == 0) swaps = 10 * edges.size();

  std::set<Edge> present(edges.begin(), edges.end());
  std::mt19937_64 rng(seed);
  const auto norm = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  for (std::size_t s = 0; s < swaps; ++s) {
    const auto i = detail::uniform_below(rng, edges.size());
    const auto j = detail::uniform_below(rng, edges.size());
    if (i == j) continue;
    const Edge a = edges[i];
    const Edge b = edges[j];
    // Two rewirings of {a.u a.v} {b.u b.v}; the coin picks which one to try.
    Edge x;
    Edge y;
    if (detail::uniform_below(rng, 2) == 0) {
      x = norm(a.u, b.v);
      y = norm(b.u, a.v);
    } else {
      x = norm(a.u, b.u);
      y = norm(a.v, b.v);
    }
    if (x.u == x.v || y.u == y.v || x == y || present.count(x) || present.count(y)) continue;
    present.erase(a);
    present.erase(b);
    present.insert(x);
    present.insert(y);
    edges[i] = x;
    edges[j] = y;
  }
  return Graph(base.n(), std::move(edges));
}

Graph random_graph(std::size_t n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw InputError("edge probability " + to_string(p) + " is outside [0, 1]");
  const BigInt& num = p.get_num();
  const BigInt& den = p.get_den();
  if (mpz_fits_ulong_p(den.get_mpz_t()) == 0) throw InputError("edge probability denominator exceeds 64 bits");
  const std::uint64_t threshold = num.get_ui();
  const std::uint64_t modulus = den.get_ui();

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (detail::uniform_below(rng, modulus) < threshold) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph line_graph(const Graph& g) {
  std::vector<std::vector<std::size_t>> incident(g.n());
  for (std::size_t i = 0; i < g.m(); ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  // Two distinct edges of a simple graph share at most one endpoint, so no pair repeats.
  std::vector<Edge> edges;
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.push_back({list[a], list[b]});
    }
  }
  return Graph(g.m(), std::move(edges));
}

}  // namespace bzeta
