#include "bzeta/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace bzeta {

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

Json to_json(const BinaryMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ReducedZetaResult& r) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i <= 2 * r.m; ++i) coeffs.push_back(to_string(r.poly.coeff(i)));
  Json d = Json::object();
  for (std::size_t k = 0; k <= 2 * r.m; ++k) d[std::to_string(k)] = to_string(r.d(k));
  return Json{{"n", r.n},
              {"m", r.m},
              {"method", std::string(to_string(r.method))},
              {"coeffs_ascending", coeffs},
              {"d", d}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const StarCountBreakdown& b) {
  Json rows = Json::array();
  for (const auto& row : b.rows) {
    rows.push_back(Json{{"partition", to_json(row.partition)},
                        {"legal_sets", to_string(row.legal_sets)},
                        {"prototype_det", to_string(row.prototype_det)},
                        {"term", to_string(row.term)}});
  }
  return Json{{"k", b.k},
              {"m", b.m},
              {"partition_count", to_string(b.partition_count)},
              {"rows", rows},
              {"d_k", to_string(b.total)}};
}

Json to_json(const BartholdiEvaluation& e) {
  return Json{{"u", to_string(e.u)},
              {"t", to_string(e.t)},
              {"edge_form", to_string(e.edge_form)},
              {"vertex_form", e.vertex_form ? Json(to_string(*e.vertex_form)) : Json(nullptr)},
              {"agreement", e.agreement}};
}

Json to_json(const StructureReport& r) {
  return Json{{"passed", r.passed()},
              {"off_diagonal_blocks_symmetric", r.off_diagonal_blocks_symmetric},
              {"off_diagonal_blocks_zero_diagonal", r.off_diagonal_blocks_zero_diagonal},
              {"diagonal_blocks_zero_diagonal", r.diagonal_blocks_zero_diagonal},
              {"lower_right_is_transpose", r.lower_right_is_transpose},
              {"transpose_identity", r.transpose_identity},
              {"line_graph_adjacency", r.line_graph_adjacency}};
}

Json to_json(const MinorExpansionReport& r) {
  Json sums = Json::array();
  Json expected = Json::array();
  for (const auto& v : r.minor_sums) sums.push_back(to_string(v));
  for (const auto& v : r.expected) expected.push_back(to_string(v));
  return Json{{"passed", r.passed()},
              {"minor_sums", sums},
              {"expected", expected},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)}};
}

Json to_json(const MinorStructureReport& r) {
  return Json{{"passed", r.passed()},
              {"relative_transitive", r.relative_transitive},
              {"symmetric_zero_diagonal", r.symmetric_zero_diagonal},
              {"odd_never_permutation", r.odd_never_permutation},
              {"nonzero_needs_shared_heads", r.nonzero_needs_shared_heads},
              {"sink_star_blocks", r.sink_star_blocks},
              {"subsets_checked", r.subsets_checked},
              {"sampled", r.sampled},
              {"first_failure", r.first_failure.empty() ? Json(nullptr) : Json(r.first_failure)},
              {"counterexample", r.counterexample}};
}

Json to_json(const TraceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"trace", to_json(row.trace)},
                        {"walks", to_json(row.walks)},
                        {"backtrackless_matches", row.backtrackless_matches}});
  }
  return Json{{"passed", r.passed()},
              {"rows", rows},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)}};
}

std::string to_text(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

std::string to_text(const StarCountBreakdown& b) {
  std::size_t w0 = 9;
  std::size_t w1 = 9;
  std::size_t w2 = 10;
  for (const auto& row : b.rows) {
    w0 = std::max(w0, to_text(row.partition).size());
    w1 = std::max(w1, to_string(row.prototype_det).size());
    w2 = std::max(w2, to_string(row.legal_sets).size());
  }
  std::ostringstream out;
  out << "k = " << b.k << ", m = " << b.m << ", partitions = " << to_string(b.partition_count) << '\n';
  out << std::left << std::setw(static_cast<int>(w0)) << "partition" << "  " << std::right
      << std::setw(static_cast<int>(w1)) << "prototype" << "  " << std::setw(static_cast<int>(w2)) << "legal sets"
      << "  " << "term" << '\n';
  for (const auto& row : b.rows) {
    out << std::left << std::setw(static_cast<int>(w0)) << to_text(row.partition) << "  " << std::right
        << std::setw(static_cast<int>(w1)) << to_string(row.prototype_det) << "  "
        << std::setw(static_cast<int>(w2)) << to_string(row.legal_sets) << "  " << to_string(row.term) << '\n';
  }
  out << "d_" << b.k << " = " << to_string(b.total) << '\n';
  return out.str();
}

}  // namespace bzeta
