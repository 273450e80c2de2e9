#pragma once

#include <string>

#include <json.hpp>

#include "bzeta/arcs.hpp"
#include "bzeta/graph.hpp"
#include "bzeta/oracle.hpp"
#include "bzeta/polynomial.hpp"
#include "bzeta/stars.hpp"
#include "bzeta/zeta.hpp"

namespace bzeta {

// Keys keep insertion order so output is stable across runs.
using Json = nlohmann::ordered_json;

// Ascending coefficients as decimal strings.
Json to_json(const IntPolynomial& p);
Json to_json(const Graph& g);
Json to_json(const BinaryMatrix& m);
// {"n", "m", "method", "coeffs_ascending", "d": {"0": ..., "1": ...}}
Json to_json(const ReducedZetaResult& r);
Json to_json(const Partition& p);
Json to_json(const StarCountBreakdown& b);
Json to_json(const BartholdiEvaluation& e);
Json to_json(const StructureReport& r);
Json to_json(const MinorExpansionReport& r);
Json to_json(const MinorStructureReport& r);
Json to_json(const TraceReport& r);

// "(3,2)"
std::string to_text(const Partition& p);
// Table with partition, prototype determinant, legal-set count and term columns.
std::string to_text(const StarCountBreakdown& b);

}  // namespace bzeta
