#include "bzeta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include "bzeta/arcs.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/graph.hpp"
#include "bzeta/oracle.hpp"
#include "bzeta/serialize.hpp"
#include "bzeta/stars.hpp"
#include "bzeta/zeta.hpp"

namespace bzeta::cli {

namespace {

struct RunConfig {
  std::string input;
  std::string degrees;
  std::string method = "det";
  std::string format = "text";
  std::string level = "quick";
  std::string which = "T";
  std::string u = "0";
  std::string t = "0";
  std::string p = "1/2";
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t swaps = 0;
  bool all_partitions = false;
  bool require_all = false;
  bool shuffle = false;
};

struct LoadedGraph {
  Graph graph;
  std::string kind;  // "edge_list" or "degree_sequence"
};

LoadedGraph load_graph(const RunConfig& config) {
  if (!config.input.empty() && !config.degrees.empty()) throw InputError("give either --input or --degrees, not both");
  if (!config.degrees.empty()) {
    return {realize_degree_sequence(parse_degree_list(config.degrees)), "degree_sequence"};
  }
  if (config.input.empty()) throw InputError("one of --input or --degrees is required");
  if (config.input == "-") return {parse_edge_list(std::cin), "edge_list"};
  return {read_edge_list_file(config.input), "edge_list"};
}

void warn_md2(const Graph& g, std::ostream& err) {
  const DegreeSequence d = degree_sequence(g);
  if (d.size() > 0 && d.min() < 2) {
    err << "warning: graph has vertices of degree < 2; the zeta-function interpretation assumes minimum degree 2\n";
  }
}

void add_input_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--input", config.input, "Edge-list file ('-' for stdin)");
  cmd->add_option("--degrees", config.degrees, "Degree sequence, realized by Havel-Hakimi (e.g. 2,2,2,3)");
}

void add_format_option(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_reduced(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedGraph loaded = load_graph(config);
  const Graph& g = loaded.graph;
  warn_md2(g, err);

  std::vector<ReducedZetaResult> results;
  if (config.method == "det" || config.method == "all") results.push_back(reduced_bartholdi_det(g));
  if (config.method == "stars" || config.method == "all") results.push_back(reduced_poly_combinatorial(g));
  if (config.method == "product" || config.method == "all") results.push_back(reduced_bartholdi_product(g));

  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].poly == results[0].poly) continue;
    for (std::size_t k = 0; k <= 2 * g.m(); ++k) {
      if (results[i].d(k) != results[0].d(k)) {
        err << "error: pipelines disagree at d_" << k << ": " << to_string(results[0].method) << " = "
            << to_string(results[0].d(k)) << ", " << to_string(results[i].method) << " = "
            << to_string(results[i].d(k)) << '\n';
        break;
      }
    }
    return kExitVerification;
  }

  const ReducedZetaResult& result = results.front();
  if (config.format == "json") {
    Json j{{"input_kind", loaded.kind}};
    j.update(to_json(result));
    if (config.method == "all") {
      j["method"] = "all";
      Json methods = Json::array();
      for (const auto& r : results) methods.push_back(std::string(to_string(r.method)));
      j["methods"] = methods;
      j["agreement"] = true;
    }
    emit(out, j);
  } else {
    out << result.poly.to_text("u") << '\n';
  }
  return kExitOk;
}

int cmd_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedGraph loaded = load_graph(config);
  warn_md2(loaded.graph, err);
  if (config.k > 2 * loaded.graph.m()) {
    throw InputError("k = " + std::to_string(config.k) + " outside [0, " + std::to_string(2 * loaded.graph.m()) + "]");
  }
  const StarCountBreakdown b = dk_combinatorial(loaded.graph, config.k, config.all_partitions);
  if (config.format == "json") {
    Json j{{"input_kind", loaded.kind}};
    j.update(to_json(b));
    emit(out, j);
  } else {
    out << to_text(b);
  }
  return kExitOk;
}

int cmd_ihara(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedGraph loaded = load_graph(config);
  warn_md2(loaded.graph, err);
  const IntPolynomial poly = ihara_reciprocal(loaded.graph);
  if (config.format == "json") {
    emit(out, Json{{"input_kind", loaded.kind},
                   {"n", loaded.graph.n()},
                   {"m", loaded.graph.m()},
                   {"coeffs_ascending", to_json(poly)}});
  } else {
    out << poly.to_text("t") << '\n';
  }
  return kExitOk;
}

int cmd_bartholdi_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedGraph loaded = load_graph(config);
  warn_md2(loaded.graph, err);
  const Rational u = parse_rational(config.u);
  const Rational t = parse_rational(config.t);
  const BartholdiEvaluation eval = bartholdi_evaluate(loaded.graph, u, t);
  if (config.format == "json") {
    emit(out, to_json(eval));
  } else {
    out << "edge form:   " << to_string(eval.edge_form) << '\n';
    out << "vertex form: " << (eval.vertex_form ? to_string(*eval.vertex_form) : std::string("pole")) << '\n';
  }
  if (eval.vertex_form && !eval.agreement) {
    err << "error: vertex and edge forms disagree\n";
    return kExitVerification;
  }
  return kExitOk;
}

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail, skipped
  Json detail;
};

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const LoadedGraph loaded = load_graph(config);
  const Graph& g = loaded.graph;
  const bool deep = config.level == "deep";
  BruteForceBounds bounds;
  if (!deep) bounds = BruteForceBounds{12, 4};
  const std::size_t points = deep ? 20 : 5;

  std::vector<CheckResult> checks;
  const auto record = [&](std::string name, bool ok, Json detail = Json::object()) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };
  const auto skip = [&](std::string name, const std::string& why) {
    checks.push_back({std::move(name), "skipped", Json{{"reason", why}}});
  };

  const ArcSystem arcs(g);
  const BinaryMatrix t = matrix_T(arcs);
  const BinaryMatrix j = matrix_J(g.m());
  const StructureReport structure = check_structure(g, t, j);
  record("structure", structure.passed(), to_json(structure));
  record("jt_tail_blocks", has_tail_block_structure(arcs, product(j, t)));
  record("t_plus_j_is_b", [&] {
    const BinaryMatrix b = matrix_B(arcs);
    for (std::size_t r = 0; r < arcs.size(); ++r) {
      for (std::size_t c = 0; c < arcs.size(); ++c) {
        if (b(r, c) != (t(r, c) || j(r, c)) || (t(r, c) && j(r, c))) return false;
      }
    }
    return true;
  }());

  const ReducedZetaResult det = reduced_bartholdi_det(g);
  const ReducedZetaResult prod = reduced_bartholdi_product(g);
  const ReducedZetaResult stars = reduced_poly_combinatorial(g);
  record("pipeline_agreement", det.poly == prod.poly && det.poly == stars.poly);

  const DegreeSequence d = degree_sequence(g);
  const BigInt sign = g.m() % 2 == 0 ? 1 : -1;
  const auto d_or_zero = [&](std::size_t k) { return k <= 2 * g.m() ? det.d(k) : BigInt(0); };
  record("closed_forms", det.d(0) == sign && d_or_zero(1) == 0 && d_or_zero(2) == d2_closed(d) &&
                             d_or_zero(3) == d3_closed(d) && d_or_zero(4) == d4_closed(d));

  if (arcs.size() <= bounds.max_arcs) {
    const MinorExpansionReport minors = verify_minor_expansion(g, bounds);
    record("minor_expansion", minors.passed(), to_json(minors));
    MinorStructureOptions options;
    options.bounds = bounds;
    options.seed = config.seed;
    const MinorStructureReport ms = verify_minor_structure(arcs, t, options);
    record("minor_structure", ms.passed(), to_json(ms));
    const TraceReport trace = verify_trace_identity(g, bounds.max_walk_length, bounds);
    record("trace_identity", trace.passed(), to_json(trace));
  } else {
    const std::string why = "2m = " + std::to_string(arcs.size()) + " exceeds " + std::to_string(bounds.max_arcs);
    skip("minor_expansion", why);
    skip("minor_structure", why);
    skip("trace_identity", why);
  }

  bool forms_ok = true;
  std::size_t evaluated = 0;
  const IntPolynomial ihara = ihara_reciprocal(g);
  for (const auto& [u, tv] : sample_evaluation_points(points, config.seed)) {
    const BartholdiEvaluation e = bartholdi_evaluate(g, u, tv);
    if (e.vertex_form) {
      ++evaluated;
      forms_ok = forms_ok && e.agreement;
    }
    forms_ok = forms_ok && bartholdi_edge_eval(g, 0, tv) == ihara.evaluate(tv);
  }
  record("bartholdi_forms", forms_ok, Json{{"points", points}, {"vertex_form_defined", evaluated}});

  const bool any_fail = std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == "fail"; });
  const bool any_skip =
      std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == "skipped"; });

  if (config.format == "json") {
    Json list = Json::object();
    for (const auto& c : checks) {
      Json entry{{"status", c.status}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      list[c.name] = entry;
    }
    emit(out, Json{{"input_kind", loaded.kind},
                   {"n", g.n()},
                   {"m", g.m()},
                   {"level", config.level},
                   {"passed", !any_fail},
                   {"checks", list}});
  } else {
    for (const auto& c : checks) {
      out << c.status << "  " << c.name;
      if (c.status == "skipped") out << " (" << c.detail["reason"].get<std::string>() << ")";
      out << '\n';
    }
  }
  if (any_fail) {
    err << "error: verification failed\n";
    return kExitVerification;
  }
  if (any_skip && config.require_all) {
    err << "error: some checks exceed the brute-force bounds\n";
    return kExitBound;
  }
  return kExitOk;
}

void emit_graph(const RunConfig& config, const Graph& g, std::ostream& out) {
  if (config.format == "json") {
    emit(out, to_json(g));
  } else {
    out << serialize_edge_list(g);
  }
}

int cmd_realize(const RunConfig& config, std::ostream& out) {
  if (config.degrees.empty()) throw InputError("--degrees is required");
  const DegreeSequence d = parse_degree_list(config.degrees);
  emit_graph(config, config.shuffle ? random_realization(d, config.seed, config.swaps) : realize_degree_sequence(d),
             out);
  return kExitOk;
}

int cmd_random(const RunConfig& config, std::ostream& out) {
  emit_graph(config, random_graph(config.n, parse_rational(config.p), config.seed), out);
  return kExitOk;
}

int cmd_matrices(const RunConfig& config, std::ostream& out) {
  const LoadedGraph loaded = load_graph(config);
  const ArcSystem arcs(loaded.graph);
  BinaryMatrix m;
  if (config.which == "T") {
    m = matrix_T(arcs);
  } else if (config.which == "J") {
    m = matrix_J(arcs.m());
  } else {
    m = matrix_B(arcs);
  }
  if (config.format == "json") {
    Json arc_list = Json::array();
    for (const auto& a : arcs.arcs()) arc_list.push_back({a.tail, a.head});
    emit(out, Json{{"which", config.which}, {"arcs", arc_list}, {"matrix", to_json(m)}});
  } else {
    out << to_text(m);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact reduced Bartholdi zeta polynomials of simple graphs", "bzeta"};
  app.require_subcommand(1);

  auto* reduced = app.add_subcommand("reduced", "Reduced Bartholdi polynomial det(T + uJ)");
  add_input_options(reduced, config);
  add_format_option(reduced, config);
  reduced->add_option("--method", config.method, "Pipeline")
      ->check(CLI::IsMember({"det", "stars", "product", "all"}));

  auto* coeffs = app.add_subcommand("coeffs", "Star-counting breakdown of one coefficient d_k");
  add_input_options(coeffs, config);
  add_format_option(coeffs, config);
  coeffs->add_option("-k,--k", config.k, "Coefficient index")->required();
  coeffs->add_flag("--all-partitions", config.all_partitions, "List partitions with zero legal sets too");

  auto* ihara = app.add_subcommand("ihara", "Reciprocal Ihara zeta det(I - tT)");
  add_input_options(ihara, config);
  add_format_option(ihara, config);

  auto* bartholdi = app.add_subcommand("bartholdi-eval", "Evaluate the reciprocal Bartholdi zeta at rational (u, t)");
  add_input_options(bartholdi, config);
  add_format_option(bartholdi, config);
  bartholdi->add_option("--u", config.u, "Rational u, e.g. 1/2")->required();
  bartholdi->add_option("--t", config.t, "Rational t")->required();

  auto* verify = app.add_subcommand("verify", "Run structural, brute-force and cross-pipeline checks");
  add_input_options(verify, config);
  add_format_option(verify, config);
  verify->add_option("--level", config.level, "quick or deep")->check(CLI::IsMember({"quick", "deep"}));
  verify->add_option("--seed", config.seed, "Seed for sampled checks");
  verify->add_flag("--require-all", config.require_all, "Exit 3 when a check is skipped for exceeding its bound");

  auto* realize = app.add_subcommand("realize", "Realize a degree sequence as a simple graph");
  realize->add_option("--degrees", config.degrees, "Degree sequence")->required();
  add_format_option(realize, config);
  auto* seed_opt = realize->add_option("--seed", config.seed, "Randomize the realization with degree-preserving swaps");
  realize->add_option("--swaps", config.swaps, "Number of swap attempts (default 10m)");

  auto* random = app.add_subcommand("random", "Seeded Erdos-Renyi graph");
  random->add_option("--n", config.n, "Vertex count")->required();
  random->add_option("--p", config.p, "Edge probability as a rational");
  random->add_option("--seed", config.seed, "Generator seed");
  add_format_option(random, config);

  auto* matrices = app.add_subcommand("matrices", "Print T, J or B");
  add_input_options(matrices, config);
  add_format_option(matrices, config);
  matrices->add_option("--which", config.which, "T, J or B")->check(CLI::IsMember({"T", "J", "B"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  config.shuffle = seed_opt->count() > 0;

  try {
    if (reduced->parsed()) return cmd_reduced(config, out, err);
    if (coeffs->parsed()) return cmd_coeffs(config, out, err);
    if (ihara->parsed()) return cmd_ihara(config, out, err);
    if (bartholdi->parsed()) return cmd_bartholdi_eval(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (realize->parsed()) return cmd_realize(config, out);
    if (random->parsed()) return cmd_random(config, out);
    if (matrices->parsed()) return cmd_matrices(config, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BoundExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const ExactnessError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace bzeta::cli
