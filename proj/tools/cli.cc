#include "cli.h"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "stcut/anchors.h"
#include "stcut/cut_oracle.h"
#include "stcut/dimacs.h"
#include "stcut/errors.h"
#include "stcut/flow.h"
#include "stcut/generators.h"
#include "stcut/minplus1.h"
#include "stcut/pq_dag.h"
#include "stcut/second_mincut.h"
#include "stcut/sensitivity.h"

namespace stcut::cli {
namespace {

std::shared_ptr<spdlog::logger> logger() {
  if (auto existing = spdlog::get("stcut")) return existing;
  auto created = spdlog::stderr_logger_mt("stcut");
  created->set_pattern("[%l] %v");
  const char* level = std::getenv("MINCUT_LOG");
  std::string name = level ? level : "error";
  if (name == "debug") {
    created->set_level(spdlog::level::debug);
  } else if (name == "info") {
    created->set_level(spdlog::level::info);
  } else {
    created->set_level(spdlog::level::err);
  }
  return created;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_side(std::ostream& out, const char* tag,
                const std::vector<VertexId>& side) {
  out << tag;
  for (VertexId v : side) out << ' ' << v + 1;
  out << '\n';
}

void write_cut(std::ostream& out, const Cut& cut) {
  out << "cap " << cut.capacity << '\n';
  write_side(out, "cutside", cut.side);
}

// Undirected graphs with wider edges become unit multigraphs first.
Graph unit_view(const Graph& g) {
  return g.directed() || is_unit_capacity(g) ? g : unit_decompose(g);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownEdge:
    case ErrorCode::kUnknownVertex:
    case ErrorCode::kInvalidGraph:
      return kExitParse;
    case ErrorCode::kNoSecondMincut:
    case ErrorCode::kInfeasibleFlow:
    case ErrorCode::kTooLarge:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

void cmd_maxflow(const Graph& g, std::ostream& out) {
  MaxFlowResult mf = max_flow(g);
  out << "lambda " << mf.flow.value << '\n';
  write_side(out, "cutside", mf.mincut.side);
  for (int i = 0; i < g.num_edges(); ++i) {
    Capacity x = mf.flow.flow[i];
    if (x == 0) continue;
    const Edge& e = g.edges()[i];
    VertexId from = x > 0 ? e.u : e.v;
    VertexId to = x > 0 ? e.v : e.u;
    out << "flow " << e.id + 1 << ' ' << from + 1 << ' ' << to + 1 << ' '
        << std::abs(x) << '\n';
  }
}

void cmd_pqdag(const Graph& g, bool dot, std::ostream& out) {
  MaxFlowResult mf = max_flow(g);
  PqDag d = build_pq_dag(g, mf.flow);
  if (dot) {
    out << pq_dag_dot(d);
    return;
  }
  out << "lambda " << mf.flow.value << '\n';
  out << "nodes " << d.num_nodes() << '\n';
  for (int mu : d.topo) {
    out << "node " << mu << ' '
        << (mu == d.source_node ? "S" : mu == d.sink_node ? "T" : "-");
    for (VertexId v : d.nodes[mu]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const DagArc& arc : d.arcs) {
    out << "arc " << arc.from << ' ' << arc.to << ' ' << arc.capacity << '\n';
  }
}

void cmd_second(const Graph& g, bool covering, bool stats, std::ostream& out,
                RunReport& report) {
  SecondMincutResult r = covering ? second_mincut_covering(g) : second_mincut(g);
  write_cut(out, r.cut);
  report.counters["maxflow_calls"] = r.maxflow_calls;
  report.counters["global_mincut_calls"] = r.global_mincut_calls;
  report.counters["candidate_maxflow_calls"] = r.candidate_maxflow_calls;
  if (stats) {
    out << "source "
        << (r.source == SecondCutSource::kNodeSubdivision ? "node" : "arc")
        << '\n';
    for (const auto& [name, value] : report.counters) {
      out << name << ' ' << value << '\n';
    }
  }
}

int cmd_minplus1(const Graph& g, std::ostream& out, std::string& err) {
  auto cut = minplus1(g);
  if (!cut) {
    err = "no minimum+1 (s,t)-cut";
    return kExitInfeasible;
  }
  write_cut(out, *cut);
  return kExitOk;
}

void cmd_anchors(const Graph& input, std::ostream& out) {
  Graph g = unit_view(input);
  AnchorStructure st = build_structure(g);
  out << "lambda " << st.lambda << '\n';
  out << "anchors " << st.anchors.size() << '\n';
  for (EdgeId id : st.anchors) {
    const Edge& e = g.edge(id);
    out << "anchor " << id + 1 << ' ' << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  if (static_cast<int>(st.anchors.size()) == g.num_vertices() - 2) {
    out << "note |A| = " << st.anchors.size() << " = n-2\n";
  }
}

EdgeId edge_between(const Graph& g, VertexId u, VertexId v) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v)) {
    fail(ErrorCode::kUnknownVertex, "query vertex out of range");
  }
  auto id = g.find_edge(u, v);
  if (!id) {
    fail(ErrorCode::kUnknownEdge, "no edge between " + std::to_string(u + 1) +
                                      " and " + std::to_string(v + 1));
  }
  return *id;
}

void write_answer(std::ostream& out, const QueryAnswer& a) {
  out << "cap " << a.capacity << '\n';
  write_side(out, "cutside", a.cut_side);
  out << "edges";
  for (const CrossingEdge& e : a.contributing) {
    out << ' ' << e.u + 1 << ' ' << e.v + 1;
  }
  out << "\n\n";
}

void cmd_oracle(const Graph& g, const std::string& query_text, bool baseline,
                std::ostream& out, RunReport& report) {
  OracleState state =
      baseline ? OracleState::baseline(g) : OracleState::compact(g);
  report.counters["units"] = state.num_units();
  report.counters["arc_pairs"] = state.num_arc_pairs();
  std::int64_t count = 0;
  for (const QueryLine& q : parse_queries(query_text)) {
    QueryAnswer a;
    if (q.op == QueryOp::kFail) {
      a = query_fail(state, edge_between(g, q.u1, q.v1),
                     edge_between(g, q.u2, q.v2));
    } else {
      a = query_insert(state, {q.u1, q.v1}, {q.u2, q.v2});
    }
    logger()->debug("query {} trace {}", count, trace_name(a.trace));
    write_answer(out, a);
    ++count;
  }
  report.counters["queries"] = count;
}

// Cross-checks every applicable routine against cut enumeration.
bool verify_graph(const Graph& g, std::ostream& out,
                  const std::string& only = "") {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok,
                    const std::string& detail = "") {
    if (!only.empty() && name.rfind(only, 0) != 0) return;
    if (ok) {
      out << "ok " << name << '\n';
    } else {
      out << "mismatch " << name << (detail.empty() ? "" : ": ") << detail
          << '\n';
      all_ok = false;
    }
  };
  if (g.num_vertices() > 16) {
    fail(ErrorCode::kTooLarge, "verify enumerates cuts; use at most 16 vertices");
  }
  CutInventory inv = enumerate_cuts(g);
  MaxFlowResult mf = max_flow(g);
  report("maxflow", mf.flow.value == inv.lambda,
         std::to_string(mf.flow.value) + " vs " + std::to_string(inv.lambda));

  ResidualGraph r = residual(g, mf.flow);
  PqDag d = build_pq_dag(g, mf.flow);
  bool identity = true;
  bool transversal = true;
  for (std::uint32_t m = 0; m < inv.num_masks(); ++m) {
    std::vector<VertexId> side = inv.side(m);
    std::vector<char> mask = side_mask(g.num_vertices(), side);
    identity &= inv.capacity[m] - inv.lambda == r.out_capacity(mask);
    transversal &= is_one_transversal(d, side) == (inv.capacity[m] == inv.lambda);
  }
  report("residual-identity", identity);
  report("pqdag", transversal);

  for (bool covering : {false, true}) {
    std::string name = covering ? "second-mincut-covering" : "second-mincut";
    try {
      SecondMincutResult s = covering ? second_mincut_covering(g)
                                      : second_mincut(g);
      report(name, inv.second && s.cut.capacity == *inv.second,
             std::to_string(s.cut.capacity));
    } catch (const CutError& e) {
      report(name, e.code() == ErrorCode::kNoSecondMincut && !inv.second,
             e.what());
    }
  }
  auto plus = minplus1(g, mf.flow);
  report("minplus1", plus.has_value() == !inv.plus_one.empty() &&
                         (!plus || plus->capacity == inv.lambda + 1));

  if (g.directed() || !is_unit_capacity(g)) return all_ok;
  AnchorStructure st = build_structure(g);
  report("anchors", compute_anchors(g, st.flow) == brute_anchors(g, st.flow));
  report("anchor-bound", static_cast<int>(st.anchors.size()) <=
                             std::max(0, g.num_vertices() - 2));
  bool classes = true;
  for (std::uint32_t m = 0; m < inv.num_masks(); ++m) {
    std::vector<VertexId> side = inv.side(m);
    classes &= classify_cut(st, side) == brute_classify(inv, side);
  }
  report("classify", classes);

  if (!is_simple(g) || g.num_edges() > 40) return all_ok;
  OracleState baseline = OracleState::baseline(g);
  OracleState compact = OracleState::compact(g);
  bool oracle = true;
  for (int i = 0; i < g.num_edges() && oracle; ++i) {
    for (int j = i + 1; j < g.num_edges() && oracle; ++j) {
      EdgeId a = g.edges()[i].id;
      EdgeId b = g.edges()[j].id;
      Capacity truth = max_flow(remove_edge(remove_edge(g, a), b)).flow.value;
      QueryAnswer x = query_fail_baseline(baseline, a, b);
      QueryAnswer y = query_fail_compact(compact, a, b);
      oracle = x.capacity == truth && y.capacity == truth;
    }
  }
  report("oracle", oracle);
  return all_ok;
}

Graph random_instance(Rng& rng, int index) {
  int n = std::uniform_int_distribution<int>(4, 8)(rng);
  double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
  switch (index % 3) {
    case 0: return random_directed(rng, n, p, 5);
    case 1: return random_undirected_multigraph(rng, n, p, 2);
    default: return random_simple_undirected(rng, n, p);
  }
}

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void cmd_bench(const Graph& g, bool timings, std::ostream& out) {
  MaxFlowResult mf;
  double t_flow = time_ms([&] { mf = max_flow(g); });
  const Capacity lambda = mf.flow.value;
  PqDag d = build_pq_dag(g, mf.flow);
  int carrying = 0;
  for (Capacity x : mf.flow.flow) carrying += x != 0;
  const std::int64_t bound = std::min<std::int64_t>(
      g.num_edges(),
      static_cast<std::int64_t>(g.num_vertices()) *
          static_cast<std::int64_t>(std::ceil(std::sqrt(double(lambda)))));
  out << "n " << g.num_vertices() << '\n';
  out << "m " << g.num_edges() << '\n';
  out << "lambda " << lambda << '\n';
  out << "flow_edges " << carrying << '\n';
  out << "pq_nodes " << d.num_nodes() << '\n';
  out << "pq_arcs " << d.arcs.size() << '\n';
  out << "space_bound " << bound << '\n';
  out << "pq_arcs_within_bound " << (std::int64_t(d.arcs.size()) <= bound ? 1 : 0)
      << '\n';
  if (timings) out << "ms_maxflow " << t_flow << '\n';
  for (bool covering : {false, true}) {
    SecondMincutResult s;
    bool found = true;
    double t = time_ms([&] {
      try {
        s = covering ? second_mincut_covering(g) : second_mincut(g);
      } catch (const CutError&) {
        found = false;
      }
    });
    std::string tag = covering ? "covering" : "second";
    out << tag << "_found " << found << '\n';
    out << tag << "_maxflow_calls " << s.maxflow_calls << '\n';
    if (timings) out << "ms_" << tag << ' ' << t << '\n';
  }
  double t_plus = time_ms([&] { minplus1(g, mf.flow); });
  if (timings) out << "ms_minplus1 " << t_plus << '\n';
  if (g.directed()) return;
  Graph u = unit_view(g);
  AnchorStructure st = build_structure(u);
  FlowAssignment fu = st.flow;
  int idle = 0;
  for (Capacity x : fu.flow) idle += x == 0;
  out << "idle_edges " << idle << '\n';
  out << "zero_flow_forest " << zero_flow_forest(u, fu).size() << '\n';
  out << "anchors " << st.anchors.size() << '\n';
  out << "structure_arcs " << st.dag.arcs.size() << '\n';
  if (is_simple(u)) {
    OracleState compact = OracleState::compact(u);
    out << "oracle_arc_pairs " << compact.num_arc_pairs() << '\n';
    out << "oracle_within_bound "
        << (compact.num_arc_pairs() <= std::int64_t(u.num_edges()) ? 1 : 0)
        << '\n';
  }
}

}  // namespace

RunReport run_command(const std::vector<std::string>& args) {
  RunReport report;
  CLI::App app{"Minimum and near-minimum (s,t)-cut toolkit", "stcut"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for generated instances");

  std::string graph_path, query_path;
  bool dot = false, covering = false, stats = false, baseline = false;
  int random_count = 0;
  int bench_n = 0;
  double density = 0.5;
  bool undirected = false;
  bool timings = false;
  std::string only;

  auto* c_maxflow = app.add_subcommand("maxflow", "Maximum flow and mincut");
  c_maxflow->add_option("graph", graph_path)->required();
  auto* c_pqdag = app.add_subcommand("pqdag", "Minimum cut DAG");
  c_pqdag->add_option("graph", graph_path)->required();
  c_pqdag->add_flag("--dot", dot, "Graphviz output");
  auto* c_second = app.add_subcommand("second-mincut", "Second minimum cut");
  c_second->add_option("graph", graph_path)->required();
  c_second->add_flag("--covering", covering, "Covering variant");
  c_second->add_flag("--stats", stats, "Print call counters");
  auto* c_plus = app.add_subcommand("minplus1", "A cut of capacity lambda+1");
  c_plus->add_option("graph", graph_path)->required();
  auto* c_anchors = app.add_subcommand("anchors", "Anchor edges");
  c_anchors->add_option("graph", graph_path)->required();
  auto* c_structure = app.add_subcommand("structure", "Anchor structure");
  c_structure->add_option("graph", graph_path)->required();
  auto* c_oracle = app.add_subcommand("oracle", "Dual edge sensitivity queries");
  c_oracle->add_option("graph", graph_path)->required();
  c_oracle->add_option("queries", query_path)->required();
  c_oracle->add_flag("--baseline", baseline, "Use the full residual graph");
  auto* c_verify = app.add_subcommand("verify", "Cross-check against cut enumeration");
  c_verify->add_option("graph", graph_path);
  c_verify->add_option("--random", random_count, "Number of random instances");
  c_verify->add_option("--check", only, "Only checks whose name starts with this");
  auto* c_bench = app.add_subcommand("bench", "Counters, sizes and timings");
  c_bench->add_option("graph", graph_path);
  c_bench->add_option("--random", bench_n, "Vertices of a random instance");
  c_bench->add_option("--density", density, "Edge probability");
  c_bench->add_flag("--undirected", undirected, "Undirected simple instance");
  c_bench->add_flag("--timings", timings, "Also print wall-clock timings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.out = app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    report.exit_code = kExitUsage;
    report.err = e.what();
    return report;
  }
  CLI::App* sub = app.get_subcommands().front();
  report.command = sub->get_name();
  std::ostringstream out;
  auto start = std::chrono::steady_clock::now();
  try {
    auto load = [&] { return parse_graph(read_file(graph_path)); };
    if (sub == c_maxflow) {
      cmd_maxflow(load(), out);
    } else if (sub == c_pqdag) {
      cmd_pqdag(load(), dot, out);
    } else if (sub == c_second) {
      cmd_second(load(), covering, stats, out, report);
    } else if (sub == c_plus) {
      report.exit_code = cmd_minplus1(load(), out, report.err);
    } else if (sub == c_anchors) {
      cmd_anchors(load(), out);
    } else if (sub == c_structure) {
      write_structure(out, build_structure(unit_view(load())));
    } else if (sub == c_oracle) {
      cmd_oracle(load(), read_file(query_path), baseline, out, report);
    } else if (sub == c_verify) {
      bool ok = true;
      if (random_count > 0) {
        Rng rng(seed);
        out << "seed " << seed << '\n';
        for (int k = 0; k < random_count; ++k) {
          Graph g = random_instance(rng, k);
          std::ostringstream detail;
          if (!verify_graph(g, detail, only)) {
            ok = false;
            out << "instance " << k << '\n' << detail.str() << write_graph(g);
          }
        }
        out << (ok ? "all " : "failures among ") << random_count
            << " instances\n";
      } else if (!graph_path.empty()) {
        ok = verify_graph(load(), out, only);
      } else {
        report.exit_code = kExitUsage;
        report.err = "verify needs a graph file or --random";
      }
      if (!ok) report.exit_code = kExitMismatch;
    } else if (sub == c_bench) {
      if (bench_n > 0) {
        Rng rng(seed);
        Graph g = undirected ? random_simple_undirected(rng, bench_n, density)
                             : random_directed(rng, bench_n, density, 5);
        out << "seed " << seed << '\n';
        cmd_bench(g, timings, out);
      } else if (!graph_path.empty()) {
        cmd_bench(load(), timings, out);
      } else {
        report.exit_code = kExitUsage;
        report.err = "bench needs a graph file or --random";
      }
    }
  } catch (const CutError& e) {
    report.exit_code = exit_code_for(e.code());
    report.err = e.what();
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  logger()->info("{} finished in {:.3f} ms", report.command, report.elapsed_ms);
  report.out = out.str();
  return report;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunReport report = run_command(args);
  std::cout << report.out;
  if (!report.err.empty()) std::cerr << report.err << '\n';
  return report.exit_code;
}

}  // namespace stcut::cli
