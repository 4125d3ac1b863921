#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>

#include "CLI11.hpp"

#include "iasgl/harness.hpp"
#include "iasgl/io.hpp"
#include "iasgl/realisation.hpp"
#include "iasgl/search.hpp"

using namespace iasgl;

namespace {

constexpr int kUsage = 64;
constexpr int kInfeasible = 4;

struct UsageError : Error {
  using Error::Error;
};

SummandMode mode_of(bool allow_equal) {
  return allow_equal ? SummandMode::AllowEqual : SummandMode::DistinctLabels;
}

IntegerSet parse_set_flag(const std::string& text) {
  bool dup = false;
  IntegerSet s;
  try {
    s = parse_integer_set(text, &dup);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (dup) std::cerr << "warning: duplicate elements dropped from '" << text << "'\n";
  return s;
}

GroundSet graceful_ground(const std::string& text) {
  IntegerSet s = parse_set_flag(text);
  if (s.empty()) throw UsageError("ground set is empty");
  if (!s.contains(0)) throw UsageError("ground set must contain 0");
  if (s.size() < 2) throw UsageError("ground set needs at least 2 elements");
  try {
    return GroundSet(std::move(s));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Graph parse_graph_spec(const std::string& spec) {
  static const std::regex shape(R"((star|path|cycle|complete):(\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, shape)) {
    static const std::map<std::string, GraphKind> kinds{{"star", GraphKind::Star},
                                                         {"path", GraphKind::Path},
                                                         {"cycle", GraphKind::Cycle},
                                                         {"complete", GraphKind::Complete}};
    try {
      return generate(kinds.at(m[1]), std::stoul(m[2]));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (spec.rfind("file:", 0) == 0) {
    try {
      return read_document(spec.substr(5)).graph();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("bad graph spec '" + spec + "' (star:m|path:m|cycle:m|complete:m|file:PATH)");
}

struct SweepSpec {
  std::size_t n;
  Element max;
};

std::optional<SweepSpec> parse_sweep_spec(const std::string& spec) {
  static const std::regex sweep(R"(sweep:n=(\d+),max=(\d+))");
  std::smatch m;
  if (!std::regex_match(spec, m, sweep)) {
    if (spec.rfind("sweep:", 0) == 0) throw UsageError("bad sweep spec '" + spec + "' (sweep:n=N,max=M)");
    return std::nullopt;
  }
  return SweepSpec{std::stoul(m[1]), std::stoull(m[2])};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_family(const std::string& name, const std::vector<IntegerSet>& sets) {
  std::cout << std::left << std::setw(14) << name << std::right << std::setw(4) << sets.size() << "  ";
  for (std::size_t i = 0; i < sets.size(); ++i) std::cout << (i ? " " : "") << sets[i].to_string();
  std::cout << '\n';
}

int cmd_classify(const std::string& ground, bool allow_equal, const std::string& format) {
  GroundSet x = graceful_ground(ground);
  auto cls = classify_ground_set(x, mode_of(allow_equal));
  if (format == "table") {
    std::cout << "X = " << x.base().to_string() << "  mode " << to_string(cls->mode) << '\n';
    print_family("non_sumsets", cls->non_sumsets);
    print_family("non_summands", cls->non_summands);
    print_family("neither", cls->neither);
  } else {
    emit(to_json(*cls));
  }
  return 0;
}

struct SearchArgs {
  std::string graph;
  std::string ground;
  std::uint64_t node_budget = SearchConfig{}.node_budget;
  std::uint64_t time_budget_ms = SearchConfig{}.time_budget_ms;
  bool find_all = false;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  bool allow_equal = false;
  std::string out;
};

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return 0;
    case SearchStatus::ExhaustedNone: return 1;
    case SearchStatus::BudgetExceeded: return 2;
    case SearchStatus::GateRejected: return 3;
  }
  return 1;
}

int cmd_search(const SearchArgs& a) {
  Graph g = parse_graph_spec(a.graph);
  SearchConfig cfg;
  cfg.mode = mode_of(a.allow_equal);
  cfg.node_budget = a.node_budget;
  cfg.time_budget_ms = a.time_budget_ms;
  cfg.find_all = a.find_all;
  cfg.seed = a.seed;
  cfg.threads = a.threads;

  std::optional<Labeling> witness;
  int code = 1;
  if (auto sweep = parse_sweep_spec(a.ground)) {
    std::vector<SweepEntry> entries;
    try {
      entries = sweep_ground_sets(g, sweep->n, sweep->max, cfg);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    Json j = {{"graph", a.graph}, {"sweep", Json::array()}};
    bool any_found = false;
    bool any_budget = false;
    for (const auto& e : entries) {
      Json entry = to_json(e.outcome);
      entry["ground_set"] = to_json(e.ground.base());
      j["sweep"].push_back(std::move(entry));
      if (e.outcome.status == SearchStatus::Found) {
        any_found = true;
        if (!witness) witness = e.outcome.witnesses.front();
      }
      if (e.outcome.status == SearchStatus::BudgetExceeded) any_budget = true;
    }
    emit(j);
    code = any_found ? 0 : any_budget ? 2 : 1;
  } else {
    GroundSet x = graceful_ground(a.ground);
    if (x.n() > kMaxSearchGroundSet) throw UsageError("ground set too large for search");
    SearchOutcome outcome = search_iasgl(g, x, cfg);
    Json j = to_json(outcome);
    j["graph"] = a.graph;
    j["ground_set"] = to_json(x.base());
    emit(j);
    if (!outcome.witnesses.empty()) witness = outcome.witnesses.front();
    code = status_code(outcome.status);
  }
  if (!a.out.empty() && witness) write_json(a.out, to_json(make_document(g, witness)));
  return code;
}

int cmd_verify(const std::string& path) {
  std::optional<Graph> g;
  std::optional<Labeling> f;
  try {
    Document d = read_document(path);
    g = d.graph();
    f = d.labeling();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Verification v = verify_iasgl(*g, *f);
  Rung rung = highest_rung(*g, *f);
  emit({{"rung", to_string(rung)}, {"iasgl", v.passed}, {"violations", to_json(v.violations)}});
  return rung == Rung::IASGL ? 0 : 1;
}

int cmd_construct(const std::string& ground, bool prefer_nonbipartite, bool allow_equal, const std::string& out,
                  const std::string& dot) {
  GroundSet x = graceful_ground(ground);
  if (x.n() > kMaxRealisationGroundSet) throw UsageError("ground set too large for realisation");
  RealisationResult r = [&] {
    try {
      return build_realisation(x, prefer_nonbipartite, mode_of(allow_equal));
    } catch (const AssignmentError& e) {
      Json unassignable = Json::array();
      for (const auto& s : e.unassignable()) unassignable.push_back(to_json(s));
      emit({{"error", e.what()}, {"unassignable", unassignable}});
      std::exit(kInfeasible);
    }
  }();
  Json trace = Json::array();
  for (const auto& t : r.assignment_trace)
    trace.push_back({{"target", to_json(t.target)}, {"edge", {t.u, t.v}}, {"fixed", t.fixed}});
  Json summary = {{"ground_set", to_json(x.base())},
                  {"vertices", r.graph.vertex_count()},
                  {"edges", r.graph.edge_count()},
                  {"pendants", pendant_vertices(r.graph).size()},
                  {"bipartite", !r.non_bipartite},
                  {"trace", std::move(trace)}};
  if (!r.note.empty()) summary["note"] = r.note;
  emit(summary);
  if (!out.empty()) write_json(out, to_json(make_document(r.graph, r.labeling)));
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw Error("cannot write " + dot);
    f << to_dot(r.graph, r.labeling);
  }
  return 0;
}

int cmd_theorems(const HarnessConfig& cfg, const std::string& report_path) {
  TheoremReport report = run_all(cfg);
  for (const auto& c : report.checks)
    std::cout << std::left << std::setw(16) << to_string(c.status) << std::setw(28) << c.id << c.evidence << '\n';
  std::cout << report.confirmed << " Confirmed, " << report.refuted << " Refuted, " << report.unknown
            << " Unknown-budget\n";
  if (!report_path.empty()) write_json(report_path, report.to_json());
  return report.refuted == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer additive set-graceful labelings: classify, search, verify, construct"};
  app.require_subcommand(1);

  std::string ground;
  bool allow_equal = false;
  std::string format = "json";
  auto* classify = app.add_subcommand("classify", "Sumset and summand families of a ground set");
  classify->add_option("--ground-set", ground, "Comma-separated set containing 0")->required();
  classify->add_flag("--allow-equal-summands", allow_equal, "Allow A + A decompositions");
  classify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Decide whether a graph admits an IASGL");
  search->add_option("--graph", sa.graph, "star:m|path:m|cycle:m|complete:m|file:PATH")->required();
  search->add_option("--ground-set", sa.ground, "Comma-separated set or sweep:n=N,max=M")->required();
  search->add_option("--node-budget", sa.node_budget)->check(CLI::PositiveNumber);
  search->add_option("--time-budget-ms", sa.time_budget_ms)->check(CLI::PositiveNumber);
  search->add_flag("--find-all", sa.find_all);
  search->add_option("--seed", sa.seed, "0 keeps canonical label order");
  search->add_option("--threads", sa.threads, "0 uses IASGL_THREADS or the OpenMP default");
  search->add_flag("--allow-equal-summands", sa.allow_equal);
  search->add_option("--out", sa.out, "Write the first witness as a document");

  std::string doc;
  auto* verify = app.add_subcommand("verify", "Highest rung of the IASL / IASI / IASGL ladder");
  verify->add_option("document", doc)->required();

  bool prefer_nonbipartite = false;
  std::string out;
  std::string dot;
  auto* construct = app.add_subcommand("construct", "Build a graceful graph-realisation of X");
  construct->add_option("--ground-set", ground)->required();
  construct->add_flag("--prefer-nonbipartite", prefer_nonbipartite);
  construct->add_flag("--allow-equal-summands", allow_equal);
  construct->add_option("--out", out);
  construct->add_option("--dot", dot);

  HarnessConfig hc;
  std::vector<std::size_t> extra_trees;
  std::string report;
  auto* theorems = app.add_subcommand("theorems", "Re-check the structural results within bounds");
  theorems->add_option("--n-max", hc.n_max)->check(CLI::Range(2, 6));
  theorems->add_option("--max-element", hc.max_element)->check(CLI::Range(1, 64));
  theorems->add_option("--trees", extra_trees, "Extra tree orders, e.g. 15");
  theorems->add_option("--diophantine-n-max", hc.diophantine_n_max)->check(CLI::Range(0, 64));
  theorems->add_option("--node-budget", hc.search.node_budget)->check(CLI::PositiveNumber);
  theorems->add_option("--report", report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*classify) return cmd_classify(ground, allow_equal, format);
    if (*search) return cmd_search(sa);
    if (*verify) return cmd_verify(doc);
    if (*construct) return cmd_construct(ground, prefer_nonbipartite, allow_equal, out, dot);
    if (*theorems) {
      hc.n_min = std::min<std::size_t>(hc.n_min, hc.n_max);
      for (std::size_t m : extra_trees)
        if (std::find(hc.tree_orders.begin(), hc.tree_orders.end(), m) == hc.tree_orders.end())
          hc.tree_orders.push_back(m);
      return cmd_theorems(hc, report);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 70;
  }
  return kUsage;
}
