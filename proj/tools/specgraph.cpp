// Command-line driver: analyze, verify, generate, lemma1, search.
//
// Exit codes: 0 success, 1 a mathematical violation was found, 2 usage or
// input error.

#include <fmt/core.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "specgraph/bounds.hpp"
#include "specgraph/families.hpp"
#include "specgraph/harness.hpp"
#include "specgraph/random.hpp"
#include "specgraph/report_json.hpp"
#include "specgraph/search.hpp"

namespace fs = std::filesystem;
using namespace specgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  Graph graph;
  std::string source;  // "file:line" for diagnostics
};

enum class InputFormat { automatic, graph6, edges };

InputFormat detect_format(const std::string& path, InputFormat requested) {
  if (requested != InputFormat::automatic) return requested;
  const auto ext = fs::path(path).extension().string();
  if (ext == ".edges" || ext == ".edgelist" || ext == ".txt") return InputFormat::edges;
  return InputFormat::graph6;
}

void read_graph6_stream(std::istream& in, const std::string& name, std::vector<NamedGraph>& out) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({from_graph6(line), name + ":" + std::to_string(lineno)});
    } catch (const std::exception& e) {
      throw UsageError(name + ": line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void read_edges_stream(std::istream& in, const std::string& name, std::vector<NamedGraph>& out) {
  // Line-oriented so errors can name the offending line.
  std::string line;
  std::size_t lineno = 0;
  std::size_t header_line = 0;
  long long n = 0;
  long long remaining = -1;  // -1: expecting a header
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) { throw UsageError(name + ": line " + std::to_string(lineno) + ": " + what); };
  auto finish = [&] {
    try {
      out.push_back({Graph::from_edge_list(static_cast<std::size_t>(n), edges), name + ":" + std::to_string(header_line)});
    } catch (const std::exception& e) {
      throw UsageError(name + ": graph at line " + std::to_string(header_line) + ": " + e.what());
    }
    edges.clear();
    remaining = -1;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(ls >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fail("expected two integers");
    }
    if (!(ls >> b) || (ls >> extra)) fail("expected exactly two integers");
    if (remaining < 0) {
      if (a < 1) fail("vertex count must be positive");
      if (b < 0) fail("edge count must be nonnegative");
      n = a;
      remaining = b;
      header_line = lineno;
    } else {
      if (a < 0 || b < 0) fail("negative vertex id");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      --remaining;
    }
    if (remaining == 0) finish();
  }
  if (remaining > 0) throw UsageError(name + ": graph at line " + std::to_string(header_line) + ": truncated edge list");
}

std::vector<NamedGraph> load_inputs(const std::vector<std::string>& inputs, InputFormat format) {
  std::vector<NamedGraph> graphs;
  for (const auto& input : inputs) {
    if (input == "-") {
      if (format == InputFormat::edges)
        read_edges_stream(std::cin, "<stdin>", graphs);
      else
        read_graph6_stream(std::cin, "<stdin>", graphs);
      continue;
    }
    if (fs::exists(input)) {
      std::ifstream file(input);
      if (!file) throw UsageError("cannot open " + input);
      if (detect_format(input, format) == InputFormat::edges)
        read_edges_stream(file, input, graphs);
      else
        read_graph6_stream(file, input, graphs);
      continue;
    }
    // Not a file: accept a literal graph6 string.
    try {
      graphs.push_back({from_graph6(input), "<arg>"});
    } catch (const std::exception& e) {
      throw UsageError("'" + input + "' is neither a readable file nor a valid graph6 string (" + e.what() + ")");
    }
  }
  if (graphs.empty()) throw UsageError("no graphs in input");
  return graphs;
}

/// Writes to the -o path when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string fmt_opt(const std::optional<double>& v, int precision = 9) {
  return v ? fmt::format("{:.{}f}", *v, precision) : std::string("-");
}

std::string fmt_bool(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

std::string parts_string(const MultipartiteCertificate& cert) {
  if (!cert.is_multipartite) return "no";
  std::string s = "[";
  for (std::size_t i = 0; i < cert.parts.size(); ++i) s += (i ? "," : "") + std::to_string(cert.parts[i]);
  return s + "]";
}

void print_report_table(std::ostream& os, const BoundReport& rep, const std::string& source) {
  os << fmt::format("graph {}  ({})\n", rep.graph6, source);
  os << fmt::format("  n={} m={} t={}  lambda_n={:.9f}  mu_n={:.9f}  clique={}  regular={}  multipartite={}\n",
                    rep.n, rep.m, rep.t, rep.lambda_n, rep.mu_n, rep.clique_number, rep.regular ? "yes" : "no",
                    parts_string(rep.multipartite));
  os << fmt::format("  {:<16} {:<14} {:>18} {:>14} {:>14} {:>5} {:>5} {:>5}  {}\n", "bound", "hypothesis", "value",
                    "observed", "gap", "eq", "pred", "agree", "verdict");
  for (const auto& e : rep.entries) {
    std::string value = "-";
    if (e.bound && !e.bound->is_integer())
      value = fmt::format("{} ({:.6f})", e.bound->to_string(), e.bound->to_double());
    else if (e.bound)
      value = e.bound->to_string();
    else if (e.bound_value)
      value = fmt::format("{:.9f}", *e.bound_value);
    const bool evaluated = e.verdict != Verdict::not_applicable;
    os << fmt::format("  {:<16} {:<14} {:>18} {:>14} {:>14} {:>5} {:>5} {:>5}  {}{}\n", e.key(),
                      to_string(e.hypothesis), value, fmt_opt(e.observed), fmt_opt(e.gap),
                      evaluated ? (e.equality ? "yes" : "no") : "-", fmt_bool(e.predicted_equality),
                      fmt_bool(e.agreement), to_string(e.verdict), e.reason.empty() ? "" : "  (" + e.reason + ")");
  }
}

std::size_t default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::vector<std::int64_t> r_list;
  std::vector<double> eps_list;
  std::vector<std::int64_t> cycle_r_list;
  bool json = false;
  double tol = 1e-7;
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a) {
  InputFormat format = InputFormat::automatic;
  if (a.format == "g6" || a.format == "graph6") format = InputFormat::graph6;
  else if (a.format == "edges") format = InputFormat::edges;
  else if (a.format != "auto") throw UsageError("unknown --format " + a.format);

  const auto graphs = load_inputs(a.inputs, format);
  ReportOptions opts;
  if (!a.r_list.empty()) opts.r_list = a.r_list;
  if (!a.eps_list.empty()) opts.epsilon_list = a.eps_list;
  if (!a.cycle_r_list.empty()) opts.cycle_r_list = a.cycle_r_list;
  opts.tol.eq_tol = a.tol;

  Output out(a.out);
  bool violation = false;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& ng : graphs) {
    const BoundReport rep = build_report(ng.graph, opts);
    violation = violation || rep.any_violation() || rep.any_disagreement();
    if (a.json)
      all.push_back(to_json(rep));
    else
      print_report_table(out.stream(), rep, ng.source);
  }
  if (a.json) out.stream() << all.dump(2) << '\n';
  return violation ? kExitViolation : kExitOk;
}

struct VerifyArgs {
  int n_max = 0;
  std::size_t workers = 1;
  double tol = 1e-7;
  bool json = false;
  bool timing = false;
  std::string out;
  std::string witness_dir;
  std::size_t partition_max_n = 6;
  std::size_t witness_cap = 16;
};

void print_suite_table(std::ostream& os, const SuiteReport& rep) {
  os << fmt::format("exhaustive suite: n = {}..{}, {} labeled graphs\n", rep.n_min, rep.n_max, rep.graphs);
  os << fmt::format("{:<22} {:>10} {:>9} {:>10} {:>8} {:>16}\n", "check", "passed", "violated", "n/a", "flagged",
                    "worst margin");
  for (const auto& [key, t] : rep.checks)
    os << fmt::format("{:<22} {:>10} {:>9} {:>10} {:>8} {:>16}\n", key, t.passed, t.violated, t.not_applicable,
                      t.flagged, t.worst_margin ? fmt::format("{:.3e}", *t.worst_margin) : "-");
  os << "\nequality censuses\n";
  os << fmt::format("{:<22} {:<8} {:<30} {:>9} {:>11} {:>10}\n", "check", "relation", "predicate", "numeric",
                    "structural", "mismatch");
  for (const auto& [key, c] : rep.censuses)
    os << fmt::format("{:<22} {:<8} {:<30} {:>9} {:>11} {:>10}\n", key, c.relation, c.predicate, c.numeric,
                      c.structural, c.mismatches);
  os << fmt::format("\nviolations: {}   census mismatches: {}\n", rep.violation_total, rep.census_mismatch_total);
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, rep.violations.size()); ++i) {
    const auto& v = rep.violations[i];
    os << fmt::format("  {} {} {}\n", v.check, v.graph6, v.detail);
  }
  if (rep.violation_total > kShown)
    os << fmt::format("  ... {} more (full list in the JSON report)\n", rep.violation_total - kShown);
  if (rep.wall_time_s) os << fmt::format("wall time: {:.2f} s\n", *rep.wall_time_s);
}

void write_witnesses(const fs::path& dir, const SuiteReport& rep) {
  fs::create_directories(dir);
  auto sanitize = [](std::string key) {
    for (char& c : key)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') c = '_';
    return key;
  };
  for (const auto& [key, c] : rep.censuses) {
    std::ofstream f(dir / (sanitize(key) + ".equality.g6"));
    for (const auto& w : c.witnesses) f << w << '\n';
    if (!c.mismatch_witnesses.empty()) {
      std::ofstream mf(dir / (sanitize(key) + ".mismatch.g6"));
      for (const auto& w : c.mismatch_witnesses) mf << w << '\n';
    }
  }
  std::ofstream vf(dir / "violations.g6");
  for (const auto& v : rep.violations) vf << v.graph6 << '\n';
}

int cmd_verify(const VerifyArgs& a) {
  if (a.n_max < 1 || a.n_max > static_cast<int>(kMaxEnumerationOrder))
    throw UsageError(fmt::format("--nmax must be in [1, {}] (exhaustive enumeration limit)", kMaxEnumerationOrder));
  SuiteConfig cfg;
  cfg.workers = a.workers;
  cfg.tol.eq_tol = a.tol;
  cfg.record_timing = a.timing;
  cfg.partition_max_n = a.partition_max_n;
  cfg.witness_cap = a.witness_cap;
  const SuiteReport rep = run_suite(static_cast<std::size_t>(a.n_max), cfg);

  Output out(a.out);
  if (a.json || out.to_file()) out.stream() << to_json(rep).dump(2) << '\n';
  if (!a.json) print_suite_table(out.to_file() ? std::cout : out.stream(), rep);
  if (!a.witness_dir.empty()) write_witnesses(a.witness_dir, rep);
  return rep.clean() ? kExitOk : kExitViolation;
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::size_t> parts;
  std::size_t m = 0;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  std::vector<Graph> graphs;
  bool predicts_equality = false;
  try {
    if (a.family == "turan") {
      if (a.n == 0 || a.r == 0) throw UsageError("turan needs --n and --r");
      graphs.push_back(turan_graph(a.n, a.r));
      predicts_equality = true;
    } else if (a.family == "multipartite") {
      if (a.parts.empty()) throw UsageError("multipartite needs --parts");
      graphs.push_back(complete_multipartite(a.parts));
      predicts_equality = true;
    } else if (a.family == "gnm") {
      if (a.n == 0) throw UsageError("gnm needs --n and --m");
      for (std::size_t i = 0; i < a.count; ++i) graphs.push_back(random_gnm(a.n, a.m, SplitMix64(a.seed).stream(i)()));
    } else {
      throw UsageError("unknown family '" + a.family + "' (expected turan, multipartite, gnm)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Output out(a.out);
  std::ostream& summary = out.to_file() ? std::cout : std::cerr;
  for (const auto& g : graphs) {
    out.stream() << to_graph6(g) << '\n';
    const auto n = static_cast<std::int64_t>(g.order());
    const auto m = static_cast<std::int64_t>(g.size());
    summary << fmt::format("n={} m={}", n, m);
    if (predicts_equality && m >= 1) {
      const auto tri = triangle_stats(g).t_total;
      const auto cert = complete_multipartite_certificate(g);
      summary << fmt::format(" parts={}", parts_string(cert));
      if (is_regular(g)) {
        const auto r = static_cast<std::int64_t>(cert.parts.size());
        summary << fmt::format("  predicted equalities: lambda_n = th1(r={}) = {}", r,
                               r >= 2 ? th1_bound(n, m, r).to_string() : std::string("n/a"));
        summary << fmt::format(", lambda_n = th2_l2 = {}, mu_n = th3 = {}", th2_l2_bound(n, m, tri).to_string(),
                               th3_bound(n, m, tri).to_string());
      } else {
        summary << "  (not regular: only th2_l1 equality predicted)";
      }
    }
    summary << '\n';
  }
  return kExitOk;
}

struct LemmaArgs {
  std::size_t n = 10;
  double s = 0.5;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_lemma1(const LemmaArgs& a) {
  if (!(a.s >= 0.0 && a.s <= 1.0)) throw UsageError("--s must lie in [0, 1]");
  if (a.n == 0) throw UsageError("--n must be positive");
  const auto res = lemma1_sample_check(a.n, a.s, a.samples, a.seed);
  if (a.json) {
    std::cout << to_json(res).dump(2) << '\n';
  } else {
    std::cout << fmt::format("n={} s={} samples={} probes={}\n", res.n, res.s, res.samples, res.probes);
    std::cout << fmt::format("floor        {:.12f}\n", res.floor);
    std::cout << fmt::format("min observed {:.12f}\n", res.min_value);
    std::cout << fmt::format("margin       {:.3e}{}\n", res.margin,
                             std::abs(res.margin) <= 1e-12 ? "  (equality)" : "");
    std::cout << "argmin       [";
    for (std::size_t i = 0; i < res.argmin.size(); ++i) std::cout << (i ? ", " : "") << fmt::format("{:.6f}", res.argmin[i]);
    std::cout << "]\n";
    std::cout << (res.violated ? "VIOLATION: value below floor\n" : "no violation\n");
  }
  return res.violated ? kExitViolation : kExitOk;
}

struct SearchArgs {
  std::size_t n = 8;
  std::int64_t m_min = 1;
  std::int64_t m_max = -1;
  std::string objective = "min-gap-th3";
  std::size_t restarts = 64;
  std::size_t iterations = 200;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t keep = 5;
  double tol = 1e-7;
  bool json = false;
  std::string out;
};

int cmd_search(const SearchArgs& a) {
  SearchConfig cfg;
  try {
    cfg.objective = SearchObjective::parse(a.objective);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.n = a.n;
  cfg.m_min = a.m_min;
  cfg.m_max = a.m_max;
  cfg.restarts = a.restarts;
  cfg.iterations = a.iterations;
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  cfg.keep = a.keep;
  SearchResult res;
  try {
    res = search_extremal(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Output out(a.out);
  if (a.json) {
    out.stream() << to_json(res, cfg).dump(2) << '\n';
  } else {
    out.stream() << fmt::format("objective {}  n={}  restarts={} (feasible {})  evaluations={}\n",
                                cfg.objective.to_string(), cfg.n, cfg.restarts, res.feasible_restarts,
                                res.evaluations);
    for (const auto& w : res.best)
      out.stream() << fmt::format("  {:<24} m={:<5} gap={:.3e}  restart={} steps={}\n", w.graph6, w.m, w.gap,
                                  w.restart, w.steps);
  }
  const bool counterexample =
      std::any_of(res.best.begin(), res.best.end(), [&](const auto& w) { return w.gap < -a.tol; });
  return counterexample ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds for graphs: Laplacian lambda_n and adjacency mu_n versus edge and triangle counts"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Evaluate every bound on each input graph");
  an->add_option("inputs", analyze.inputs, "graph6/edge-list files, '-' for stdin, or literal graph6 strings")
      ->required();
  an->add_option("--format", analyze.format, "auto | g6 | edges (auto uses the file extension)");
  an->add_option("--r", analyze.r_list, "r values for the K_{r+1}-free bounds (default 2..min(6, n-1))")
      ->delimiter(',');
  an->add_option("--eps", analyze.eps_list, "epsilon grid for the triangle-sparsity check")->delimiter(',');
  an->add_option("--cycle-r", analyze.cycle_r_list, "cycle lengths for the C_r-free check")->delimiter(',');
  an->add_flag("--json", analyze.json, "emit a JSON array of reports");
  an->add_option("--tol", analyze.tol, "equality/violation tolerance")->capture_default_str();
  an->add_option("-o,--output", analyze.out, "output path");

  VerifyArgs verify;
  verify.workers = default_workers();
  auto* ve = app.add_subcommand("verify", "Run every check on all labeled graphs up to --nmax vertices");
  ve->add_option("--nmax", verify.n_max, "largest order (1..7)")->required();
  ve->add_option("--workers", verify.workers, "worker threads")->capture_default_str();
  ve->add_option("--tol", verify.tol, "equality/violation tolerance")->capture_default_str();
  ve->add_option("--partition-max-n", verify.partition_max_n, "largest order for exhaustive partition checks")
      ->capture_default_str();
  ve->add_option("--witness-cap", verify.witness_cap, "witnesses kept per census")->capture_default_str();
  ve->add_flag("--json", verify.json, "print the JSON report to stdout");
  ve->add_flag("--timing", verify.timing, "include wall time in the report (breaks byte-identical output)");
  ve->add_option("-o,--output", verify.out, "write the JSON report here");
  ve->add_option("--witness-dir", verify.witness_dir, "write census witnesses as .g6 files");

  GenerateArgs gen;
  auto* ge = app.add_subcommand("generate", "Emit graph6 lines for a graph family");
  ge->add_option("family", gen.family, "turan | multipartite | gnm")->required();
  ge->add_option("--n", gen.n, "order");
  ge->add_option("--r", gen.r, "number of parts (turan)");
  ge->add_option("--parts", gen.parts, "part sizes (multipartite)")->delimiter(',');
  ge->add_option("--m", gen.m, "edge count (gnm)");
  ge->add_option("--count", gen.count, "number of graphs (gnm)")->capture_default_str();
  ge->add_option("--seed", gen.seed, "seed (gnm)")->capture_default_str();
  ge->add_option("-o,--output", gen.out, "output path");

  LemmaArgs lemma;
  auto* le = app.add_subcommand("lemma1", "Sample the degree-profile inequality sum 2x^3-(2+s)x^2 >= ns^3-2ns^2");
  le->add_option("--n", lemma.n, "number of variables")->capture_default_str();
  le->add_option("--s", lemma.s, "mean value s in [0, 1]")->capture_default_str();
  le->add_option("--samples", lemma.samples, "random feasible samples")->capture_default_str();
  le->add_option("--seed", lemma.seed, "seed")->capture_default_str();
  le->add_flag("--json", lemma.json, "JSON output");

  SearchArgs search;
  auto* se = app.add_subcommand("search", "Hill-climb toward graphs that nearly attain a bound");
  se->add_option("--n", search.n, "order")->capture_default_str();
  se->add_option("--m-min", search.m_min, "smallest edge count")->capture_default_str();
  se->add_option("--m-max", search.m_max, "largest edge count (-1: all)")->capture_default_str();
  se->add_option("--objective", search.objective, "min-gap-th1:<r> | min-gap-th2 | min-gap-th3")
      ->capture_default_str();
  se->add_option("--restarts", search.restarts, "random restarts")->capture_default_str();
  se->add_option("--iterations", search.iterations, "hill-climbing steps per restart")->capture_default_str();
  se->add_option("--seed", search.seed, "seed")->capture_default_str();
  se->add_option("--workers", search.workers, "worker threads")->capture_default_str();
  se->add_option("--keep", search.keep, "witnesses reported")->capture_default_str();
  se->add_option("--tol", search.tol, "gap below -tol counts as a counterexample")->capture_default_str();
  se->add_flag("--json", search.json, "JSON output");
  se->add_option("-o,--output", search.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (an->parsed()) return cmd_analyze(analyze);
    if (ve->parsed()) return cmd_verify(verify);
    if (ge->parsed()) return cmd_generate(gen);
    if (le->parsed()) return cmd_lemma1(lemma);
    if (se->parsed()) return cmd_search(search);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
