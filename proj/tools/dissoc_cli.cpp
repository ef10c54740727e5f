#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissoc/corpus.hpp"
#include "dissoc/families.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/verify.hpp"

using namespace dissoc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

// Thrown for anything the user got wrong; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw UsageError(std::string("bad ") + what + ": '" + text + "'");
  return value;
}

struct OrderRange {
  int lo = 0;
  int hi = 0;
};

// "n" or "a..b".
OrderRange parse_orders(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "order");
    return {n, n};
  }
  OrderRange r{parse_int(text.substr(0, dots), "order"), parse_int(text.substr(dots + 2), "order")};
  if (r.lo > r.hi) throw UsageError("empty order range '" + text + "'");
  return r;
}

struct GraphInput {
  std::string graph6;
  std::string family;

  Graph load() const {
    if (graph6.empty() == family.empty()) throw UsageError("give exactly one of --graph6 or --family");
    try {
      return graph6.empty() ? FamilySpec::parse(family).build() : graph6_decode(graph6);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

void add_graph_options(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("--graph6,-g", input.graph6, "Graph in graph6 format");
  cmd->add_option("--family,-f", input.family, "Family spec: T(p,q), U(p,q), Urt(r,t) or Urt(r,t,[i,...])");
}

std::vector<VertexConstraint> parse_constraints(const std::vector<std::string>& texts, const Graph& g) {
  std::vector<VertexConstraint> out;
  for (const auto& text : texts) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("constraint must look like v=status: '" + text + "'");
    const int v = parse_int(text.substr(0, eq), "constraint vertex");
    if (v < 0 || v >= g.order()) throw UsageError("constraint vertex out of range: " + std::to_string(v));
    try {
      out.push_back({v, parse_vertex_status(text.substr(eq + 1))});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int run_phi(const GraphInput& input, const std::vector<std::string>& constraint_texts) {
  const Graph g = input.load();
  const auto constraints = parse_constraints(constraint_texts, g);
  std::cout << "phi = " << phi(g) << "\n";
  if (!constraints.empty()) {
    Count refined = 0;
    try {
      refined = phi_refined(g, constraints);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << "phi[";
    for (std::size_t i = 0; i < constraints.size(); ++i)
      std::cout << (i ? "," : "") << constraints[i].vertex << "=" << to_string(constraints[i].status);
    std::cout << "] = " << refined << "\n";
  }
  return kExitPass;
}

int run_mds(const GraphInput& input) {
  const Graph g = input.load();
  const auto sets = enumerate_mds(g);
  for (VertexSet s : sets) std::cout << s.to_string() << "\n";
  std::cout << "count " << sets.size() << "\n";
  return kExitPass;
}

struct GenConfig {
  std::string cls;
  int n = 0;
  std::string output = "-";
};

int run_gen(const GenConfig& cfg, const GeneratorCaps& caps) {
  std::vector<Graph> graphs;
  std::string header_class = cfg.cls;
  if (cfg.cls == "cycle") {
    if (cfg.n < 3) throw UsageError("cycle needs n >= 3");
    graphs = {Graph::cycle(cfg.n)};
  } else if (cfg.cls == "path") {
    if (cfg.n < 1) throw UsageError("path needs n >= 1");
    graphs = {Graph::path(cfg.n)};
  } else {
    CorpusClass cls{};
    try {
      cls = parse_corpus_class(cfg.cls);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown class '" + cfg.cls + "'");
    }
    graphs = GeneratedCorpus(caps).get(cls, cfg.n);
  }

  auto write = [&](std::ostream& out) {
    out << "# class=" << header_class << " order=" << cfg.n << " count=" << graphs.size()
        << " generator=" << kGeneratorVersion << "\n";
    for (const auto& g : graphs) out << graph6_encode(g) << "\n";
  };
  if (cfg.output == "-") {
    write(std::cout);
    std::cerr << graphs.size() << " graphs\n";
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw UsageError("cannot write " + cfg.output);
    write(out);
    out.close();
    if (!out) throw UsageError("cannot write " + cfg.output);
    std::cout << graphs.size() << " graphs written to " << cfg.output << "\n";
  }
  return kExitPass;
}

struct VerifyConfig {
  std::string suite = "all";
  std::string orders = "3..10";
  std::string format = "text";
  std::string output = "-";
  std::string cache_dir;
  int jobs = 1;
  int k_max = 3;
  std::size_t pairs = 200;
  std::uint64_t seed = 1;
  bool timings = false;
};

const std::vector<std::string> kSuites{"main",    "trees",        "paths",    "caterpillars", "cycle",     "leaf-removal",
                                       "surgery", "pendant-path", "subcases", "identities",   "all"};

void run_suite(const std::string& suite, OrderRange r, const VerifyConfig& cfg, const VerifyOptions& opts,
               std::vector<VerificationReport>& out) {
  auto each = [&](int from, auto&& check) {
    for (int n = std::max(r.lo, from); n <= r.hi; ++n) out.push_back(check(n));
  };
  if (suite == "main") {
    each(3, [&](int n) { return check_main_theorem(n, opts); });
  } else if (suite == "trees") {
    each(3, [&](int n) { return check_tree_theorem(n, opts); });
  } else if (suite == "paths") {
    if (r.hi >= 3) out.push_back(check_path_corollary(r.hi, opts));
  } else if (suite == "caterpillars") {
    if (r.hi >= 3) out.push_back(check_caterpillar_corollary(r.hi, opts));
  } else if (suite == "cycle") {
    if (r.hi >= 4) out.push_back(check_cycle_lemma(std::max(r.lo, 4), r.hi, opts));
  } else if (suite == "leaf-removal") {
    each(4, [&](int n) { return check_leaf_removal_lemma(n, opts); });
  } else if (suite == "surgery") {
    if (r.hi >= 3) out.push_back(check_surgery_lemma(r.hi, cfg.k_max, opts));
  } else if (suite == "pendant-path") {
    each(5, [&](int n) { return check_pendant_path_lemma(n, opts); });
  } else if (suite == "subcases") {
    each(9, [&](int n) { return check_case3_subcases(n, opts); });
  } else if (suite == "identities") {
    std::vector<Graph> corpus;
    for (int n = std::max(r.lo, 3); n <= r.hi; ++n) {
      const auto graphs = opts.corpus->unicyclic(n);
      corpus.insert(corpus.end(), graphs.begin(), graphs.end());
    }
    if (corpus.empty()) return;
    const auto pairs = random_union_pairs(corpus, cfg.pairs, cfg.seed);
    auto report = check_identity_suite(corpus, pairs, opts);
    report.order_min = std::max(r.lo, 3);
    report.order_max = r.hi;
    out.push_back(std::move(report));
  }
}

int run_verify(const VerifyConfig& cfg, const GeneratorCaps& caps) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw UsageError("unknown suite '" + cfg.suite + "'");
  const OrderRange range = parse_orders(cfg.orders);
  if (range.lo < 1) throw UsageError("orders start at 1");
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (cfg.k_max < 2) throw UsageError("--kmax must be at least 2");

  std::unique_ptr<CorpusSource> corpus;
  if (cfg.cache_dir.empty())
    corpus = std::make_unique<GeneratedCorpus>(caps);
  else
    corpus = std::make_unique<CachedCorpus>(cfg.cache_dir, caps);
  VerifyOptions opts;
  opts.jobs = cfg.jobs;
  opts.caps = caps;
  opts.corpus = corpus.get();

  std::vector<VerificationReport> reports;
  try {
    if (cfg.suite == "all") {
      for (const auto& suite : kSuites)
        if (suite != "all") run_suite(suite, range, cfg, opts, reports);
    } else {
      run_suite(cfg.suite, range, cfg, opts, reports);
    }
  } catch (const CapExceeded& e) {
    throw UsageError(e.what());
  }
  if (reports.empty()) throw UsageError("no orders in range for suite '" + cfg.suite + "'");

  std::string text;
  if (cfg.format == "json")
    text = reports_to_json(reports, {.include_runtime = cfg.timings});
  else if (cfg.format == "csv")
    text = reports_to_csv(reports);
  else
    text = reports_to_text(reports);

  if (cfg.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    out << text;
    out.close();
    if (!out) throw UsageError("cannot write " + cfg.output);
  }
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (cfg.output != "-") std::cerr << (passed ? "PASS" : "FAIL") << ": " << reports.size() << " reports\n";
  return passed ? kExitPass : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal dissociation set enumeration and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  GeneratorCaps caps;
  app.add_option("--tree-cap", caps.trees, "Largest tree order the generator accepts")->capture_default_str();
  app.add_option("--unicyclic-cap", caps.unicyclic, "Largest unicyclic order the generator accepts")
      ->capture_default_str();

  GraphInput phi_input;
  std::vector<std::string> constraints;
  auto* phi_cmd = app.add_subcommand("phi", "Count maximal dissociation sets");
  add_graph_options(phi_cmd, phi_input);
  phi_cmd->add_option("--constraint,-c", constraints, "Vertex constraint v=excluded|in|in0|in1 (repeatable)");

  GraphInput mds_input;
  auto* mds_cmd = app.add_subcommand("mds", "List maximal dissociation sets");
  add_graph_options(mds_cmd, mds_input);

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write one graph per isomorphism class as graph6");
  gen_cmd->add_option("--class", gen.cls, "tree | caterpillar | unicyclic | cycle | path")
      ->required()
      ->check(CLI::IsMember({"tree", "caterpillar", "unicyclic", "cycle", "path"}));
  gen_cmd->add_option("--n,-n", gen.n, "Order")->required()->check(CLI::Range(1, kMaxOrder));
  gen_cmd->add_option("--output,-o", gen.output, "Output file, - for stdout")->capture_default_str();

  VerifyConfig ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run verification suites");
  ver_cmd->add_option("--suite,-s", ver.suite, "main | trees | paths | caterpillars | cycle | leaf-removal | "
                                               "surgery | pendant-path | subcases | identities | all")
      ->capture_default_str();
  ver_cmd->add_option("--orders", ver.orders, "Order n or range a..b")->capture_default_str();
  ver_cmd->add_option("--jobs,-j", ver.jobs, "Worker threads")->envname("DISSOC_JOBS")->capture_default_str();
  ver_cmd->add_option("--format", ver.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  ver_cmd->add_option("--output,-o", ver.output, "Report file, - for stdout")->capture_default_str();
  ver_cmd->add_option("--cache-dir", ver.cache_dir, "Corpus cache directory")->envname("DISSOC_CACHE_DIR");
  ver_cmd->add_option("--kmax", ver.k_max, "Largest leaf count k for the surgery suite")->capture_default_str();
  ver_cmd->add_option("--pairs", ver.pairs, "Random union pairs for the identity suite")->capture_default_str();
  ver_cmd->add_option("--seed", ver.seed, "Seed for the identity suite pairs")->capture_default_str();
  ver_cmd->add_flag("--timings", ver.timings, "Include runtime_ms in JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*phi_cmd) return run_phi(phi_input, constraints);
    if (*mds_cmd) return run_mds(mds_input);
    if (*gen_cmd) return run_gen(gen, caps);
    return run_verify(ver, caps);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
