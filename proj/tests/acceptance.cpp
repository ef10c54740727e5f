// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dissoc/families.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/verify.hpp"
#include "oracles.hpp"

using namespace dissoc;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

// Collects failure messages; the first few end up in the output line.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : "; ") + what;
  }
  void report(const VerificationReport& r) {
    expect(r.passed(), r.suite + " n=" + std::to_string(r.order_min) + ".." + std::to_string(r.order_max) + ": " +
                           std::to_string(r.violations.size()) + " violations" +
                           (r.violations.empty() ? "" : " (" + r.violations.front().rule + ")"));
  }
  Outcome done(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, std::to_string(failures_) + " failures: " + messages_};
  }

 private:
  int failures_ = 0;
  std::string messages_;
};

std::set<std::string> codes(const std::vector<GraphRecord>& records) {
  std::set<std::string> out;
  for (const auto& r : records) out.insert(r.code);
  return out;
}

std::set<std::string> unicyclic_codes(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(unicyclic_code(g).bytes);
  return out;
}

const GeneratedCorpus& corpus() {
  static const GeneratedCorpus instance;
  return instance;
}

Outcome main_theorem() {
  Checker c;
  for (int n = 3; n <= 12; ++n) {
    const auto r = check_main_theorem(n);
    c.report(r);
    c.expect(r.min_phi == Count{static_cast<Count>(n / 2 + 2)}, "min phi at n=" + std::to_string(n));
    std::vector<Graph> expected;
    if (n % 2 == 1)
      expected = {U_pq((n - 3) / 2, (n - 3) / 2)};
    else if (n == 6)
      expected = {U_pq(2, 1), U_rt(6, 0), U_rt(5, 1)};
    else if (n == 8)
      expected = {U_pq(3, 2), U_rt(4, 4)};
    else
      expected = {U_pq((n - 2) / 2, (n - 4) / 2)};
    c.expect(codes(r.minimizers) == unicyclic_codes(expected), "minimizer set at n=" + std::to_string(n));
    c.expect(r.minimizers.size() == expected.size(), "minimizer count at n=" + std::to_string(n));
  }
  return c.done("n=3..12, minimizer sets as predicted");
}

Outcome tree_bound() {
  Checker c;
  for (int n = 3; n <= 12; ++n) {
    const auto r = check_tree_theorem(n);
    c.report(r);
    c.expect(r.min_phi == Count{static_cast<Count>((n + 1) / 2 + 1)}, "min phi at n=" + std::to_string(n));
    std::set<std::string> expected;
    for (const auto& t : extremal_trees(n)) expected.insert(tree_code(t).bytes);
    c.expect(codes(r.minimizers) == expected, "minimizer set at n=" + std::to_string(n));
  }
  return c.done("n=3..12, minimizers = extremal_trees(n)");
}

Outcome path_caterpillar() {
  Checker c;
  for (int n = 3; n <= 20; ++n) {
    const Count value = phi(Graph::path(n));
    const Count bound = (n + 1) / 2 + 1;
    c.expect(n <= 5 ? value == bound : value > bound, "phi(P_" + std::to_string(n) + ")");
  }
  c.report(check_path_corollary(20));
  const auto cats = check_caterpillar_corollary(9);
  c.report(cats);
  std::set<std::string> six;
  for (const auto& g : extremal_caterpillars()) six.insert(tree_code(g).bytes);
  c.expect(codes(cats.minimizers) == six && six.size() == 6, "caterpillar equality set");
  return c.done("paths n<=20, caterpillars n<=9 (6 equality graphs)");
}

Outcome cycle_lemma() {
  Checker c;
  for (int n = 4; n <= 20; ++n) {
    const auto diff = static_cast<long long>(phi(Graph::cycle(n))) - static_cast<long long>(phi(Graph::path(n - 1)));
    c.expect(diff >= 1, "difference at n=" + std::to_string(n));
    c.expect((diff == 1) == (n == 6), "equality pattern at n=" + std::to_string(n));
    if (n > 6) c.expect(diff >= 2, "difference >= 2 at n=" + std::to_string(n));
  }
  c.report(check_cycle_lemma(4, 20));
  return c.done("n=4..20, equality only at n=6");
}

Outcome leaf_removal() {
  Checker c;
  Count graphs = 0;
  for (int n = 4; n <= 11; ++n) {
    const auto r = check_leaf_removal_lemma(n);
    c.report(r);
    graphs += r.graphs_examined;
  }
  return c.done(std::to_string(graphs) + " class members, r+t<=11");
}

Outcome surgery() {
  Checker c;
  const auto r = check_surgery_lemma(8, 3);
  c.report(r);
  c.expect(r.graphs_examined > 0, "no instances");
  return c.done(std::to_string(r.graphs_examined) + " instances, " + std::to_string(r.observations.size()) +
                " equality instances checked");
}

Outcome pendant_path() {
  Checker c;
  Count graphs = 0;
  for (int n = 5; n <= 12; ++n) {
    const auto r = check_pendant_path_lemma(n);
    c.report(r);
    graphs += r.graphs_examined;
  }
  return c.done(std::to_string(graphs) + " instances, n=5..12");
}

Outcome subcases() {
  Checker c;
  for (int n : {9, 10, 11, 12, 13}) c.report(check_case3_subcases(n));

  // n = 9 directly: H = U(2,2) on vertices 0..6, leaves 1 and 4 (1 is the
  // outer vertex of a length-2 leg), center 0.
  auto attach = [](const Graph& h, Vertex w) {
    const Vertex u = h.order();
    return h.with_isolated(2).with_edge(w, u).with_edge(u, u + 1);
  };
  const Graph h9 = U_pq(2, 2);
  for (Vertex w : leaves(h9)) c.expect(phi(attach(h9, w)) == 13, "n=9 leaf attachment");
  c.expect(phi(attach(h9, 0)) == 6, "n=9 center attachment");

  for (int n : {10, 12}) {
    const Graph h = U_pq((n - 4) / 2, (n - 6) / 2);
    std::set<Count> values;
    for (Vertex w : leaves(h)) values.insert(phi(attach(h, w)));
    const std::set<Count> both{static_cast<Count>((3 * n + 2) / 2), static_cast<Count>((n + 6) / 2)};
    c.expect(values == both, "even leaf values at n=" + std::to_string(n));
  }
  return c.done("n=9..13; n=9 leaf 13, center 6; even leaves realize both forms");
}

Outcome equality_direction() {
  Checker c;
  for (int n = 3; n <= 25; n += 2)
    c.expect(phi(U_pq((n - 3) / 2, (n - 3) / 2)) == static_cast<Count>(n / 2 + 2), "odd n=" + std::to_string(n));
  for (int n = 4; n <= 24; n += 2)
    c.expect(phi(U_pq((n - 2) / 2, (n - 4) / 2)) == static_cast<Count>(n / 2 + 2), "even n=" + std::to_string(n));
  return c.done("odd n<=25, even n<=24");
}

Outcome enumerator_soundness() {
  Checker c;
  std::size_t set_checks = 0;
  std::size_t count_checks = 0;
  auto compare_sets = [&](const Graph& g) {
    const auto fast = enumerate_mds(g);
    c.expect(fast == enumerate_mds_naive(g) && fast == oracle::brute_mds(g), "sets differ on " + graph6_encode(g));
    ++set_checks;
  };
  for (int n = 1; n <= 9; ++n)
    for (const auto& g : corpus().trees(n)) compare_sets(g);
  for (int n = 3; n <= 9; ++n)
    for (const auto& g : corpus().unicyclic(n)) compare_sets(g);
  for (const auto& g : random_connected_graphs(500, 1, 9, 0.3, 20240601)) compare_sets(g);

  auto compare_counts = [&](const Graph& g) {
    c.expect(phi(g) == enumerate_mds_naive(g).size(), "count differs on " + graph6_encode(g));
    ++count_checks;
  };
  for (int n = 10; n <= 12; ++n) {
    for (const auto& g : corpus().trees(n)) compare_counts(g);
    for (const auto& g : corpus().unicyclic(n)) compare_counts(g);
  }
  return c.done(std::to_string(set_checks) + " set comparisons, " + std::to_string(count_checks) +
                " further count comparisons");
}

Outcome identities() {
  Checker c;
  std::vector<Graph> pool;
  for (int n = 3; n <= 8; ++n)
    for (const auto& g : corpus().unicyclic(n)) pool.push_back(g);
  const auto pairs = random_union_pairs(pool, 200, 7);
  const auto r = check_identity_suite(pool, pairs);
  c.report(r);
  return c.done(std::to_string(pool.size()) + " graphs, " + std::to_string(pairs.size()) + " union pairs");
}

Outcome generators() {
  Checker c;
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47};
  const std::vector<std::size_t> unicyclic{1, 2, 5, 13, 33, 89, 240};
  for (int n = 1; n <= 9; ++n) {
    const auto generated = corpus().trees(n);
    c.expect(generated.size() == trees[n - 1], "tree count at n=" + std::to_string(n));
    c.expect(oracle::unlabeled_trees(n).size() == trees[n - 1], "tree oracle at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 9; ++n) {
    const auto generated = corpus().unicyclic(n);
    c.expect(generated.size() == unicyclic[n - 3], "unicyclic count at n=" + std::to_string(n));
    const auto reference = oracle::unlabeled_unicyclic(n);
    c.expect(reference.size() == unicyclic[n - 3], "unicyclic oracle at n=" + std::to_string(n));
    c.expect(unicyclic_codes(reference) == unicyclic_codes(generated), "unicyclic classes at n=" + std::to_string(n));
  }
  std::size_t round_trips = 0;
  auto round_trip = [&](const Graph& g) {
    const auto text = graph6_encode(g);
    c.expect(graph6_decode(text) == g && graph6_encode(graph6_decode(text)) == text, "graph6 round trip " + text);
    ++round_trips;
  };
  for (int n = 1; n <= 12; ++n) {
    for (const auto& g : corpus().trees(n)) round_trip(g);
    for (const auto& g : corpus().caterpillars(n)) round_trip(g);
    if (n >= 3)
      for (const auto& g : corpus().unicyclic(n)) round_trip(g);
  }
  return c.done("counts match oracles for n<=9; " + std::to_string(round_trips) + " graph6 round trips");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"main theorem, exhaustive", main_theorem},
      {"tree bound", tree_bound},
      {"path and caterpillar corollaries", path_caterpillar},
      {"cycle lemma", cycle_lemma},
      {"leaf-removal lemma", leaf_removal},
      {"surgery lemma", surgery},
      {"pendant-path lemma", pendant_path},
      {"pendant-path attachment closed forms", subcases},
      {"extremal-family equality direction", equality_direction},
      {"enumerator soundness", enumerator_soundness},
      {"identity suite", identities},
      {"generator correctness", generators},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.ok) ++failed;
    std::printf("%s %2zu %s: %s [%.2fs]\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.note.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
