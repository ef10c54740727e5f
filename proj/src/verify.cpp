#include "dissoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dissoc/families.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/parallel.hpp"

namespace dissoc {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

struct ItemResult {
  std::vector<Finding> violations;
  std::vector<Finding> observations;
  Count examined = 0;
};

void merge(VerificationReport& report, std::vector<ItemResult>& items) {
  for (auto& item : items) {
    report.graphs_examined += item.examined;
    std::move(item.violations.begin(), item.violations.end(), std::back_inserter(report.violations));
    std::move(item.observations.begin(), item.observations.end(), std::back_inserter(report.observations));
  }
}

std::int64_t as_int(Count c) { return static_cast<std::int64_t>(c); }

Finding finding(const Graph& g, std::string rule, Count lhs, Count rhs, std::string detail = {}) {
  return {graph6_encode(g), std::move(rule), as_int(lhs), as_int(rhs), std::move(detail)};
}

std::string code_of(const Graph& g, CodeKind kind) {
  return kind == CodeKind::FreeTree ? tree_code(g).bytes : unicyclic_code(g).bytes;
}

GraphRecord record(const Graph& g, CodeKind kind) { return {graph6_encode(g), code_of(g, kind)}; }

void sort_records(std::vector<GraphRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const GraphRecord& a, const GraphRecord& b) { return a.code < b.code; });
}

std::string vertex_label(Vertex v) { return "v" + std::to_string(v); }

struct Corpus {
  explicit Corpus(const VerifyOptions& opts) : fallback(opts.caps), source(opts.corpus ? *opts.corpus : fallback) {}
  GeneratedCorpus fallback;
  const CorpusSource& source;
};

Count floor_half_plus_two(int n) { return static_cast<Count>(n / 2 + 2); }
Count ceil_half_plus_one(int n) { return static_cast<Count>((n + 1) / 2 + 1); }

// Lower bound over `graphs` and exact equality set against `expected`.
VerificationReport bound_and_equality(std::string suite, int n, const std::vector<Graph>& graphs, CodeKind kind,
                                      Count bound, const std::vector<Graph>& expected, const VerifyOptions& opts) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = std::move(suite);
  report.order_min = report.order_max = n;
  report.graphs_examined = graphs.size();
  report.bound = bound;

  const auto phis = parallel_map(graphs.size(), opts.jobs, [&](std::size_t i) { return phi(graphs[i]); });
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (phis[i] < bound) report.violations.push_back(finding(graphs[i], "phi >= bound", phis[i], bound));

  if (!phis.empty()) {
    const Count min_phi = *std::min_element(phis.begin(), phis.end());
    report.min_phi = min_phi;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (phis[i] == min_phi) report.minimizers.push_back(record(graphs[i], kind));
    sort_records(report.minimizers);
    if (min_phi != bound)
      report.violations.push_back({"", "min_phi = bound", as_int(min_phi), as_int(bound), "bound not attained"});
  }

  for (const auto& g : expected) report.expected_minimizers.push_back(record(g, kind));
  sort_records(report.expected_minimizers);

  std::set<std::string> attaining;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (phis[i] == bound) attaining.insert(code_of(graphs[i], kind));
  std::set<std::string> predicted;
  for (const auto& rec : report.expected_minimizers) predicted.insert(rec.code);
  for (const auto& g : expected) {
    if (!attaining.contains(code_of(g, kind)))
      report.violations.push_back(finding(g, "predicted extremal attains bound", phi(g), bound, "missing from corpus minimizers"));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (phis[i] == bound && !predicted.contains(code_of(graphs[i], kind)))
      report.violations.push_back(finding(graphs[i], "bound attained only by predicted graphs", phis[i], bound,
                                          "unpredicted extremal graph"));
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace

VerificationReport check_main_theorem(int n, const VerifyOptions& opts) {
  Corpus corpus(opts);
  return bound_and_equality("main", n, corpus.source.unicyclic(n), CodeKind::Unicyclic, floor_half_plus_two(n),
                            extremal_unicyclic(n), opts);
}

VerificationReport check_tree_theorem(int n, const VerifyOptions& opts) {
  Corpus corpus(opts);
  return bound_and_equality("trees", n, corpus.source.trees(n), CodeKind::FreeTree, ceil_half_plus_one(n),
                            extremal_trees(n), opts);
}

VerificationReport check_path_corollary(int n_max, const VerifyOptions& opts) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = "paths";
  report.order_min = 3;
  report.order_max = n_max;
  const std::size_t count = n_max >= 3 ? n_max - 2 : 0;
  const auto phis = parallel_map(count, opts.jobs, [](std::size_t i) { return phi(Graph::path(static_cast<int>(i) + 3)); });
  for (std::size_t i = 0; i < count; ++i) {
    const int n = static_cast<int>(i) + 3;
    const Graph p = Graph::path(n);
    const Count bound = ceil_half_plus_one(n);
    ++report.graphs_examined;
    if (phis[i] < bound) report.violations.push_back(finding(p, "phi >= ceil(n/2)+1", phis[i], bound));
    const bool equal = phis[i] == bound;
    const bool predicted = n >= 3 && n <= 5;
    if (equal) report.observations.push_back(finding(p, "equality", phis[i], bound, "n=" + std::to_string(n)));
    if (equal != predicted)
      report.violations.push_back(finding(p, "equality iff n in {3,4,5}", phis[i], bound, "n=" + std::to_string(n)));
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_caterpillar_corollary(int n_max, const VerifyOptions& opts) {
  Stopwatch clock;
  Corpus corpus(opts);
  VerificationReport report;
  report.suite = "caterpillars";
  report.order_min = 3;
  report.order_max = n_max;

  std::set<std::string> predicted;
  for (const auto& g : extremal_caterpillars()) {
    report.expected_minimizers.push_back(record(g, CodeKind::FreeTree));
    predicted.insert(report.expected_minimizers.back().code);
  }
  sort_records(report.expected_minimizers);

  std::set<std::string> attaining;
  for (int n = 3; n <= n_max; ++n) {
    const auto graphs = corpus.source.caterpillars(n);
    const Count bound = ceil_half_plus_one(n);
    const auto phis = parallel_map(graphs.size(), opts.jobs, [&](std::size_t i) { return phi(graphs[i]); });
    report.graphs_examined += graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (phis[i] < bound) report.violations.push_back(finding(graphs[i], "phi >= ceil(n/2)+1", phis[i], bound));
      if (phis[i] != bound) continue;
      auto rec = record(graphs[i], CodeKind::FreeTree);
      attaining.insert(rec.code);
      if (!predicted.contains(rec.code))
        report.violations.push_back(
            finding(graphs[i], "equality only on listed caterpillars", phis[i], bound, "unpredicted extremal graph"));
      report.minimizers.push_back(std::move(rec));
    }
  }
  sort_records(report.minimizers);
  for (const auto& g : extremal_caterpillars()) {
    if (g.order() > n_max) continue;
    if (!attaining.contains(tree_code(g).bytes))
      report.violations.push_back(finding(g, "listed caterpillar attains bound", phi(g), ceil_half_plus_one(g.order())));
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_cycle_lemma(int n_min, int n_max, const VerifyOptions& opts) {
  Stopwatch clock;
  if (n_min < 4) throw std::invalid_argument("cycle lemma starts at n = 4");
  VerificationReport report;
  report.suite = "cycle";
  report.order_min = n_min;
  report.order_max = n_max;
  const std::size_t count = n_max >= n_min ? n_max - n_min + 1 : 0;
  const auto diffs = parallel_map(count, opts.jobs, [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    return std::pair{phi(Graph::cycle(n)), phi(Graph::path(n - 1))};
  });
  for (std::size_t i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(i);
    const Graph c = Graph::cycle(n);
    const auto [cyc, path] = diffs[i];
    const std::string label = "n=" + std::to_string(n);
    ++report.graphs_examined;
    const auto diff = as_int(cyc) - as_int(path);
    report.observations.push_back(finding(c, "phi(C_n) vs phi(P_{n-1})", cyc, path,
                                          label + " difference=" + std::to_string(diff) +
                                              (diff == 1 ? " equality" : "")));
    if (cyc < path + 1) report.violations.push_back(finding(c, "phi(C_n) >= phi(P_{n-1}) + 1", cyc, path + 1, label));
    if ((cyc == path + 1) != (n == 6))
      report.violations.push_back(finding(c, "equality iff n = 6", cyc, path + 1, label));
    if (n > 6 && cyc < path + 2)
      report.violations.push_back(finding(c, "phi(C_n) >= phi(P_{n-1}) + 2 for n > 6", cyc, path + 2, label));
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_leaf_removal_lemma(int n, const VerifyOptions& opts) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = "leaf-removal";
  report.order_min = report.order_max = n;
  std::vector<Graph> graphs;
  for (int r = 3; r < n; ++r) {
    const int t = n - r;
    if (t < 1 || t > r) continue;
    auto members = enumerate_U_rt_class(r, t);
    std::move(members.begin(), members.end(), std::back_inserter(graphs));
  }
  auto items = parallel_map(graphs.size(), opts.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    ItemResult out;
    out.examined = 1;
    const Count total = phi(g);
    for (Vertex y : leaves(g)) {
      const Vertex x = g.neighbors(y).first();
      const VertexSet others = g.neighbors(x).without(y);
      const Vertex w = others.first();
      const Vertex z = others.without(w).first();
      const std::string at = "y=" + vertex_label(y) + " x=" + vertex_label(x);
      const Deletion d = delete_vertices(g, g.closed_neighborhood(y));
      const Graph& u = d.graph;
      const Count rest = phi(u);
      if (total < rest + 2) out.violations.push_back(finding(g, "phi(G) >= phi(G-N[y]) + 2", total, rest + 2, at));
      if (!is_caterpillar(u) || u.order() != n - 2)
        out.violations.push_back(finding(g, "G-N[y] is a caterpillar of order n-2", u.order(), n - 2, at));

      const Count x_out = phi_refined(g, {{x, VertexStatus::Excluded}});
      const Count wz_out = phi_refined(u, {{d.map(w), VertexStatus::Excluded}, {d.map(z), VertexStatus::Excluded}});
      if (x_out + wz_out != rest)
        out.violations.push_back(finding(g, "phi(G,x-bar) = phi(U) - phi(U,w-bar z-bar)", x_out, rest - wz_out, at));

      const Count xw = phi_refined(g, {{x, VertexStatus::InDegree1}, {w, VertexStatus::InDegree1}});
      const Count xz = phi_refined(g, {{x, VertexStatus::InDegree1}, {z, VertexStatus::InDegree1}});
      if (xw < 1) out.violations.push_back(finding(g, "phi(G,x1 w1) >= 1", xw, 1, at));
      if (xz < 1) out.violations.push_back(finding(g, "phi(G,x1 z1) >= 1", xz, 1, at));
    }
    return out;
  });
  merge(report, items);
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_surgery_lemma(int order_cap, int k_max, const VerifyOptions& opts) {
  Stopwatch clock;
  if (k_max < 2) throw std::invalid_argument("surgery lemma needs k_max >= 2");
  Corpus corpus(opts);
  VerificationReport report;
  report.suite = "surgery";
  report.order_min = 3;
  report.order_max = order_cap;
  std::vector<Graph> bases;
  for (int m = 3; m <= order_cap; ++m) {
    auto level = corpus.source.unicyclic(m);
    std::move(level.begin(), level.end(), std::back_inserter(bases));
  }
  auto items = parallel_map(bases.size(), opts.jobs, [&](std::size_t i) {
    const Graph& u = bases[i];
    const int m = u.order();
    ItemResult out;
    for (Vertex w : u.vertices() - support_vertices(u)) {
      const Count rest = phi_after_deletion(u, u.closed_neighborhood(w));
      const Count u_w0 = phi_refined(u, {{w, VertexStatus::InDegree0}});
      for (int k = 2; k <= k_max; ++k) {
        // v_j = m + j - 1 for j = 1..k
        Graph g1 = u.with_isolated(k);
        for (int j = 0; j < k; ++j) g1 = g1.with_edge(w, m + j);
        const Vertex v1 = m;
        const Vertex vk = m + k - 1;
        const Graph g2 = g1.without_edge(w, vk).with_edge(v1, vk);
        ++out.examined;

        const std::string at = "w=" + vertex_label(w) + " k=" + std::to_string(k);
        const Count p1 = phi(g1);
        const Count p2 = phi(g2);
        if (p1 < p2) out.violations.push_back(finding(g1, "phi(G1) >= phi(G2)", p1, p2, at));

        const Count g1_out = phi_refined(g1, {{w, VertexStatus::Excluded}});
        const Count g2_out = phi_refined(g2, {{w, VertexStatus::Excluded}});
        if (g1_out != g2_out) out.violations.push_back(finding(g1, "claim: phi(G2,w-bar) = phi(G1,w-bar)", g2_out, g1_out, at));

        const Count g1_w1 = phi_refined(g1, {{w, VertexStatus::InDegree1}});
        const Count g2_w1 = phi_refined(g2, {{w, VertexStatus::InDegree1}});
        if (g2_w1 + rest != g1_w1)
          out.violations.push_back(
              finding(g1, "claim: phi(G2,w1) = phi(G1,w1) - phi(U-N[w])", g2_w1, g1_w1 - std::min(g1_w1, rest), at));

        if (p1 == p2) {
          out.observations.push_back(finding(g1, "equality phi(G1) = phi(G2): phi(U-N[w]) vs phi(U,w0)", rest, u_w0, at));
          if (rest != u_w0)
            out.violations.push_back(finding(g1, "equality needs phi(U-N[w]) = phi(U,w0)", rest, u_w0, at));
        }
      }
    }
    return out;
  });
  merge(report, items);
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_pendant_path_lemma(int n, const VerifyOptions& opts) {
  Stopwatch clock;
  Corpus corpus(opts);
  VerificationReport report;
  report.suite = "pendant-path";
  report.order_min = report.order_max = n;
  const auto graphs = corpus.source.unicyclic(n);
  struct Tally {
    Count instances = 0;
    Count claim2_equal = 0;
  };
  std::vector<Tally> tallies(graphs.size());
  auto items = parallel_map(graphs.size(), opts.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    ItemResult out;
    Tally tally;
    const Count total = phi(g);
    for (Vertex v : leaves(g)) {
      const Vertex u = g.neighbors(v).first();
      if (g.degree(u) != 2) continue;
      const Vertex w = g.neighbors(u).without(v).first();
      ++tally.instances;
      const Deletion d = delete_vertices(g, VertexSet::of({u, v}));
      const Graph& h = d.graph;
      const Vertex hw = d.map(w);
      const std::string at = "w=" + vertex_label(w) + " u=" + vertex_label(u) + " v=" + vertex_label(v);

      const Count rest = phi(h);
      if (total < rest + 1) out.violations.push_back(finding(g, "phi(G) >= phi(G-{u,v}) + 1", total, rest + 1, at));

      const Count g_w0 = phi_refined(g, {{w, VertexStatus::InDegree0}});
      const Count h_w0 = phi_refined(h, {{hw, VertexStatus::InDegree0}});
      if (g_w0 != h_w0) out.violations.push_back(finding(g, "claim: phi(G,w0) = phi(G-{u,v},w0)", g_w0, h_w0, at));

      const Count g_w1 = phi_refined(g, {{w, VertexStatus::InDegree1}});
      const Count h_w1 = phi_refined(h, {{hw, VertexStatus::InDegree1}});
      if (g_w1 < h_w1 + 1)
        out.violations.push_back(finding(g, "claim: phi(G,w1) >= phi(G-{u,v},w1) + 1", g_w1, h_w1 + 1, at));
      if (g_w1 == h_w1 + 1) ++tally.claim2_equal;

      const Count g_out = phi_refined(g, {{w, VertexStatus::Excluded}});
      const Count h_out = phi_refined(h, {{hw, VertexStatus::Excluded}});
      if (g_out < h_out) out.violations.push_back(finding(g, "claim: phi(G,w-bar) >= phi(G-{u,v},w-bar)", g_out, h_out, at));
    }
    out.examined = tally.instances > 0 ? 1 : 0;
    tallies[i] = tally;
    return out;
  });
  merge(report, items);
  Tally sum;
  for (const auto& t : tallies) {
    sum.instances += t.instances;
    sum.claim2_equal += t.claim2_equal;
  }
  report.observations.push_back({"", "pendant-path instances", as_int(sum.instances), as_int(report.graphs_examined),
                                 "instances vs graphs containing one"});
  report.observations.push_back({"", "phi(G,w1) = phi(G-{u,v},w1) + 1 holds with equality", as_int(sum.claim2_equal),
                                 as_int(sum.instances), "equal instances vs all instances"});
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_case3_subcases(int n, const VerifyOptions& opts) {
  Stopwatch clock;
  if (n < 7) throw std::invalid_argument("subcase suite needs n >= 7");
  VerificationReport report;
  report.suite = "subcases";
  report.order_min = report.order_max = n;
  report.bound = floor_half_plus_two(n);

  const bool odd = n % 2 == 1;
  const int p = odd ? (n - 5) / 2 : (n - 4) / 2;
  const int q = odd ? (n - 5) / 2 : (n - 6) / 2;
  const Graph h = U_pq(p, q);
  const VertexSet triangle = VertexSet::of({p + q + 1, p + q + 2});

  enum class Role { Leaf, TriangleNonCenter, Center, Other };
  auto role_of = [&](Vertex w) {
    if (w == 0) return Role::Center;
    if (triangle.contains(w)) return Role::TriangleNonCenter;
    if (h.degree(w) == 1) return Role::Leaf;
    return Role::Other;
  };
  auto role_name = [](Role r) {
    switch (r) {
      case Role::Leaf:
        return "leaf";
      case Role::TriangleNonCenter:
        return "triangle non-center";
      case Role::Center:
        return "center";
      case Role::Other:
        break;
    }
    return "other";
  };
  const Count leaf_high = odd ? static_cast<Count>((3 * n - 1) / 2) : static_cast<Count>((3 * n + 2) / 2);
  const Count leaf_low = odd ? leaf_high : static_cast<Count>((n + 6) / 2);
  const Count generic = odd ? static_cast<Count>((n + 5) / 2) : static_cast<Count>((n + 6) / 2);
  auto expected_for = [&](Role r) -> std::vector<Count> {
    switch (r) {
      case Role::Leaf:
        return odd ? std::vector<Count>{leaf_high} : std::vector<Count>{leaf_high, leaf_low};
      case Role::Center:
        return {floor_half_plus_two(n)};
      case Role::TriangleNonCenter:
      case Role::Other:
        break;
    }
    return {generic};
  };

  // One representative attachment vertex per orbit, keyed by the code of
  // the attached graph.
  std::map<std::string, std::pair<Vertex, Graph>> orbits;
  for (Vertex w = 0; w < h.order(); ++w) {
    const Vertex u = h.order();
    const Vertex v = u + 1;
    Graph g = h.with_isolated(2).with_edge(w, u).with_edge(u, v);
    auto code = unicyclic_code(g).bytes;
    orbits.try_emplace(std::move(code), w, std::move(g));
  }
  std::vector<std::pair<Vertex, Graph>> reps;
  for (auto& [code, rep] : orbits) reps.push_back(std::move(rep));
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const auto phis = parallel_map(reps.size(), opts.jobs, [&](std::size_t i) { return phi(reps[i].second); });
  std::set<Count> leaf_values;
  Count min_phi = ~Count{0};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& [w, g] = reps[i];
    const Role role = role_of(w);
    const auto expected = expected_for(role);
    const std::string at = std::string(role_name(role)) + " w=" + vertex_label(w);
    ++report.graphs_examined;
    min_phi = std::min(min_phi, phis[i]);
    report.observations.push_back(finding(g, std::string("attach at ") + role_name(role), phis[i], expected.front(), at));
    if (std::find(expected.begin(), expected.end(), phis[i]) == expected.end())
      report.violations.push_back(
          finding(g, std::string("closed form for ") + role_name(role), phis[i], expected.front(), at));
    if (role == Role::Leaf) leaf_values.insert(phis[i]);
    if (phis[i] == floor_half_plus_two(n)) report.minimizers.push_back(record(g, CodeKind::Unicyclic));
  }
  if (!reps.empty()) report.min_phi = min_phi;
  sort_records(report.minimizers);
  if (!odd) {
    for (Count value : {leaf_high, leaf_low})
      if (!leaf_values.contains(value))
        report.violations.push_back({graph6_encode(h), "leaf orbits realize both closed forms", 0, as_int(value),
                                     "value never observed at a leaf"});
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_identity_suite(std::span<const Graph> corpus, std::span<const std::pair<Graph, Graph>> pairs,
                                        const VerifyOptions& opts) {
  Stopwatch clock;
  VerificationReport report;
  report.suite = "identities";
  if (!corpus.empty()) {
    auto [lo, hi] = std::minmax_element(corpus.begin(), corpus.end(),
                                        [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
    report.order_min = lo->order();
    report.order_max = hi->order();
  }
  auto items = parallel_map(corpus.size(), opts.jobs, [&](std::size_t i) {
    const Graph& g = corpus[i];
    ItemResult out;
    out.examined = 1;
    const Count total = phi(g);
    const MdsProfile profile = mds_profile(g);
    if (profile.total != total) out.violations.push_back(finding(g, "profile total = phi", profile.total, total));
    const VertexSet support = support_vertices(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::string at = vertex_label(v);
      const VertexProfile refined{phi_refined(g, {{v, VertexStatus::Excluded}}),
                                  phi_refined(g, {{v, VertexStatus::InDegree0}}),
                                  phi_refined(g, {{v, VertexStatus::InDegree1}})};
      const Count in_any = phi_refined(g, {{v, VertexStatus::InAny}});
      if (refined.total() != total)
        out.violations.push_back(finding(g, "phi = phi(v-bar) + phi(v0) + phi(v1)", refined.total(), total, at));
      if (in_any + refined.excluded != total)
        out.violations.push_back(finding(g, "phi = phi(v) + phi(v-bar)", in_any + refined.excluded, total, at));
      if (refined != profile.per_vertex[v])
        out.violations.push_back(finding(g, "profile triple = refined counts", profile.per_vertex[v].total(),
                                         refined.total(), at));
      if (support.contains(v) && refined.in_degree0 != 0)
        out.violations.push_back(finding(g, "support vertex: phi(G,u0) = 0", refined.in_degree0, 0, at));
      const Count minus_v = phi_after_deletion(g, VertexSet::single(v));
      if (minus_v < refined.excluded)
        out.violations.push_back(finding(g, "phi(G-u) >= phi(G,u-bar)", minus_v, refined.excluded, at));
      const Count minus_closed = phi_after_deletion(g, g.closed_neighborhood(v));
      if (minus_closed < refined.in_degree0)
        out.violations.push_back(finding(g, "phi(G-N[u]) >= phi(G,u0)", minus_closed, refined.in_degree0, at));
    }
    return out;
  });
  merge(report, items);

  const auto products = parallel_map(pairs.size(), opts.jobs, [&](std::size_t i) {
    const auto& [a, b] = pairs[i];
    return std::pair{phi(disjoint_union(a, b)), phi(a) * phi(b)};
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ++report.graphs_examined;
    if (products[i].first != products[i].second)
      report.violations.push_back(finding(disjoint_union(pairs[i].first, pairs[i].second),
                                          "phi(G u H) = phi(G) phi(H)", products[i].first, products[i].second));
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

std::vector<std::pair<Graph, Graph>> random_union_pairs(std::span<const Graph> pool, std::size_t count,
                                                        std::uint64_t seed) {
  if (pool.empty()) throw std::invalid_argument("random_union_pairs needs a non-empty pool");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::pair<Graph, Graph>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Graph& a = pool[pick(rng)];
    const Graph& b = pool[pick(rng)];
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<Graph> random_connected_graphs(std::size_t count, int min_order, int max_order, double density,
                                           std::uint64_t seed) {
  if (min_order < 1 || max_order < min_order || max_order > kMaxOrder)
    throw std::invalid_argument("random_connected_graphs: bad order range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order_dist(min_order, max_order);
  std::bernoulli_distribution extra(density);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = order_dist(rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
      std::uniform_int_distribution<Vertex> parent(0, v - 1);
      edges.emplace_back(perm[v], perm[parent(rng)]);
    }
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (extra(rng)) edges.emplace_back(a, b);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

}  // namespace dissoc
