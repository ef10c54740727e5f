#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dissoc/corpus.hpp"
#include "dissoc/report.hpp"

namespace dissoc {

struct VerifyOptions {
  /// Worker threads; reports do not depend on this.
  int jobs = 1;
  GeneratorCaps caps;
  /// Corpus provider; null means generate with `caps`.
  const CorpusSource* corpus = nullptr;
};

/// Unicyclic graphs of order n: phi >= floor(n/2) + 2, and the graphs
/// attaining it are exactly extremal_unicyclic(n).
VerificationReport check_main_theorem(int n, const VerifyOptions& opts = {});

/// Trees of order n: phi >= ceil(n/2) + 1, attained exactly by
/// extremal_trees(n).
VerificationReport check_tree_theorem(int n, const VerifyOptions& opts = {});

/// Paths of order 3..n_max: phi >= ceil(n/2) + 1, equality only for n in {3,4,5}.
VerificationReport check_path_corollary(int n_max, const VerifyOptions& opts = {});

/// Caterpillars of order 3..n_max: same bound, equality only on
/// extremal_caterpillars().
VerificationReport check_caterpillar_corollary(int n_max, const VerifyOptions& opts = {});

/// phi(C_n) - phi(P_{n-1}) >= 1 with equality only at n = 6, and >= 2 for n > 6.
VerificationReport check_cycle_lemma(int n_min, int n_max, const VerifyOptions& opts = {});

/// Every cycle-with-pendants graph of order n (t >= 1) and each leaf y:
/// phi(G) >= phi(G - N[y]) + 2, plus the refined counts used to prove it.
VerificationReport check_leaf_removal_lemma(int n, const VerifyOptions& opts = {});

/// Leaf-moving surgery on every unicyclic U of order 3..order_cap, every
/// non-support w and k in [2, k_max]: phi(G1) >= phi(G2) and both claims.
VerificationReport check_surgery_lemma(int order_cap, int k_max, const VerifyOptions& opts = {});

/// Unicyclic graphs of order n with a pendant path w-u-v, deg(u) = 2:
/// phi(G) >= phi(G - {u,v}) + 1 and the three claims behind it.
VerificationReport check_pendant_path_lemma(int n, const VerifyOptions& opts = {});

/// Attaches a pendant path at each vertex orbit of the order-(n-2)
/// extremal graph and compares phi with the closed forms per orbit role.
VerificationReport check_case3_subcases(int n, const VerifyOptions& opts = {});

/// Per graph: per-vertex decomposition, support-vertex vanishing, both
/// deletion inequalities and profile consistency; per pair: phi of the
/// disjoint union is the product.
VerificationReport check_identity_suite(std::span<const Graph> corpus,
                                        std::span<const std::pair<Graph, Graph>> pairs,
                                        const VerifyOptions& opts = {});

/// `count` pairs drawn from `pool` with a fixed-seed generator.
std::vector<std::pair<Graph, Graph>> random_union_pairs(std::span<const Graph> pool, std::size_t count,
                                                        std::uint64_t seed);

/// Connected graphs drawn edge by edge with a fixed-seed generator: a random
/// spanning tree plus each remaining pair with probability `density`.
std::vector<Graph> random_connected_graphs(std::size_t count, int min_order, int max_order, double density,
                                           std::uint64_t seed);

}  // namespace dissoc
