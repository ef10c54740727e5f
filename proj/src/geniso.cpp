#include "dissoc/geniso.hpp"

#include <algorithm>
#include <numeric>

namespace dissoc {

const char* to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::RootedTree:
      return "rooted-tree";
    case CodeKind::FreeTree:
      return "free-tree";
    case CodeKind::Unicyclic:
      return "unicyclic";
  }
  return "?";
}

namespace {

// AHU code of the subtree hanging at `root`, never entering `blocked`.
std::string rooted_code(const Graph& g, Vertex root, Vertex parent, VertexSet blocked) {
  std::vector<std::string> children;
  for (Vertex c : g.neighbors(root) - blocked) {
    if (c == parent) continue;
    children.push_back(rooted_code(g, c, root, blocked));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

void require_tree(const Graph& g, const char* who) {
  if (!is_tree(g)) throw std::invalid_argument(std::string(who) + " requires a tree");
}

// Vertices whose removal leaves the smallest largest component.
std::vector<Vertex> centroids(const Graph& tree) {
  const int n = tree.order();
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex c : tree.neighbors(order[i]))
      if (c != parent[order[i]]) {
        parent[c] = order[i];
        order.push_back(c);
      }
  std::vector<int> size(n, 1);
  std::vector<int> heaviest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (parent[v] >= 0) {
      size[parent[v]] += size[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
  }
  int best = n;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    const int worst = std::max(heaviest[v], n - size[v]);
    if (worst < best) {
      best = worst;
      out.clear();
    }
    if (worst == best) out.push_back(v);
  }
  return out;
}

}  // namespace

CanonicalCode ahu_code(const Graph& tree, Vertex root) {
  require_tree(tree, "ahu_code");
  if (root < 0 || root >= tree.order()) throw std::out_of_range("ahu_code: root out of range");
  return {CodeKind::RootedTree, rooted_code(tree, root, -1, {})};
}

CanonicalCode tree_code(const Graph& tree) {
  require_tree(tree, "tree_code");
  std::string best;
  for (Vertex c : centroids(tree)) {
    std::string code = rooted_code(tree, c, -1, {});
    if (best.empty() || code < best) best = std::move(code);
  }
  return {CodeKind::FreeTree, std::move(best)};
}

std::vector<std::string> least_dihedral_rotation(const std::vector<std::string>& seq) {
  const std::size_t r = seq.size();
  std::vector<std::string> best = seq;
  std::vector<std::string> cand(r);
  for (std::size_t shift = 0; shift < r; ++shift) {
    for (int dir : {1, -1}) {
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t src = dir > 0 ? (shift + i) % r : (shift + r - i) % r;
        cand[i] = seq[src];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

namespace {

std::string necklace_bytes(const std::vector<std::string>& canonical) {
  std::string out = std::to_string(canonical.size()) + ":";
  for (const auto& c : canonical) out += c;
  return out;
}

}  // namespace

CanonicalCode unicyclic_code(const Graph& g) {
  const std::vector<Vertex> cycle = cycle_sequence(g);
  VertexSet on_cycle;
  for (Vertex v : cycle) on_cycle.insert(v);
  std::vector<std::string> hanging;
  hanging.reserve(cycle.size());
  for (Vertex v : cycle) hanging.push_back(rooted_code(g, v, -1, on_cycle.without(v)));
  return {CodeKind::Unicyclic, necklace_bytes(least_dihedral_rotation(hanging))};
}

bool is_isomorphic_bruteforce(const Graph& g, const Graph& h) {
  if (g.order() > kBruteforceIsoCap || h.order() > kBruteforceIsoCap)
    throw std::invalid_argument("brute-force isomorphism is capped at order " +
                                std::to_string(kBruteforceIsoCap));
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  const int n = g.order();
  std::vector<int> dg(n);
  std::vector<int> dh(n);
  for (Vertex v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto a = dg;
    auto b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<Vertex> image(n, -1);
  VertexSet used;
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex cand = 0; cand < n; ++cand) {
      if (used.contains(cand) || dh[cand] != dg[v]) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u)
        consistent = g.has_edge(u, v) == h.has_edge(image[u], cand);
      if (!consistent) continue;
      image[v] = cand;
      used.insert(cand);
      if (extend(v + 1)) return true;
      used.erase(cand);
    }
    return false;
  };
  return extend(0);
}

const RootedTreeTable& RootedTreeCatalog::of_size(int size) {
  if (size < 1) throw std::invalid_argument("rooted trees need at least one vertex");
  if (tables_.empty()) tables_.push_back({{"()", Graph::empty(1)}});
  while (static_cast<int>(tables_.size()) < size) {
    RootedTreeTable next;
    for (const auto& [code, tree] : tables_.back()) {
      for (Vertex v = 0; v < tree.order(); ++v) {
        Graph grown = tree.with_isolated(1).with_edge(v, tree.order());
        auto key = rooted_code(grown, 0, -1, {});
        next.try_emplace(std::move(key), std::move(grown));
      }
    }
    tables_.push_back(std::move(next));
  }
  return tables_[size - 1];
}

std::vector<Graph> generate_trees(int n, const GeneratorCaps& caps) {
  if (n < 1) throw std::invalid_argument("tree order must be at least 1");
  if (n > caps.trees)
    throw CapExceeded("tree order " + std::to_string(n) + " above cap " + std::to_string(caps.trees));
  std::map<std::string, Graph> level{{"()", Graph::empty(1)}};
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [code, tree] : level) {
      for (Vertex v = 0; v < tree.order(); ++v) {
        Graph grown = tree.with_isolated(1).with_edge(v, tree.order());
        auto key = tree_code(grown).bytes;
        next.try_emplace(std::move(key), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, tree] : level) out.push_back(std::move(tree));
  return out;
}

std::vector<Graph> generate_caterpillars(int n, const GeneratorCaps& caps) {
  auto trees = generate_trees(n, caps);
  std::erase_if(trees, [](const Graph& t) { return !is_caterpillar(t); });
  return trees;
}

namespace {

// Calls visit(sizes) for every composition of `total` into `parts` positive
// parts whose sequence is least among its rotations and reflections.
void for_each_least_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sizes(parts, 1);
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == parts - 1) {
      sizes[pos] = remaining;
      std::vector<std::string> as_text(parts);
      for (int i = 0; i < parts; ++i) as_text[i] = std::string(1, static_cast<char>(sizes[i]));
      if (least_dihedral_rotation(as_text) == as_text) visit(sizes);
      return;
    }
    for (int s = 1; s <= remaining - (parts - pos - 1); ++s) {
      sizes[pos] = s;
      fill(pos + 1, remaining - s);
    }
  };
  fill(0, total);
}

// Cycle 0..r-1 with trees[i] planted (root identified) at cycle vertex i.
Graph plant(const std::vector<const Graph*>& trees) {
  const int r = static_cast<int>(trees.size());
  int n = 0;
  for (const Graph* t : trees) n += t->order();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < r; ++v) edges.emplace_back(v, (v + 1) % r);
  Vertex next = r;
  for (int i = 0; i < r; ++i) {
    const Graph& t = *trees[i];
    std::vector<Vertex> label(t.order());
    label[0] = i;
    for (Vertex v = 1; v < t.order(); ++v) label[v] = next++;
    for (auto [a, b] : t.edges()) edges.emplace_back(label[a], label[b]);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

std::vector<Graph> generate_unicyclic(int n, const GeneratorCaps& caps) {
  if (n < 3) throw std::invalid_argument("unicyclic order must be at least 3");
  if (n > caps.unicyclic)
    throw CapExceeded("unicyclic order " + std::to_string(n) + " above cap " + std::to_string(caps.unicyclic));
  RootedTreeCatalog catalog;
  catalog.prepare(n - 2);
  std::vector<std::vector<std::pair<const std::string*, const Graph*>>> by_size(n - 1);
  for (int s = 1; s <= n - 2; ++s)
    for (const auto& [code, tree] : catalog.of_size(s)) by_size[s].emplace_back(&code, &tree);

  std::vector<Graph> out;
  for (int r = 3; r <= n; ++r) {
    // Every unicyclic graph has a rotation/reflection whose size sequence is
    // least, so restricting to least compositions loses nothing.
    std::map<std::string, Graph> found;
    for_each_least_composition(n, r, [&](const std::vector<int>& sizes) {
      std::vector<std::string> codes(r);
      std::vector<const Graph*> trees(r);
      std::function<void(int)> choose = [&](int pos) {
        if (pos == r) {
          auto key = necklace_bytes(least_dihedral_rotation(codes));
          if (!found.contains(key)) found.emplace(std::move(key), plant(trees));
          return;
        }
        for (const auto& [code, tree] : by_size[sizes[pos]]) {
          codes[pos] = *code;
          trees[pos] = tree;
          choose(pos + 1);
        }
      };
      choose(0);
    });
    for (auto& [code, g] : found) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace dissoc
