#include "dissoc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dissoc {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (Vertex v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1,64], got " + std::to_string(order));
}

}  // namespace

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  check_order(order);
  std::vector<VertexSet> rows(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for order " + std::to_string(order));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows[u].insert(v);
    rows[v].insert(u);
  }
  return Graph{std::move(rows)};
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  check_order(static_cast<int>(rows.size()));
  Graph g{std::move(rows)};
  g.validate();
  return g;
}

void Graph::validate() const {
  const VertexSet all = vertices();
  for (Vertex v = 0; v < order(); ++v) {
    const VertexSet row = rows_[v];
    if (!row.subset_of(all)) throw std::invalid_argument("adjacency row uses bits beyond order");
    if (row.contains(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (Vertex u : row)
      if (!rows_[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
  }
}

Vertex Graph::checked(Vertex v) const {
  if (v < 0 || v >= order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  return v;
}

Graph Graph::empty(int order) {
  check_order(order);
  return Graph{std::vector<VertexSet>(order)};
}

Graph Graph::path(int order) {
  check_order(order);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
  return from_edges(order, edges);
}

Graph Graph::cycle(int order) {
  if (order < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  check_order(order);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < order; ++v) edges.emplace_back(v, (v + 1) % order);
  return from_edges(order, edges);
}

Graph Graph::star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return from_edges(leaves + 1, edges);
}

Graph Graph::complete(int order) {
  check_order(order);
  std::vector<VertexSet> rows(order);
  for (Vertex v = 0; v < order; ++v) rows[v] = VertexSet::prefix(order).without(v);
  return Graph{std::move(rows)};
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : rows_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  checked(u);
  checked(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto rows = rows_;
  rows[u].insert(v);
  rows[v].insert(u);
  return Graph{std::move(rows)};
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  checked(u);
  checked(v);
  auto rows = rows_;
  rows[u].erase(v);
  rows[v].erase(u);
  return Graph{std::move(rows)};
}

Graph Graph::with_isolated(int count) const {
  check_order(order() + count);
  auto rows = rows_;
  rows.resize(rows.size() + count);
  return Graph{std::move(rows)};
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw std::invalid_argument("permutation size does not match graph order");
  VertexSet seen;
  for (Vertex p : perm) seen.insert(checked(p));
  if (seen != vertices()) throw std::invalid_argument("relabeling is not a permutation");
  std::vector<VertexSet> rows(order());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[u]) rows[perm[u]].insert(perm[v]);
  return Graph{std::move(rows)};
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "Graph(n=" << order() << ", edges=[";
  bool first_edge = true;
  for (auto [u, v] : edges()) {
    if (!first_edge) os << ',';
    os << '(' << u << ',' << v << ')';
    first_edge = false;
  }
  os << "])";
  return os.str();
}

Deletion delete_vertices(const Graph& g, VertexSet removed) {
  removed &= g.vertices();
  if (removed == g.vertices()) throw std::invalid_argument("cannot delete every vertex of a graph");
  Deletion d{Graph::empty(1), std::vector<Vertex>(g.order(), -1), {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    d.old_to_new[v] = static_cast<Vertex>(d.new_to_old.size());
    d.new_to_old.push_back(v);
  }
  std::vector<VertexSet> rows(d.new_to_old.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Vertex u : g.neighbors(d.new_to_old[i]) - removed) rows[i].insert(d.old_to_new[u]);
  d.graph = Graph::from_rows(std::move(rows));
  return d;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  if (offset + h.order() > kMaxOrder) throw std::invalid_argument("disjoint union exceeds 64 vertices");
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  for (VertexSet row : h.rows()) rows.emplace_back(row.bits() << offset);
  return Graph::from_rows(std::move(rows));
}

int component_count(const Graph& g) {
  VertexSet unseen = g.vertices();
  int components = 0;
  while (!unseen.empty()) {
    ++components;
    VertexSet frontier = VertexSet::single(unseen.first());
    VertexSet reached = frontier;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - reached;
      reached |= frontier;
    }
    unseen = unseen - reached;
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

Classification classify(const Graph& g) {
  Classification c;
  c.components = component_count(g);
  if (c.components == 1) {
    if (g.edge_count() == g.order() - 1)
      c.kind = GraphClass::Tree;
    else if (g.edge_count() == g.order())
      c.kind = GraphClass::Unicyclic;
  }
  return c;
}

bool is_tree(const Graph& g) { return classify(g).kind == GraphClass::Tree; }
bool is_unicyclic(const Graph& g) { return classify(g).kind == GraphClass::Unicyclic; }

VertexSet cycle_vertices(const Graph& g) {
  if (!is_unicyclic(g)) throw std::invalid_argument("cycle_vertices requires a unicyclic graph");
  VertexSet alive = g.vertices();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (Vertex v : alive) {
      if ((g.neighbors(v) & alive).size() <= 1) {
        alive.erase(v);
        stripped = true;
      }
    }
  }
  return alive;
}

std::vector<Vertex> cycle_sequence(const Graph& g) {
  const VertexSet on_cycle = cycle_vertices(g);
  std::vector<Vertex> seq;
  Vertex prev = -1;
  Vertex cur = on_cycle.first();
  do {
    seq.push_back(cur);
    const VertexSet next = (g.neighbors(cur) & on_cycle).without(prev < 0 ? cur : prev);
    Vertex step = next.first();
    prev = cur;
    cur = step;
  } while (cur != seq.front());
  return seq;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.insert(v);
  return out;
}

VertexSet support_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex leaf : leaves(g)) out |= g.neighbors(leaf);
  return out;
}

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  if (g.order() <= 2) return true;
  const VertexSet spine = g.vertices() - leaves(g);
  // The spine of a tree is connected; it is a path iff no spine vertex has
  // more than two spine neighbors.
  return std::all_of(spine.begin(), spine.end(),
                     [&](Vertex v) { return (g.neighbors(v) & spine).size() <= 2; });
}

const char* to_string(GraphClass kind) {
  switch (kind) {
    case GraphClass::Tree:
      return "tree";
    case GraphClass::Unicyclic:
      return "unicyclic";
    case GraphClass::Other:
      break;
  }
  return "other";
}

}  // namespace dissoc
