#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dissoc/vertex_set.hpp"

namespace dissoc {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order-1, order in [1, 64].
///
/// Adjacency is stored as one VertexSet row per vertex. Instances are
/// immutable; every surgery helper returns a new graph.
class Graph {
 public:
  /// Throws std::invalid_argument on an out-of-range order or endpoint and
  /// on self-loops. Duplicate edges collapse.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric, loop-free and confined to bits < rows.size().
  static Graph from_rows(std::vector<VertexSet> rows);

  static Graph empty(int order);
  static Graph path(int order);
  static Graph cycle(int order);
  static Graph star(int leaves);
  static Graph complete(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  VertexSet neighbors(Vertex v) const { return rows_.at(checked(v)); }
  VertexSet closed_neighborhood(Vertex v) const { return neighbors(v).with(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(checked(v)); }
  std::span<const VertexSet> rows() const { return rows_; }
  /// Edges (u, v) with u < v in row-major order.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Appends `count` isolated vertices labeled order()..order()+count-1.
  Graph with_isolated(int count) const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  std::string to_string() const;

 private:
  explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}
  Vertex checked(Vertex v) const;
  void validate() const;

  std::vector<VertexSet> rows_;
};

/// Result of removing a vertex set; survivors keep their relative order.
struct Deletion {
  Graph graph;
  /// old label -> new label, -1 for removed vertices.
  std::vector<Vertex> old_to_new;
  /// new label -> old label.
  std::vector<Vertex> new_to_old;

  Vertex map(Vertex old_label) const { return old_to_new.at(old_label); }
};

/// Throws std::invalid_argument if `removed` covers every vertex.
Deletion delete_vertices(const Graph& g, VertexSet removed);

/// G's vertices first, then H's shifted by G.order().
Graph disjoint_union(const Graph& g, const Graph& h);

enum class GraphClass { Tree, Unicyclic, Other };

struct Classification {
  GraphClass kind = GraphClass::Other;
  int components = 0;
};

int component_count(const Graph& g);
bool is_connected(const Graph& g);
Classification classify(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);

/// Vertices left after repeatedly stripping degree-1 vertices. Throws on
/// non-unicyclic input.
VertexSet cycle_vertices(const Graph& g);
/// The cycle of a unicyclic graph as a vertex sequence, starting at its
/// lowest vertex and continuing towards the lower-labeled neighbor.
std::vector<Vertex> cycle_sequence(const Graph& g);

VertexSet leaves(const Graph& g);
VertexSet support_vertices(const Graph& g);
bool is_caterpillar(const Graph& g);

const char* to_string(GraphClass kind);

}  // namespace dissoc
