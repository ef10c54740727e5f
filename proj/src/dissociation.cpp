#include "dissoc/dissociation.hpp"

#include <algorithm>
#include <stdexcept>

namespace dissoc {

VertexStatus parse_vertex_status(std::string_view text) {
  if (text == "excluded" || text == "out") return VertexStatus::Excluded;
  if (text == "in") return VertexStatus::InAny;
  if (text == "in0") return VertexStatus::InDegree0;
  if (text == "in1") return VertexStatus::InDegree1;
  throw std::invalid_argument("unknown vertex status '" + std::string(text) + "' (excluded|in|in0|in1)");
}

const char* to_string(VertexStatus status) {
  switch (status) {
    case VertexStatus::Excluded:
      return "excluded";
    case VertexStatus::InAny:
      return "in";
    case VertexStatus::InDegree0:
      return "in0";
    case VertexStatus::InDegree1:
      return "in1";
  }
  return "?";
}

bool is_dissociation(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((g.neighbors(v) & s).size() > 1) return false;
  return true;
}

bool addable(const Graph& g, VertexSet s, Vertex v) {
  if (s.contains(v)) throw std::invalid_argument("addable: vertex " + std::to_string(v) + " already in set");
  const VertexSet inside = g.neighbors(v) & s;
  if (inside.empty()) return true;
  if (inside.size() > 1) return false;
  return (g.neighbors(inside.first()) & s).empty();
}

bool is_maximal_dissociation(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()) || !is_dissociation(g, s)) return false;
  for (Vertex v : g.vertices() - s)
    if (addable(g, s, v)) return false;
  return true;
}

std::vector<VertexSet> enumerate_mds_naive(const Graph& g) {
  if (g.order() > kNaiveOrderCap)
    throw std::invalid_argument("naive enumeration is capped at order " + std::to_string(kNaiveOrderCap));
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 0; bits < limit; ++bits)
    if (is_maximal_dissociation(g, VertexSet{bits})) out.emplace_back(bits);
  return out;
}

namespace {

class MdsSearch {
 public:
  MdsSearch(const Graph& g, const std::function<void(VertexSet)>& visit)
      : g_(g), visit_(visit), settles_at_(g.order()) {
    // A vertex's addability is decided once it and all its neighbors are
    // assigned.
    for (Vertex v = 0; v < g.order(); ++v) {
      const Vertex last = std::max(v, g.neighbors(v).span() - 1);
      settles_at_[last].insert(v);
    }
  }

  void run() { descend(0); }

 private:
  void descend(Vertex i) {
    if (i == g_.order()) {
      if (is_maximal_dissociation(g_, in_)) visit_(in_);
      return;
    }
    const VertexSet nbrs = g_.neighbors(i);
    const VertexSet in_nbrs = nbrs & in_;

    // out
    if (settled_ok(i)) descend(i + 1);

    // in with induced degree 0
    if (in_nbrs.empty()) {
      in_.insert(i);
      free_.insert(i);
      if (settled_ok(i)) descend(i + 1);
      in_.erase(i);
      free_.erase(i);
    }

    // in with induced degree 1
    if (!nbrs.intersects(free_) && in_nbrs.size() <= 1 &&
        (in_nbrs.empty() || (g_.neighbors(in_nbrs.first()) & in_).empty())) {
      in_.insert(i);
      if (settled_ok(i)) descend(i + 1);
      in_.erase(i);
    }
  }

  bool settled_ok(Vertex i) const {
    for (Vertex v : settles_at_[i]) {
      const VertexSet inside = g_.neighbors(v) & in_;
      if (in_.contains(v)) {
        if (!free_.contains(v) && inside.size() != 1) return false;
      } else if (inside.empty() || (inside.size() == 1 && free_.contains(inside.first()))) {
        return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const std::function<void(VertexSet)>& visit_;
  std::vector<VertexSet> settles_at_;
  VertexSet in_;
  VertexSet free_;
};

}  // namespace

void for_each_mds(const Graph& g, const std::function<void(VertexSet)>& visit) {
  MdsSearch(g, visit).run();
}

std::vector<VertexSet> enumerate_mds(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_mds(g, [&](VertexSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

Count phi(const Graph& g) {
  Count n = 0;
  for_each_mds(g, [&](VertexSet) { ++n; });
  return n;
}

namespace {

bool satisfies(const Graph& g, VertexSet s, const VertexConstraint& c) {
  const bool in = s.contains(c.vertex);
  switch (c.status) {
    case VertexStatus::Excluded:
      return !in;
    case VertexStatus::InAny:
      return in;
    case VertexStatus::InDegree0:
      return in && !g.neighbors(c.vertex).intersects(s);
    case VertexStatus::InDegree1:
      return in && (g.neighbors(c.vertex) & s).size() == 1;
  }
  return false;
}

}  // namespace

Count phi_refined(const Graph& g, std::span<const VertexConstraint> constraints) {
  VertexSet seen;
  for (const auto& c : constraints) {
    if (c.vertex < 0 || c.vertex >= g.order())
      throw std::out_of_range("constraint vertex " + std::to_string(c.vertex) + " out of range");
    if (seen.contains(c.vertex))
      throw std::invalid_argument("vertex " + std::to_string(c.vertex) + " constrained twice");
    seen.insert(c.vertex);
  }
  Count n = 0;
  for_each_mds(g, [&](VertexSet s) {
    if (std::all_of(constraints.begin(), constraints.end(),
                    [&](const VertexConstraint& c) { return satisfies(g, s, c); }))
      ++n;
  });
  return n;
}

Count phi_after_deletion(const Graph& g, VertexSet removed) {
  if ((removed & g.vertices()) == g.vertices()) return 1;
  return phi(delete_vertices(g, removed).graph);
}

MdsProfile mds_profile(const Graph& g) {
  MdsProfile p;
  p.per_vertex.resize(g.order());
  for_each_mds(g, [&](VertexSet s) {
    ++p.total;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& slot = p.per_vertex[v];
      if (!s.contains(v))
        ++slot.excluded;
      else if (g.neighbors(v).intersects(s))
        ++slot.in_degree1;
      else
        ++slot.in_degree0;
    }
  });
  return p;
}

}  // namespace dissoc
