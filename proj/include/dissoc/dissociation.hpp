#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

using Count = std::uint64_t;

/// How a maximal dissociation set must treat one vertex.
enum class VertexStatus {
  Excluded,   // v not in S
  InAny,      // v in S
  InDegree0,  // v in S, no neighbor in S
  InDegree1,  // v in S, exactly one neighbor in S
};

struct VertexConstraint {
  Vertex vertex = 0;
  VertexStatus status = VertexStatus::InAny;

  friend bool operator==(const VertexConstraint&, const VertexConstraint&) = default;
};

/// Parses "excluded", "in", "in0" or "in1".
VertexStatus parse_vertex_status(std::string_view text);
const char* to_string(VertexStatus status);

bool is_dissociation(const Graph& g, VertexSet s);

/// Whether S + {v} is still a dissociation set, given that S is one.
/// Throws std::invalid_argument if v is already in S.
bool addable(const Graph& g, VertexSet s, Vertex v);

bool is_maximal_dissociation(const Graph& g, VertexSet s);

/// Largest order accepted by the subset-filter reference enumerator.
inline constexpr int kNaiveOrderCap = 24;

/// Filters all 2^n subsets. Sorted ascending by packed value.
std::vector<VertexSet> enumerate_mds_naive(const Graph& g);

/// Calls `visit` once per maximal dissociation set, in search order
/// (not sorted). Backtracks over per-vertex states {out, in-free,
/// in-matched} with consistency and early maximality pruning; every
/// completed assignment gets a final explicit maximality check.
void for_each_mds(const Graph& g, const std::function<void(VertexSet)>& visit);

/// All maximal dissociation sets, sorted ascending by packed value.
std::vector<VertexSet> enumerate_mds(const Graph& g);

Count phi(const Graph& g);

/// Number of maximal dissociation sets meeting every constraint. Throws
/// std::invalid_argument when a vertex is constrained twice.
Count phi_refined(const Graph& g, std::span<const VertexConstraint> constraints);
inline Count phi_refined(const Graph& g, std::initializer_list<VertexConstraint> constraints) {
  return phi_refined(g, std::span<const VertexConstraint>(constraints.begin(), constraints.size()));
}

/// phi of the graph left after deleting `removed`; deleting every vertex
/// leaves the null graph, whose only maximal dissociation set is empty.
Count phi_after_deletion(const Graph& g, VertexSet removed);

struct VertexProfile {
  Count excluded = 0;
  Count in_degree0 = 0;
  Count in_degree1 = 0;

  Count total() const { return excluded + in_degree0 + in_degree1; }
  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

struct MdsProfile {
  Count total = 0;
  std::vector<VertexProfile> per_vertex;
};

MdsProfile mds_profile(const Graph& g);

}  // namespace dissoc
