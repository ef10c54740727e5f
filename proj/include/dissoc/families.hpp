#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

/// Spider tree with center 0 and p legs: q legs of length 2 come first,
/// then p - q legs of length 1. Leg vertices are numbered inner before
/// outer. Order p + q + 1; (0, 0) is a single vertex.
Graph spider_T(int p, int q);

/// spider_T(p, q) plus vertices p+q+1 and p+q+2 forming a triangle with
/// the center.
Graph U_pq(int p, int q);

/// Cycle 0..r-1 with a pendant leaf on every listed position. Leaves are
/// labeled r, r+1, ... in the order positions are listed.
Graph U_rt(int r, int t, const std::vector<int>& pattern);
/// Pendants on positions 0..t-1.
Graph U_rt(int r, int t);

/// One graph per isomorphism class of cycle C_r with t pendant leaves,
/// ordered by unicyclic code.
std::vector<Graph> enumerate_U_rt_class(int r, int t);

/// Unicyclic graphs of order n predicted to attain floor(n/2) + 2.
std::vector<Graph> extremal_unicyclic(int n);
/// Trees of order n predicted to attain ceil(n/2) + 1, one per class.
std::vector<Graph> extremal_trees(int n);
/// T(1,1), T(2,1), T(2,2), T(3,1), T(3,2), T(4,2).
std::vector<Graph> extremal_caterpillars();

enum class FamilyKind { SpiderTree, TriangleSpider, CyclePendant };

/// Textual forms: "T(p,q)", "U(p,q)", "Urt(r,t)" and "Urt(r,t,[i,j,...])".
struct FamilySpec {
  FamilyKind kind = FamilyKind::SpiderTree;
  int p = 0;
  int q = 0;
  int r = 0;
  int t = 0;
  std::vector<int> pattern;  // CyclePendant only

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Graph build() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

}  // namespace dissoc
