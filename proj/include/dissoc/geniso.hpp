#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

enum class CodeKind : std::uint8_t { RootedTree, FreeTree, Unicyclic };

const char* to_string(CodeKind kind);

/// Byte string naming a graph up to isomorphism within one kind.
struct CanonicalCode {
  CodeKind kind = CodeKind::RootedTree;
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// AHU encoding: a leaf is "()", an internal node wraps its children's
/// codes, sorted bytewise, in one pair of parentheses.
CanonicalCode ahu_code(const Graph& tree, Vertex root);

/// Free-tree code: the smaller AHU code over the (one or two) centroids.
CanonicalCode tree_code(const Graph& tree);

/// "<r>:" followed by the lexicographically least rotation or reflection
/// of the cyclic sequence of rooted-tree codes hanging off the cycle.
CanonicalCode unicyclic_code(const Graph& g);

/// Backtracking isomorphism test over degree-compatible candidates. Both
/// orders must be at most kBruteforceIsoCap.
inline constexpr int kBruteforceIsoCap = 10;
bool is_isomorphic_bruteforce(const Graph& g, const Graph& h);

/// Least rotation or reflection of a cyclic sequence, compared elementwise.
std::vector<std::string> least_dihedral_rotation(const std::vector<std::string>& seq);

struct GeneratorCaps {
  int trees = 14;
  int unicyclic = 13;
};

/// Thrown when a generator is asked for an order above its cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-isomorphic rooted trees of one size, keyed by AHU code; the root is
/// vertex 0 of every stored graph.
using RootedTreeTable = std::map<std::string, Graph>;

/// Memoized rooted-tree tables, grown on demand. Not thread-safe while
/// growing; call prepare() before sharing.
class RootedTreeCatalog {
 public:
  const RootedTreeTable& of_size(int size);
  void prepare(int max_size) { of_size(max_size); }

 private:
  std::vector<RootedTreeTable> tables_;  // tables_[s - 1] holds size s
};

/// Ascending by tree_code. Throws CapExceeded above caps.trees.
std::vector<Graph> generate_trees(int n, const GeneratorCaps& caps = {});
/// generate_trees filtered by is_caterpillar.
std::vector<Graph> generate_caterpillars(int n, const GeneratorCaps& caps = {});
/// Ascending cycle length, then ascending unicyclic_code. Throws
/// CapExceeded above caps.unicyclic.
std::vector<Graph> generate_unicyclic(int n, const GeneratorCaps& caps = {});

/// Version tag of the generators, recorded in corpus files and reports.
inline constexpr int kGeneratorVersion = 1;

}  // namespace dissoc
