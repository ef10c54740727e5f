#include "dissoc/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "dissoc/geniso.hpp"

namespace dissoc {

namespace {

void check_pq(int p, int q) {
  if (q < 0 || p < q) throw std::invalid_argument("family parameters need p >= q >= 0");
}

std::vector<Edge> spider_edges(int p, int q) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int leg = 0; leg < p; ++leg) {
    const Vertex inner = next++;
    edges.emplace_back(0, inner);
    if (leg < q) edges.emplace_back(inner, next++);
  }
  return edges;
}

}  // namespace

Graph spider_T(int p, int q) {
  check_pq(p, q);
  return Graph::from_edges(p + q + 1, spider_edges(p, q));
}

Graph U_pq(int p, int q) {
  check_pq(p, q);
  auto edges = spider_edges(p, q);
  const Vertex a = p + q + 1;
  const Vertex b = p + q + 2;
  edges.insert(edges.end(), {{0, a}, {0, b}, {a, b}});
  return Graph::from_edges(p + q + 3, edges);
}

Graph U_rt(int r, int t, const std::vector<int>& pattern) {
  if (r < 3) throw std::invalid_argument("U_rt needs a cycle of length at least 3");
  if (t < 0 || t > r) throw std::invalid_argument("U_rt needs 0 <= t <= r");
  if (static_cast<int>(pattern.size()) != t)
    throw std::invalid_argument("U_rt pattern has " + std::to_string(pattern.size()) + " positions, expected " +
                                std::to_string(t));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < r; ++v) edges.emplace_back(v, (v + 1) % r);
  VertexSet used;
  Vertex leaf = r;
  for (int pos : pattern) {
    if (pos < 0 || pos >= r) throw std::invalid_argument("U_rt pattern position " + std::to_string(pos) + " out of range");
    if (used.contains(pos)) throw std::invalid_argument("U_rt pattern repeats position " + std::to_string(pos));
    used.insert(pos);
    edges.emplace_back(pos, leaf++);
  }
  return Graph::from_edges(r + t, edges);
}

Graph U_rt(int r, int t) {
  std::vector<int> pattern(std::max(t, 0));
  for (int i = 0; i < t; ++i) pattern[i] = i;
  return U_rt(r, t, pattern);
}

std::vector<Graph> enumerate_U_rt_class(int r, int t) {
  if (r < 3 || t < 0 || t > r) throw std::invalid_argument("enumerate_U_rt_class needs r >= 3, 0 <= t <= r");
  std::map<std::string, Graph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    const VertexSet chosen{mask};
    if (chosen.size() != t) continue;
    Graph g = U_rt(r, t, chosen.to_vector());
    auto key = unicyclic_code(g).bytes;
    classes.try_emplace(std::move(key), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> extremal_unicyclic(int n) {
  if (n < 3) throw std::invalid_argument("extremal_unicyclic needs n >= 3");
  std::vector<Graph> out;
  if (n % 2 == 1)
    out.push_back(U_pq((n - 3) / 2, (n - 3) / 2));
  else
    out.push_back(U_pq((n - 2) / 2, (n - 4) / 2));
  if (n == 6) {
    out.push_back(U_rt(6, 0));
    out.push_back(U_rt(5, 1));
  }
  if (n == 8) out.push_back(U_rt(4, 4));
  return out;
}

std::vector<Graph> extremal_trees(int n) {
  if (n < 3) throw std::invalid_argument("extremal_trees needs n >= 3");
  std::vector<Graph> candidates;
  if (n % 2 == 0) {
    candidates.push_back(spider_T(n / 2, (n - 2) / 2));
  } else {
    candidates.push_back(spider_T((n - 1) / 2, (n - 1) / 2));
    candidates.push_back(spider_T((n + 1) / 2, (n - 3) / 2));
  }
  // At n = 3 both odd-case formulas give the path on three vertices.
  std::vector<Graph> out;
  std::vector<CanonicalCode> seen;
  for (auto& g : candidates) {
    auto code = tree_code(g);
    if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
    seen.push_back(std::move(code));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> extremal_caterpillars() {
  return {spider_T(1, 1), spider_T(2, 1), spider_T(2, 2), spider_T(3, 1), spider_T(3, 2), spider_T(4, 2)};
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec;
    skip_space();
    if (take("Urt")) {
      spec.kind = FamilyKind::CyclePendant;
      expect('(');
      spec.r = integer();
      expect(',');
      spec.t = integer();
      if (take(",")) {
        expect('[');
        skip_space();
        if (!take("]")) {
          do spec.pattern.push_back(integer());
          while (take(","));
          expect(']');
        }
      } else {
        for (int i = 0; i < spec.t; ++i) spec.pattern.push_back(i);
      }
    } else if (take("T") || take("U")) {
      spec.kind = text_[pos_ - 1] == 'T' ? FamilyKind::SpiderTree : FamilyKind::TriangleSpider;
      expect('(');
      spec.p = integer();
      expect(',');
      spec.q = integer();
    } else {
      fail("expected T(p,q), U(p,q) or Urt(r,t[,pattern])");
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool take(std::string_view token) {
    skip_space();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 3) fail("expected a small non-negative integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("family spec '" + std::string(text_) + "': " + why + " at offset " +
                                std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec = SpecParser(text).parse();
  spec.build();  // rejects out-of-range parameters early
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case FamilyKind::SpiderTree:
      return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FamilyKind::TriangleSpider:
      return "U(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case FamilyKind::CyclePendant: {
      std::string out = "Urt(" + std::to_string(r) + "," + std::to_string(t) + ",[";
      for (std::size_t i = 0; i < pattern.size(); ++i) out += (i ? "," : "") + std::to_string(pattern[i]);
      return out + "])";
    }
  }
  return "?";
}

Graph FamilySpec::build() const {
  switch (kind) {
    case FamilyKind::SpiderTree:
      return spider_T(p, q);
    case FamilyKind::TriangleSpider:
      return U_pq(p, q);
    case FamilyKind::CyclePendant:
      return U_rt(r, t, pattern);
  }
  throw std::logic_error("unknown family kind");
}

}  // namespace dissoc
