#include "dissoc/graph6.hpp"

#include <stdexcept>

namespace dissoc {

namespace {

constexpr int kBias = 63;

[[noreturn]] void malformed(const std::string& why) { throw std::invalid_argument("graph6: " + why); }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 0x3F) + kBias);
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) malformed("empty input");
  for (char c : text)
    if (c < 63 || c > 126) malformed("byte outside printable range 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4) malformed("truncated size field");
    if (text[1] == 126) malformed("orders above 258047 are not supported");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kBias);
    if (n <= 62) malformed("non-canonical four-byte size field for order " + std::to_string(n));
    pos = 4;
  }
  if (n < 1 || n > kMaxOrder) malformed("order " + std::to_string(n) + " outside [1,64]");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    malformed("expected " + std::to_string(bytes) + " edge bytes, found " + std::to_string(text.size() - pos));

  std::vector<VertexSet> rows(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) malformed("nonzero padding bits");
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace dissoc
