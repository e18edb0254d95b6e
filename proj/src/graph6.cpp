#include "blowup/graph6.hpp"

namespace blowup {

namespace {
constexpr int kBias = 63;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    // 18-bit long form, enough for the order cap.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  size_t pos = 0;
  auto need = [&](size_t at) -> int {
    if (at >= text.size()) throw ParseError(at, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > 126)
      throw ParseError(at, "byte outside printable graph6 range");
    return c - kBias;
  };

  long long n;
  if (need(0) == 63) {  // '~' long form
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError(1, "36-bit orders are beyond the order cap");
    n = static_cast<long long>(need(1)) << 12 |
        static_cast<long long>(need(2)) << 6 | need(3);
    pos = 4;
  } else {
    n = need(0);
    pos = 1;
  }
  if (n > Graph::kMaxOrder)
    throw ParseError(0, "order " + std::to_string(n) +
                            " exceeds the order cap of 64");

  Graph g(static_cast<int>(n));
  int acc = 0, bits = 0;
  size_t at = pos;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        acc = need(at);
        ++at;
        bits = 6;
      }
      if (acc >> (bits - 1) & 1) g.add_edge(u, v);
      --bits;
    }
  }
  if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
    throw ParseError(at - 1, "nonzero padding bits");
  if (at != text.size()) throw ParseError(at, "trailing bytes after graph data");
  return g;
}

}  // namespace blowup
