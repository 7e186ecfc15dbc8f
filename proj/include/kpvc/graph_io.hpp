#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"

namespace kpvc {

// Edge-list text: header "n m", then m lines "u v" (0-indexed, whitespace separated).
inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw parse_error("malformed header: expected 'n m'");
  if (n < 0 || m < 0) throw parse_error("malformed header: negative count");
  if (n > 1000000) throw parse_error("malformed header: n too large");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw parse_error("edge count mismatch: header says " + std::to_string(m) + ", found " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("edge " + std::to_string(i) + " index out of range");
    if (u == v) throw parse_error("edge " + std::to_string(i) + " is a self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw parse_error("edge count mismatch: trailing data after " + std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), edges);
}

// Canonical form: edges as "u v" with u < v in lexicographic order.
inline std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// graph6 (as produced by nauty's geng/showg). Leading ">>graph6<<" header and
/// trailing newline are accepted.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error("graph6: empty string");
  for (char c : text)
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw parse_error("graph6: truncated size field");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw parse_error("graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 100000) throw parse_error("graph6: graph too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw parse_error("graph6: length mismatch, expected " + std::to_string(expected) + " data bytes for n=" +
                      std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      std::uint64_t b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph(static_cast<int>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0, filled = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace kpvc
