#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/rng.hpp"

namespace kpvc {

/// Named graph family plus parameters. Random families draw from SeededRng(seed),
/// so the same spec always yields the same graph.
///
/// Text form: `name`, `name(p1,p2,...)`, and `union(part,part,...)` where a part
/// may be prefixed by a repeat count, e.g. `union(3*octahedron,cycle(4))`.
struct FamilySpec {
  std::string name;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 0;
  std::vector<FamilySpec> parts;  // disjoint_union only

  bool operator==(const FamilySpec&) const = default;
};

namespace detail {

inline std::int64_t param(const FamilySpec& s, std::size_t i, std::string_view what) {
  require(i < s.params.size(), s.name + ": missing parameter " + std::string(what));
  return s.params[i];
}

inline void expect_params(const FamilySpec& s, std::size_t lo, std::size_t hi) {
  require(s.params.size() >= lo && s.params.size() <= hi,
          s.name + ": expected " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
              " parameters, got " + std::to_string(s.params.size()));
}

inline int count_param(const FamilySpec& s, std::size_t i, std::string_view what, std::int64_t min = 0) {
  auto v = param(s, i, what);
  require(v >= min && v <= 100000, s.name + ": parameter " + std::string(what) + " out of range");
  return static_cast<int>(v);
}

inline Graph lcf_graph(int n, std::span<const int> shifts) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    int j = ((i + shifts[static_cast<std::size_t>(i) % shifts.size()]) % n + n) % n;
    edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Perfect matching {2i, 2i+1} removed.
inline Graph complete_minus_pm(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i % 2 == 0 && j == i + 1)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph gnm(int n, std::int64_t m, SeededRng& rng) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  require(m >= 0 && m <= static_cast<std::int64_t>(pairs.size()), "gnm: m exceeds n(n-1)/2");
  // Partial Fisher-Yates from the front.
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(pairs.size() - i));
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(static_cast<std::size_t>(m));
  return Graph(n, pairs);
}

inline Graph ktree(int n, int width, SeededRng& rng) {
  require(width >= 1, "ktree: width must be at least 1");
  require(n >= width + 1, "ktree: need n >= width + 1");
  std::vector<Edge> edges;
  std::vector<std::vector<int>> cliques;
  std::vector<int> base;
  for (int i = 0; i <= width; ++i) {
    base.push_back(i);
    for (int j = i + 1; j <= width; ++j) edges.emplace_back(i, j);
  }
  cliques.push_back(base);
  for (int v = width + 1; v < n; ++v) {
    std::vector<int> c = cliques[rng.below(cliques.size())];
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(rng.below(c.size())));
    for (int u : c) edges.emplace_back(u, v);
    c.push_back(v);
    cliques.push_back(std::move(c));
  }
  return Graph(n, edges);
}

// Closed integer intervals [l, l+len], l uniform in [0, 2n], len uniform in [0, max_len].
inline Graph interval_graph(int n, int max_len, SeededRng& rng) {
  std::vector<std::pair<std::int64_t, std::int64_t>> iv;
  for (int i = 0; i < n; ++i) {
    std::int64_t l = rng.between(0, 2 * n);
    iv.emplace_back(l, l + rng.between(0, max_len));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Random pairs, rejecting duplicates and edges that would push a degree above
// `cap`; stops at m edges or after 50*m + 1000 draws.
inline Graph bounded_degree_graph(int n, std::int64_t m, int cap, SeededRng& rng) {
  require(n >= 0 && m >= 0 && cap >= 0, "bounded_degree: negative parameter");
  std::vector<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  if (n < 2) return Graph(n, edges);
  const std::int64_t attempts = 50 * m + 1000;
  for (std::int64_t t = 0; t < attempts && static_cast<std::int64_t>(edges.size()) < m; ++t) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || present[u][v] || deg[u] >= cap || deg[v] >= cap) continue;
    present[u][v] = present[v][u] = 1;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(n, edges);
}

// Planar 3-tree: start from a triangle, repeatedly stack a vertex into a random face.
inline Graph apollonian(int n, SeededRng& rng) {
  require(n >= 3, "apollonian: need n >= 3");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    std::size_t f = rng.below(faces.size());
    auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return Graph(n, edges);
}

}  // namespace detail

inline Graph generate_family(const FamilySpec& spec);

namespace detail {

inline Graph generate_union(const FamilySpec& spec) {
  require(!spec.parts.empty(), "disjoint_union: no parts");
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    FamilySpec part = spec.parts[i];
    // Random parts get distinct streams derived from the union seed.
    if (part.seed == 0) part.seed = spec.seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    graphs.push_back(generate_family(part));
  }
  return disjoint_union(graphs);
}

}  // namespace detail

inline Graph generate_family(const FamilySpec& spec) {
  using namespace detail;
  const auto& name = spec.name;
  SeededRng rng(spec.seed);
  if (name == "path") {
    expect_params(spec, 1, 1);
    return path_graph(count_param(spec, 0, "n"));
  }
  if (name == "cycle") {
    expect_params(spec, 1, 1);
    return cycle_graph(count_param(spec, 0, "n", 3));
  }
  if (name == "complete") {
    expect_params(spec, 1, 1);
    return complete_graph(count_param(spec, 0, "n"));
  }
  if (name == "empty") {
    expect_params(spec, 1, 1);
    return Graph(count_param(spec, 0, "n"), {});
  }
  if (name == "complete_minus_pm") {
    expect_params(spec, 1, 1);
    int n = count_param(spec, 0, "n", 2);
    require(n % 2 == 0, "complete_minus_pm: n must be even");
    return complete_minus_pm(n);
  }
  if (name == "star") {
    expect_params(spec, 1, 1);
    int leaves = count_param(spec, 0, "leaves");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
  }
  if (name == "complete_bipartite") {
    expect_params(spec, 2, 2);
    int a = count_param(spec, 0, "a"), b = count_param(spec, 1, "b");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
  }
  if (name == "petersen") {
    expect_params(spec, 0, 0);
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
  }
  if (name == "octahedron") {
    expect_params(spec, 0, 0);
    return complete_minus_pm(6);
  }
  if (name == "heawood") {
    expect_params(spec, 0, 0);
    const int shifts[] = {5, -5};
    return lcf_graph(14, shifts);
  }
  if (name == "dodecahedron") {
    expect_params(spec, 0, 0);
    const int shifts[] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    return lcf_graph(20, shifts);
  }
  if (name == "prism") {
    expect_params(spec, 1, 1);
    int n = count_param(spec, 0, "n", 3);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(i, (i + 1) % n);
      edges.emplace_back(n + i, n + (i + 1) % n);
      edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, edges);
  }
  if (name == "wheel") {  // hub 0 joined to a cycle on 1..n
    expect_params(spec, 1, 1);
    int n = count_param(spec, 0, "rim", 3);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
      edges.emplace_back(0, i);
      edges.emplace_back(i, i % n + 1);
    }
    return Graph(n + 1, edges);
  }
  if (name == "grid") {
    expect_params(spec, 2, 2);
    int r = count_param(spec, 0, "rows", 1), c = count_param(spec, 1, "cols", 1);
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if (j + 1 < c) edges.emplace_back(i * c + j, i * c + j + 1);
        if (i + 1 < r) edges.emplace_back(i * c + j, (i + 1) * c + j);
      }
    return Graph(r * c, edges);
  }
  if (name == "path_power") {  // join vertices at path distance <= p
    expect_params(spec, 2, 2);
    int n = count_param(spec, 0, "n"), p = count_param(spec, 1, "p", 1);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n && j <= i + p; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
  }
  if (name == "gnm") {
    expect_params(spec, 1, 2);
    int n = count_param(spec, 0, "n");
    std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::int64_t m = spec.params.size() == 2 ? param(spec, 1, "m") : rng.between(0, pairs);
    return gnm(n, m, rng);
  }
  if (name == "random_tree") {
    expect_params(spec, 1, 1);
    int n = count_param(spec, 0, "n");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    return Graph(n, edges);
  }
  if (name == "ktree") {
    expect_params(spec, 2, 2);
    return ktree(count_param(spec, 0, "n"), count_param(spec, 1, "width", 1), rng);
  }
  if (name == "interval") {
    expect_params(spec, 1, 2);
    int n = count_param(spec, 0, "n");
    int max_len = spec.params.size() == 2 ? count_param(spec, 1, "max_len") : std::max(1, n / 2);
    return interval_graph(n, max_len, rng);
  }
  if (name == "bounded_degree") {
    expect_params(spec, 3, 3);
    return bounded_degree_graph(count_param(spec, 0, "n"), param(spec, 1, "m"), count_param(spec, 2, "cap"), rng);
  }
  if (name == "apollonian") {
    expect_params(spec, 1, 1);
    return apollonian(count_param(spec, 0, "n", 3), rng);
  }
  if (name == "union" || name == "disjoint_union") return generate_union(spec);
  throw invalid_input("unknown graph family '" + name + "'");
}

inline std::string to_string(const FamilySpec& spec) {
  std::string out = spec.name;
  if (!spec.parts.empty()) {
    out += "(";
    for (std::size_t i = 0; i < spec.parts.size(); ++i) out += (i ? "," : "") + to_string(spec.parts[i]);
    out += ")";
  } else if (!spec.params.empty()) {
    out += "(";
    for (std::size_t i = 0; i < spec.params.size(); ++i) out += (i ? "," : "") + std::to_string(spec.params[i]);
    out += ")";
  }
  return out;
}

namespace detail {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    auto spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("family spec '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::int64_t parse_int() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }
  FamilySpec parse_spec() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected family name");
    FamilySpec spec;
    spec.name = std::string(text_.substr(start, pos_ - start));
    if (!eat('(')) return spec;
    const bool is_union = spec.name == "union" || spec.name == "disjoint_union";
    do {
      if (is_union) {
        skip_space();
        std::int64_t repeat = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          repeat = parse_int();
          if (!eat('*')) fail("expected '*' after repeat count");
          if (repeat < 1 || repeat > 10000) fail("bad repeat count");
        }
        auto part = parse_spec();
        for (std::int64_t r = 0; r < repeat; ++r) spec.parts.push_back(part);
      } else {
        spec.params.push_back(parse_int());
      }
    } while (eat(','));
    if (!eat(')')) fail("expected ')'");
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FamilySpec parse_family(std::string_view text, std::uint64_t seed = 0) {
  auto spec = detail::FamilyParser(text).parse();
  spec.seed = seed;
  return spec;
}

}  // namespace kpvc
