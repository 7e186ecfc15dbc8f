#pragma once

#include <string>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/pk_oracle.hpp"
#include "kpvc/rational.hpp"

namespace kpvc {

struct TraceEvent {
  std::string kind;  // "peel", "move", "partition", "select", "sample", ...
  Vertex vertex = -1;
  int degree = 0;
  int n = 0, m = 0;  // graph state before the event
  std::string note;
};

struct AlgorithmResult {
  std::string algorithm;
  int k = 0;
  VertexSet cover;
  std::string guarantee_name;
  Rational guarantee_value;
  bool guarantee_certified = false;
  std::vector<TraceEvent> trace;

  int size() const { return static_cast<int>(cover.size()); }
  bool guarantee_met() const { return size() <= guarantee_value; }
};

namespace detail {

/// Mutable view of G minus deleted vertices, with live degrees.
class WorkingGraph {
 public:
  explicit WorkingGraph(const Graph& g)
      : g_(g), alive_(static_cast<std::size_t>(g.order()), 1), deg_(static_cast<std::size_t>(g.order()), 0),
        n_(g.order()), m_(g.size()) {
    for (Vertex v = 0; v < g.order(); ++v) deg_[v] = g.degree(v);
  }

  int order() const { return n_; }
  int size() const { return m_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int degree(Vertex v) const { return deg_[v]; }

  // Live vertex of largest degree, lowest index on ties; -1 when empty.
  Vertex max_degree_vertex() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v] && (best < 0 || deg_[v] > deg_[best])) best = v;
    return best;
  }

  int max_degree() const {
    Vertex v = max_degree_vertex();
    return v < 0 ? 0 : deg_[v];
  }

  void remove(Vertex v) {
    ensure(alive_[v], "WorkingGraph: vertex removed twice");
    alive_[v] = 0;
    --n_;
    m_ -= deg_[v];
    for (Vertex u : g_.neighbors(v))
      if (alive_[u]) --deg_[u];
    deg_[v] = 0;
  }

  // Remove max-degree vertices while `keep_going(*this)` holds.
  template <typename Pred>
  void peel_while(Pred keep_going, VertexSet& removed, std::vector<TraceEvent>& trace) {
    while (n_ > 0 && keep_going(*this)) {
      Vertex v = max_degree_vertex();
      trace.push_back({"peel", v, deg_[v], n_, m_, ""});
      removed.push_back(v);
      remove(v);
    }
  }

  VertexSet live_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

 private:
  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  int n_, m_;
};

inline AlgorithmResult finish(const Graph& g, AlgorithmResult r) {
  r.cover = normalize(std::move(r.cover));
  auto check = check_cover(g, r.k, r.cover);
  if (!check.valid) {
    std::string path;
    for (Vertex v : *check.counterexample) path += (path.empty() ? "" : "-") + std::to_string(v);
    throw internal_error(r.algorithm + " produced an invalid cover; surviving path " + path);
  }
  if (r.guarantee_certified) ensure(r.guarantee_met(), r.algorithm + " exceeded its certified guarantee");
  return r;
}

// Prefix trace events from a sub-run and lift their vertices to the parent graph.
inline void append_trace(std::vector<TraceEvent>& out, const std::vector<TraceEvent>& sub,
                         const std::vector<Vertex>& origin) {
  for (auto e : sub) {
    if (e.vertex >= 0) e.vertex = origin[e.vertex];
    out.push_back(std::move(e));
  }
}

}  // namespace detail

}  // namespace kpvc
