#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace moore2 {

inline std::map<int64_t, int64_t> degree_histogram(const Graph& G) {
  std::map<int64_t, int64_t> hist;
  for (int64_t v = 0; v < G.order(); ++v) ++hist[G.degree(v)];
  return hist;
}

// Eccentricity of src by breadth-first search; -1 if some vertex is
// unreachable. visited_out, if given, receives the reach count.
inline int64_t bfs_eccentricity(const Graph& G, int64_t src, int64_t* visited_out = nullptr) {
  std::vector<int32_t> dist(static_cast<size_t>(G.order()), -1);
  std::vector<int32_t> queue;
  queue.reserve(static_cast<size_t>(G.order()));
  dist[static_cast<size_t>(src)] = 0;
  queue.push_back(static_cast<int32_t>(src));
  int64_t ecc = 0, seen = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int32_t u = queue[head];
    for (int32_t w : G.neighbors(u)) {
      if (dist[static_cast<size_t>(w)] >= 0) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
      if (dist[static_cast<size_t>(w)] > ecc) ecc = dist[static_cast<size_t>(w)];
      queue.push_back(w);
      ++seen;
    }
  }
  if (visited_out) *visited_out = seen;
  return seen == G.order() ? ecc : -1;
}

// Exact diameter as the maximum eccentricity over all sources; empty when
// the graph is disconnected.
inline std::optional<int64_t> diameter(const Graph& G) {
  int64_t best = 0;
  for (int64_t v = 0; v < G.order(); ++v) {
    int64_t ecc = bfs_eccentricity(G, v);
    if (ecc < 0) return std::nullopt;
    if (ecc > best) best = ecc;
  }
  return best;
}

// Fast check that every pair of distinct vertices is adjacent or shares a
// neighbor, by whole-row bit operations: from each vertex, the union of its
// row and its neighbors' rows must cover everything but the vertex itself.
inline bool diameter_at_most_two(const Graph& G) {
  size_t words = G.words_per_row();
  std::vector<uint64_t> acc(words);
  for (int64_t u = 0; u < G.order(); ++u) {
    const uint64_t* ru = G.row(u);
    for (size_t w = 0; w < words; ++w) acc[w] = ru[w];
    for (int32_t nb : G.neighbors(u)) {
      const uint64_t* rn = G.row(nb);
      for (size_t w = 0; w < words; ++w) acc[w] |= rn[w];
    }
    acc[static_cast<size_t>(u) / 64] |= uint64_t{1} << (static_cast<size_t>(u) % 64);
    int64_t remaining = G.order();
    for (size_t w = 0; w < words; ++w) {
      uint64_t expect = remaining >= 64 ? ~uint64_t{0} : ((uint64_t{1} << remaining) - 1);
      if (acc[w] != expect) return false;
      remaining -= 64;
    }
  }
  return true;
}

inline int64_t max_degree(const Graph& G) {
  int64_t d = 0;
  for (int64_t v = 0; v < G.order(); ++v)
    if (G.degree(v) > d) d = G.degree(v);
  return d;
}

// How far the graph falls short of the degree-diameter limit for diameter
// 2: (max degree)^2 + 1 minus the order. Zero only for the handful of
// known extremal graphs.
inline int64_t moore_gap(const Graph& G) {
  int64_t d = max_degree(G);
  return d * d + 1 - G.order();
}

struct GraphReport {
  int64_t order = 0;
  int64_t edges = 0;
  std::map<int64_t, int64_t> histogram;
  std::optional<int64_t> diameter;
  int64_t max_degree = 0;
  int64_t moore_bound = 0;  // max_degree^2 + 1
  int64_t moore_gap = 0;    // moore_bound - order
};

inline GraphReport analyze(const Graph& G) {
  GraphReport r;
  r.order = G.order();
  r.edges = G.edge_count();
  r.histogram = degree_histogram(G);
  r.diameter = diameter(G);
  r.max_degree = max_degree(G);
  r.moore_bound = r.max_degree * r.max_degree + 1;
  r.moore_gap = r.moore_bound - r.order;
  return r;
}

}  // namespace moore2
