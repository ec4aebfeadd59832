#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "moore2/analysis.hpp"
#include "moore2/builders.hpp"
#include "moore2/difference_sets.hpp"
#include "moore2/graph.hpp"

using namespace moore2;

namespace {

Graph complete_graph(int64_t n) {
  Graph G(n);
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v = u + 1; v < n; ++v) G.add_edge(u, v);
  return G;
}

Graph path_graph(int64_t n) {
  Graph G(n);
  for (int64_t v = 0; v + 1 < n; ++v) G.add_edge(v, v + 1);
  return G;
}

Graph petersen_graph() {
  Graph G(10);
  for (int64_t i = 0; i < 5; ++i) {
    G.add_edge(i, (i + 1) % 5);      // outer cycle
    G.add_edge(i, i + 5);            // spokes
    G.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return G;
}

Graph relabel(const Graph& G, const std::vector<int64_t>& perm) {
  Graph H(G.order());
  for (int64_t u = 0; u < G.order(); ++u)
    for (int32_t w : G.neighbors(u))
      if (w > u) H.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(w)]);
  return H;
}

}  // namespace

TEST_CASE("degree histogram") {
  REQUIRE(degree_histogram(complete_graph(4)) == std::map<int64_t, int64_t>{{3, 4}});
  auto h = degree_histogram(diff_graph(DifferenceSet(21, {0, 1, 4, 14, 16})));
  REQUIRE(h == std::map<int64_t, int64_t>{{4, 5}, {5, 16}});
  int64_t total = 0;
  for (auto [d, c] : h) total += c;
  REQUIRE(total == 21);
}

TEST_CASE("diameter by breadth-first search") {
  REQUIRE(diameter(complete_graph(4)) == 1);
  REQUIRE(diameter(path_graph(3)) == 2);
  REQUIRE(diameter(path_graph(4)) == 3);
  REQUIRE(diameter(diff_graph(DifferenceSet(7, {0, 1, 3}))) == 2);
  REQUIRE(diameter(petersen_graph()) == 2);
  REQUIRE(diameter(Graph(1)) == 0);

  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  REQUIRE_FALSE(diameter(disconnected).has_value());

  int64_t seen = 0;
  bfs_eccentricity(disconnected, 0, &seen);
  REQUIRE(seen == 2);
  bfs_eccentricity(petersen_graph(), 3, &seen);
  REQUIRE(seen == 10);
}

TEST_CASE("distance-two fast path agrees with the exact diameter") {
  REQUIRE(diameter_at_most_two(complete_graph(4)));
  REQUIRE(diameter_at_most_two(path_graph(3)));
  REQUIRE_FALSE(diameter_at_most_two(path_graph(4)));
  REQUIRE(diameter_at_most_two(petersen_graph()));
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  REQUIRE_FALSE(diameter_at_most_two(disconnected));

  for (int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    Graph D = diff_graph(singer_set(q));
    REQUIRE(diameter_at_most_two(D));
    REQUIRE(diameter(D) == 2);
  }

  // a graph slightly above 64 vertices exercises multi-word rows
  Graph big = complete_graph(70);
  REQUIRE(diameter_at_most_two(big));
  Graph star(70);
  for (int64_t v = 1; v < 70; ++v) star.add_edge(0, v);
  REQUIRE(diameter_at_most_two(star));
}

TEST_CASE("moore gap") {
  REQUIRE(moore_gap(diff_graph(singer_set(4))) == 5);  // bound 26, order 21
  REQUIRE(moore_gap(petersen_graph()) == 0);           // extremal at degree 3
  REQUIRE(moore_gap(brown_augmented(2)) == 2);         // bound 10, order 8
  REQUIRE(max_degree(petersen_graph()) == 3);
}

TEST_CASE("full graph report") {
  auto r = analyze(diff_graph(singer_set(4)));
  REQUIRE(r.order == 21);
  REQUIRE(r.edges == 50);
  REQUIRE(r.histogram == std::map<int64_t, int64_t>{{4, 5}, {5, 16}});
  REQUIRE(r.diameter == 2);
  REQUIRE(r.max_degree == 5);
  REQUIRE(r.moore_bound == 26);
  REQUIRE(r.moore_gap == 5);
}

TEST_CASE("measurements are invariant under relabeling") {
  std::mt19937 rng(99);
  for (Graph G : {petersen_graph(), diff_graph(singer_set(3)), brown_graph(4)}) {
    std::vector<int64_t> perm(static_cast<size_t>(G.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph H = relabel(G, perm);
    REQUIRE(degree_histogram(H) == degree_histogram(G));
    REQUIRE(diameter(H) == diameter(G));
    REQUIRE(moore_gap(H) == moore_gap(G));
    REQUIRE(H.edge_count() == G.edge_count());
  }
}
