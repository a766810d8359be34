#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>
#include <random>

#include "gaugecount/errors.hpp"
#include "gaugecount/graph.hpp"
#include "gaugecount/random.hpp"

using namespace gaugecount;

namespace {

// Validates a witness edge by edge, independently of is_closed_walk.
bool odd_closed_walk(const Multigraph& g, const ClosedWalk& w) {
  if (w.edges.empty() || w.edges.size() % 2 == 0) return false;
  Vertex at = w.start;
  for (EdgeId e : w.edges) {
    if (e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (ed.u == at) at = ed.v;
    else if (ed.v == at) at = ed.u;
    else return false;
  }
  return at == w.start;
}

// Smallest odd cycle length through simple paths, 0 if none up to max_len.
std::size_t shortest_odd_cycle(const Multigraph& g, std::size_t max_len) {
  std::size_t best = 0;
  std::vector<bool> used(g.vertex_count());
  std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex at, std::size_t len) {
    if (len > max_len) return;
    for (EdgeId e : g.slots(at)) {
      Vertex next = g.edge(e).u == at ? g.edge(e).v : g.edge(e).u;
      if (next == start && len + 1 >= 3 && len + 1 <= max_len && (len + 1) % 2 == 1) {
        if (best == 0 || len + 1 < best) best = len + 1;
      } else if (!used[next] && next != start) {
        used[next] = true;
        dfs(start, next, len + 1);
        used[next] = false;
      }
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) dfs(s, s, 0);
  return best;
}

std::set<std::pair<Vertex, Vertex>> edge_set(const Multigraph& g) {
  std::set<std::pair<Vertex, Vertex>> s;
  for (const auto& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return s;
}

}  // namespace

TEST_CASE("edge list parsing") {
  SUBCASE("triangle") {
    auto g = parse_edge_list("3 3\n0 1\n1 2\n2 0");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g == cycle_graph(3));
    CHECK(degree_sequence(g) == DegreeSequence{2, 2, 2});
  }
  SUBCASE("single loop has degree 2") {
    auto g = parse_edge_list("1 1\n0 0");
    CHECK(degree_sequence(g) == DegreeSequence{2});
    CHECK(g.has_loops());
    CHECK(g.slots(0).size() == 2);
  }
  SUBCASE("parallel edges") {
    auto g = parse_edge_list("2 2\n0 1\n0 1");
    CHECK(degree_sequence(g) == DegreeSequence{2, 2});
    CHECK(is_bipartite(g));
  }
  SUBCASE("two loops on one vertex") {
    auto g = parse_edge_list("1 2\n0 0\n0 0\n");
    CHECK(degree_sequence(g) == DegreeSequence{4});
  }
  SUBCASE("blank lines and trailing whitespace are ignored") {
    auto g = parse_edge_list("\n2 1\n\n  0   1  \n\n");
    CHECK(g.edge_count() == 1);
  }
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 x"), doctest::Contains("line 3"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 5"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 3\n0 1\n1 2"), doctest::Contains("declared"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 1\n1 2"), doctest::Contains("line 3"), InputError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 1 2"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(parse_edge_list(""), InputError);
  CHECK_THROWS_AS(parse_edge_list("-1 0"), InputError);
}

TEST_CASE("constructor rejects out-of-range endpoints") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), InputError);
}

TEST_CASE("serialize then parse is the identity") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_loop_free_graph(rng, 7, 12);
    CHECK(parse_edge_list(serialize(g)) == g);
  }
  for (const auto& g : {parse_edge_list("1 2\n0 0\n0 0"), Multigraph(4, {}), generate("petersen")})
    CHECK(parse_edge_list(serialize(g)) == g);
}

TEST_CASE("graph6") {
  CHECK(edge_set(parse_graph6("C~")) == edge_set(complete_graph(4)));
  CHECK(parse_graph6(">>graph6<<C~") == parse_graph6("C~"));
  CHECK(parse_graph6("C~").edge_count() == 6);
  CHECK(parse_graph6("A_").edge_count() == 1);
  auto p = parse_graph6("IheA@GUAo");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(regular_degree(p) == 3u);
  CHECK(shortest_odd_cycle(p, 5) == 5);
  CHECK_THROWS_AS(parse_graph6(">>sparse6<<C~"), InputError);
  CHECK_THROWS_AS(parse_graph6("C"), InputError);
  CHECK_THROWS_AS(parse_graph6("C~~"), InputError);
}

TEST_CASE("family generators") {
  struct Case {
    const char* spec;
    std::size_t n, m;
    unsigned degree;
  };
  for (auto c : {Case{"K4", 4, 6, 3}, Case{"K5", 5, 10, 4}, Case{"K7", 7, 21, 6}, Case{"C5", 5, 5, 2},
                 Case{"cycle:8", 8, 8, 2}, Case{"K3,3", 6, 9, 3}, Case{"K4,4", 8, 16, 4},
                 Case{"bipartite:2,2", 4, 4, 2}, Case{"octahedron", 6, 12, 4}, Case{"K2,2,2", 6, 12, 4},
                 Case{"multipartite:2,2,2", 6, 12, 4}, Case{"complete:6", 6, 15, 5},
                 Case{"petersen", 10, 15, 3}, Case{"C3+C3", 6, 6, 2}}) {
    CAPTURE(c.spec);
    auto g = generate(c.spec);
    CHECK(g.vertex_count() == c.n);
    CHECK(g.edge_count() == c.m);
    CHECK(regular_degree(g) == c.degree);
    CHECK(degree_sequence(g) == DegreeSequence(c.n, c.degree));
    CHECK_FALSE(g.has_loops());
  }
  CHECK(generate("octahedron") == generate("K2,2,2"));
  CHECK_FALSE(is_connected(generate("C3+C3")));
  for (const char* bad : {"Q3", "K0", "C0", "K3,0", "cycle:", "complete:x", "", "K3+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(generate(bad), InputError);
  }
}

TEST_CASE("petersen is cubic with a 5-cycle and no shorter odd cycle") {
  auto p = petersen_graph();
  CHECK(regular_degree(p) == 3u);
  CHECK(shortest_odd_cycle(p, 5) == 5);
  CHECK(shortest_odd_cycle(p, 4) == 0);
  CHECK(is_connected(p));
  CHECK_FALSE(is_bipartite(p));
}

TEST_CASE("predicates") {
  auto c4 = cycle_graph(4);
  CHECK(is_bipartite(c4));
  CHECK(is_connected(c4));
  CHECK(is_eulerian(c4));
  CHECK(regular_degree(c4) == 2u);

  auto c3 = cycle_graph(3);
  auto bc = check_bipartite(c3);
  CHECK_FALSE(bc.bipartite);
  REQUIRE(bc.odd_walk.has_value());
  CHECK(bc.odd_walk->edges.size() == 3);
  CHECK(odd_closed_walk(c3, *bc.odd_walk));
  CHECK(is_eulerian(c3));

  auto k4 = complete_graph(4);
  CHECK(regular_degree(k4) == 3u);
  CHECK_FALSE(is_eulerian(k4));

  CHECK_FALSE(regular_degree(parse_edge_list("3 2\n0 1\n1 2")).has_value());
  CHECK(is_connected(Multigraph(1, {})));
  CHECK_FALSE(is_connected(Multigraph(2, {})));
}

TEST_CASE("a loop makes a graph non-bipartite with a one-edge witness") {
  auto g = parse_edge_list("2 2\n0 1\n1 1");
  auto bc = check_bipartite(g);
  CHECK_FALSE(bc.bipartite);
  REQUIRE(bc.odd_walk.has_value());
  CHECK(odd_closed_walk(g, *bc.odd_walk));
}

TEST_CASE("bipartite iff a valid odd closed walk witness is absent") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_loop_free_graph(rng, 8, 10);
    auto bc = check_bipartite(g);
    CHECK(is_closed_walk(g, bc.odd_walk.value_or(ClosedWalk{})) != bc.bipartite);
    if (bc.bipartite) {
      for (const auto& e : g.edges()) CHECK(bc.side[e.u] != bc.side[e.v]);
      CHECK(shortest_odd_cycle(g, g.vertex_count()) == 0);
    } else {
      REQUIRE(bc.odd_walk.has_value());
      CHECK(odd_closed_walk(g, *bc.odd_walk));
    }
  }
}

TEST_CASE("describe") {
  CHECK(describe(complete_graph(5)) == "n=5 m=10 degrees=4^5");
}
