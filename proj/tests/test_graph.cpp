#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "xyz/graph.hpp"

using namespace xyz;

namespace {

// Cubic graph with a bridge: two K4-with-a-subdivided-edge halves joined at
// the subdivision vertices.
CubicGraph bridged_cubic() {
  return CubicGraph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                         {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                         {4, 9}});
}

// 2-connected but not 3-connected: two K4-minus-an-edge blocks joined by two
// edges.
CubicGraph two_connected_only() {
  return CubicGraph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}, {4, 6}, {4, 7},
                        {5, 6}, {5, 7}, {2, 6}, {3, 7}});
}

}  // namespace

TEST_CASE("cubic graph construction validates its input") {
  CHECK_THROWS_AS(CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), NotCubic);
  CHECK_THROWS_AS(CubicGraph(4, {{0, 0}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), SelfLoop);
  CHECK_THROWS_AS(CubicGraph(4, {{0, 1}, {1, 0}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                  ParallelEdge);
  CHECK_THROWS_AS(CubicGraph(4, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}),
                  MalformedDocument);
  CHECK_THROWS_AS(CubicGraph(2, {{0, 1}, {0, 1}, {0, 1}}), MalformedDocument);
}

TEST_CASE("incidence structure is ascending and consistent") {
  CubicGraph g = testutil::cube();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    CHECK(inc[0] < inc[1]);
    CHECK(inc[1] < inc[2]);
    for (EdgeId e : inc) {
      const Edge& ed = g.edge(e);
      CHECK((ed.u == v || ed.v == v));
      CHECK(g.other_end(e, v) != v);
    }
  }
  CHECK(g.find_edge(0, 1).has_value());
  CHECK(!g.find_edge(0, 2).has_value());
  CHECK(g.adjacent(3, 7));
  auto nb = g.neighbors(0);
  CHECK(std::set<VertexId>(nb.begin(), nb.end()) == std::set<VertexId>{1, 3, 4});
}

TEST_CASE("connectivity") {
  CHECK(testutil::k4().connected());
  // Two disjoint K4 blocks.
  CubicGraph two(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  CHECK(!two.connected());
}

TEST_CASE("bipartite check returns sides or an odd cycle") {
  auto bc = is_bipartite(testutil::cube());
  REQUIRE(bc.bipartite());
  const auto& side = *bc.side;
  CubicGraph g = testutil::cube();
  for (const Edge& e : g.edges())
    CHECK(side[static_cast<size_t>(e.u)] != side[static_cast<size_t>(e.v)]);

  auto bad = is_bipartite(testutil::petersen());
  REQUIRE(!bad.bipartite());
  CHECK(bad.odd_cycle.size() % 2 == 1);
  CubicGraph p = testutil::petersen();
  for (size_t i = 0; i < bad.odd_cycle.size(); ++i)
    CHECK(p.adjacent(bad.odd_cycle[i], bad.odd_cycle[(i + 1) % bad.odd_cycle.size()]));
}

TEST_CASE("triangle detection") {
  auto t = find_triangle(testutil::k4());
  REQUIRE(t.has_value());
  CubicGraph g = testutil::k4();
  CHECK(g.adjacent((*t)[0], (*t)[1]));
  CHECK(g.adjacent((*t)[1], (*t)[2]));
  CHECK(g.adjacent((*t)[2], (*t)[0]));
  CHECK(is_triangle_free(testutil::cube()));
  CHECK(is_triangle_free(testutil::petersen()));
  CHECK(!is_triangle_free(bridged_cubic()));
}

TEST_CASE("three-connectivity verdicts and witnesses") {
  CHECK(is_three_connected(testutil::k4()).three_connected);
  CHECK(is_three_connected(testutil::k33()).three_connected);
  CHECK(is_three_connected(testutil::petersen()).three_connected);

  auto bridge = is_three_connected(bridged_cubic());
  CHECK(bridge.connected);
  CHECK(!bridge.three_connected);
  CHECK(bridge.cut_vertex.has_value());

  auto two = is_three_connected(two_connected_only());
  CHECK(two.connected);
  CHECK(!two.three_connected);
  CHECK(!two.cut_vertex.has_value());
  REQUIRE(two.cut_pair.has_value());
  // Removing the reported pair must disconnect the graph: check by flood fill.
  CubicGraph g = two_connected_only();
  auto [a, b] = *two.cut_pair;
  std::vector<char> vis(static_cast<size_t>(g.vertex_count()), 0);
  vis[static_cast<size_t>(a)] = vis[static_cast<size_t>(b)] = 1;
  VertexId start = 0;
  while (vis[static_cast<size_t>(start)]) ++start;
  std::vector<VertexId> stack = {start};
  vis[static_cast<size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (!vis[static_cast<size_t>(w)]) {
        vis[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  CHECK(reached < g.vertex_count() - 2);
}

TEST_CASE("st-numbering properties on three-connected corpus graphs") {
  for (const CubicGraph& g : {testutil::k4(), testutil::cube(), testutil::k33(),
                              testutil::petersen(), testutil::desargues()}) {
    VertexId s = 0, t = g.neighbors(0)[0];
    StNumbering st = st_numbering(g, s, t);
    REQUIRE(static_cast<int>(st.order.size()) == g.vertex_count());
    CHECK(st.order.front() == s);
    CHECK(st.order.back() == t);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      CHECK(st.order[static_cast<size_t>(st.number[static_cast<size_t>(v)])] == v);
    int splits = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v == s || v == t) continue;
      int lower = 0, higher = 0;
      for (VertexId w : g.neighbors(v)) {
        if (st.number[static_cast<size_t>(w)] < st.number[static_cast<size_t>(v)]) ++lower;
        else ++higher;
      }
      CHECK(lower >= 1);
      CHECK(higher >= 1);
      if (lower == 1 && higher == 2) ++splits;
    }
    CHECK(splits == (g.vertex_count() - 2) / 2);
    CHECK(static_cast<int>(st.split_vertices.size()) == splits);
    for (size_t i = 0; i + 1 < st.split_vertices.size(); ++i)
      CHECK(st.number[static_cast<size_t>(st.split_vertices[i])] <
            st.number[static_cast<size_t>(st.split_vertices[i + 1])]);
  }
}

TEST_CASE("st-numbering rejects graphs that are not biconnected") {
  CubicGraph g = bridged_cubic();
  CHECK_THROWS_AS(st_numbering(g, 0, g.neighbors(0)[0]), NotBiconnected);
}

TEST_CASE("double cover doubles and preserves structure") {
  CubicGraph k4 = testutil::k4();
  CubicGraph dc = double_cover(k4);
  CHECK(dc.vertex_count() == 8);
  // The bipartite double cover of K4 is the cube.
  CHECK(testutil::isomorphic(dc, testutil::cube()));
  // The double cover of the Petersen graph is the Desargues graph.
  CHECK(testutil::isomorphic(double_cover(testutil::petersen()), testutil::desargues()));
  // Covers of bipartite graphs split into two disjoint copies.
  CHECK(!double_cover(testutil::cube()).connected());
}

TEST_CASE("open cubic graphs account for ports in the degree rule") {
  OpenCubicGraph open(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}},
                      {{"P", 1}, {"Q", 3}});
  CHECK(open.vertex_count() == 4);
  CHECK(open.degree(1) == 2);
  CHECK(open.port("P").vertex == 1);
  CHECK_THROWS_AS(open.port("missing"), MalformedDocument);
  // A vertex short of degree three (even counting ports) is rejected.
  CHECK_THROWS_AS(OpenCubicGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {{"P", 1}}),
                  NotCubic);
}

TEST_CASE("random cubic fixture is reproducible and simple") {
  CubicGraph a = testutil::random_cubic(12, 7);
  CubicGraph b = testutil::random_cubic(12, 7);
  CHECK(a.edges() == b.edges());
  CHECK(a.vertex_count() == 12);
}
