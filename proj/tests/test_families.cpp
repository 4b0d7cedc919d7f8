#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "xyz/embed.hpp"
#include "xyz/families.hpp"
#include "xyz/graph.hpp"
#include "xyz/recognize.hpp"
#include "xyz/surface.hpp"

using namespace xyz;

namespace {

// By value: callers pass freshly built variants, so a reference would dangle.
ColoredSurface accept(const std::variant<ColoredSurface, SurfaceRejection>& r) {
  REQUIRE(std::holds_alternative<ColoredSurface>(r));
  return std::get<ColoredSurface>(r);
}

std::array<int, 3> class_sizes(const ColoredSurface& s) {
  std::array<int, 3> c{0, 0, 0};
  for (int f = 0; f < s.faces().face_count(); ++f) c[static_cast<int>(s.color(f))]++;
  return c;
}

std::map<int, int> length_histogram(const FaceSet& fs) {
  std::map<int, int> h;
  for (const auto& f : fs.faces()) h[static_cast<int>(f.size())]++;
  return h;
}

// Faces of one color, as (length -> count).
std::map<int, int> class_histogram(const ColoredSurface& s, Axis a) {
  std::map<int, int> h;
  for (int f = 0; f < s.faces().face_count(); ++f)
    if (s.color(f) == a) h[static_cast<int>(s.faces().face(f).size())]++;
  return h;
}

MatchingPartition partition_of(const ColoredSurface& s) {
  MatchingPartition p;
  p.axis.resize(static_cast<size_t>(s.graph().edge_count()));
  for (EdgeId e = 0; e < s.graph().edge_count(); ++e)
    p.axis[static_cast<size_t>(e)] = s.edge_axis(e);
  return p;
}

}  // namespace

TEST_CASE("cube-connected cycles: sizes, face inventory, verdicts") {
  SUBCASE("argument range") {
    CHECK_THROWS_AS(ccc(2), std::invalid_argument);
    CHECK_THROWS_AS(ccc(17), std::invalid_argument);
  }

  SUBCASE("dimension 3 contains triangles and is rejected") {
    GeneratedMap m = ccc(3);
    CHECK(m.graph.vertex_count() == 3 * 8);
    CHECK_FALSE(m.colors.has_value());
    CHECK(find_triangle(m.graph).has_value());
    auto r = recognize_xyz(m.graph);
    REQUIRE(std::holds_alternative<RecognitionFailure>(r));
    CHECK(std::get<RecognitionFailure>(r).reason == "contains-triangle");
  }

  for (int n : {4, 6}) {
    CAPTURE(n);
    GeneratedMap m = ccc(n);
    CHECK(m.graph.vertex_count() == n * (1 << n));
    REQUIRE(m.colors.has_value());

    // One n-cycle per hypercube corner, plus one octagon (four hypercube
    // edges, four cycle edges) per corner modulo each consecutive dimension
    // pair: n * 2^(n-2) of them.
    std::map<int, int> hist = length_histogram(m.faces);
    std::map<int, int> expected;
    expected[n] = 1 << n;
    expected[8] += n * (1 << (n - 2));
    CHECK(hist == expected);

    const ColoredSurface& s = accept(check_xyz_surface_with_coloring(m.graph, m.faces, *m.colors));
    CHECK(class_sizes(s)[0] + class_sizes(s)[1] + class_sizes(s)[2] == m.faces.face_count());
    CHECK(is_bipartite(m.graph).bipartite());
    TopologyClass t = classify_topology(m.graph, m.faces);
    CHECK(t.orientable);
  }

  SUBCASE("odd dimensions above three have odd faces") {
    GeneratedMap m = ccc(5);
    CHECK_FALSE(m.colors.has_value());
    auto r = check_xyz_surface(m.graph, m.faces);
    REQUIRE(std::holds_alternative<SurfaceRejection>(r));
    auto reason = std::get<SurfaceRejection>(r).reason;
    CHECK((reason == SurfaceRejection::Reason::OddFace ||
           reason == SurfaceRejection::Reason::ShortFace));
  }
}

TEST_CASE("grid quotient family: drawing is valid, topology matches the closed form") {
  CHECK_THROWS_AS(grid_mod(1), std::invalid_argument);
  CHECK_THROWS_AS(grid_mod(65), std::invalid_argument);

  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    GridEmbedding ge = grid_mod(k);
    CHECK(ge.graph.vertex_count() == 2 * k * k);
    CHECK(validate_xyz_embedding(ge.graph, ge.coords) == std::nullopt);
    CHECK(is_bipartite(ge.graph).bipartite());

    PartitionCycles pc = faces_from_embedding(ge.graph, ge.coords);
    accept(check_xyz_surface_with_coloring(ge.graph, pc.faces, pc.colors));
    CHECK(euler_characteristic(ge.graph, pc.faces) == 3 * k - k * k);
    CHECK(classify_topology(ge.graph, pc.faces).orientable);
  }

  SUBCASE("small members are the cube and the Pappus graph") {
    CHECK(testutil::isomorphic(grid_mod(2).graph, testutil::cube()));
    CHECK(testutil::isomorphic(grid_mod(3).graph, builtin("pappus")));
  }
}

TEST_CASE("hexagonal torus quotients") {
  SUBCASE("translation vector restrictions") {
    CHECK_THROWS_AS(hex_rhombus_torus(0, 0), DegenerateVector);
    CHECK_THROWS_AS(hex_rhombus_torus(2, 1), DegenerateVector);  // colors differ
    CHECK_THROWS_AS(hex_rhombus_torus(3, 1), DegenerateVector);
    CHECK_THROWS_AS(hex_rhombus_torus(1, 1), DegenerateVector);  // too small
  }

  struct Case {
    int p, q, cells;
  };
  for (Case c : {Case{3, 0, 9}, Case{0, 3, 9}, Case{2, 2, 12}, Case{4, 1, 21}}) {
    CAPTURE(c.p);
    CAPTURE(c.q);
    GeneratedMap m = hex_rhombus_torus(c.p, c.q);
    CHECK(m.graph.vertex_count() == 2 * c.cells);
    CHECK(m.faces.face_count() == c.cells);
    REQUIRE(m.colors.has_value());
    accept(check_xyz_surface_with_coloring(m.graph, m.faces, *m.colors));
    CHECK(euler_characteristic(m.graph, m.faces) == 0);
    TopologyClass t = classify_topology(m.graph, m.faces);
    CHECK(t.orientable);
    CHECK(t.genus == 1);
  }
}

TEST_CASE("prisms") {
  CHECK_THROWS_AS(prism(2), std::invalid_argument);
  for (int m = 3; m <= 7; ++m) {
    CAPTURE(m);
    CubicGraph g = prism(m);
    CHECK(g.vertex_count() == 2 * m);
    CHECK(g.edge_count() == 3 * m);
  }
  CHECK(testutil::isomorphic(prism(4), testutil::cube()));

  // Planar face structure: two m-gons and m squares.
  auto pr = planar_recognize(prism(6));
  REQUIRE(std::holds_alternative<ColoredSurface>(pr));
  std::map<int, int> hist = length_histogram(std::get<ColoredSurface>(pr).faces());
  CHECK(hist == std::map<int, int>{{4, 6}, {6, 2}});

  auto odd = planar_recognize(prism(5));
  REQUIRE(std::holds_alternative<RecognitionFailure>(odd));
  CHECK(std::get<RecognitionFailure>(odd).reason == "not-bipartite");
}

TEST_CASE("flag graphs of small maps are drawable surfaces") {
  struct Case {
    const char* name;
    int chi;
  };
  for (Case c : {Case{"tetrahedron-map", 2}, Case{"k33-projective-map", 1},
                 Case{"mobius-kantor-map", -2}}) {
    CAPTURE(c.name);
    BuiltinMap bm = builtin_map(c.name);
    CHECK(check_manifold(bm.graph, bm.faces).ok);
    CHECK(euler_characteristic(bm.graph, bm.faces) == c.chi);

    GeneratedMap gm = gem(bm.graph, bm.faces);
    int base_edges = bm.graph.edge_count();
    CHECK(gm.graph.vertex_count() == 4 * base_edges);
    REQUIRE(gm.colors.has_value());
    const ColoredSurface& s =
        accept(check_xyz_surface_with_coloring(gm.graph, gm.faces, *gm.colors));

    // The flag-graph surface keeps the base Euler characteristic, and the
    // faces coming from base edges form one full color class of squares.
    CHECK(euler_characteristic(gm.graph, gm.faces) == c.chi);
    CHECK(class_histogram(s, Axis::Z) == std::map<int, int>{{4, base_edges}});

    // The induced edge-axis partition is exactly a valid drawing recipe.
    MatchingPartition p = partition_of(s);
    CHECK(valid_partition(gm.graph, p));
    auto back = test_partition(gm.graph, p);
    REQUIRE(back.has_value());
    CHECK(back->faces().canonical() == gm.faces.canonical());
  }

  SUBCASE("base maps beyond the flag construction") {
    BuiltinMap mk = builtin_map("mobius-kantor-map");
    CHECK_FALSE(check_polyhedral(mk.graph, mk.faces).ok);
    CHECK(length_histogram(mk.faces) == std::map<int, int>{{8, 6}});

    BuiltinMap pj = builtin_map("k33-projective-map");
    CHECK_FALSE(check_polyhedral(pj.graph, pj.faces).ok);
    CHECK_FALSE(classify_topology(pj.graph, pj.faces).orientable);
  }
}

TEST_CASE("flag graph of a general map given by dart walks") {
  // Theta graph on the sphere: two vertices joined by three parallel edges.
  MapInput theta;
  theta.n = 2;
  theta.edges = {{0, 1}, {0, 1}, {0, 1}};
  theta.faces = {
      {{0, false}, {1, true}},
      {{1, false}, {2, true}},
      {{2, false}, {0, true}},
  };
  GeneratedMap gm = gem(theta);
  CHECK(gm.graph.vertex_count() == 12);
  REQUIRE(gm.colors.has_value());
  const ColoredSurface& s = accept(check_xyz_surface_with_coloring(gm.graph, gm.faces, *gm.colors));
  CHECK(euler_characteristic(gm.graph, gm.faces) == 2);
  CHECK(class_histogram(s, Axis::X) == std::map<int, int>{{6, 2}});  // vertex faces
  CHECK(class_histogram(s, Axis::Y) == std::map<int, int>{{4, 3}});  // face faces
  CHECK(class_histogram(s, Axis::Z) == std::map<int, int>{{4, 3}});  // edge faces

  SUBCASE("rejects degrees below three") {
    MapInput path;
    path.n = 2;
    path.edges = {{0, 1}};
    path.faces = {{{0, false}, {0, true}}};
    CHECK_THROWS_AS(gem(path), NotAManifoldMap);
  }

  SUBCASE("rejects open face walks") {
    MapInput bad = theta;
    bad.faces[0] = {{0, false}, {1, false}};
    CHECK_THROWS_AS(gem(bad), NotAManifoldMap);
  }

  SUBCASE("rejects edges not covered exactly twice") {
    MapInput bad = theta;
    bad.faces[1] = {{0, false}, {2, true}};
    CHECK_THROWS_AS(gem(bad), NotAManifoldMap);
  }

  SUBCASE("rejects a face multiset that is not a manifold map") {
    CubicGraph c = testutil::cube();
    FaceSet partial(c, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK_THROWS_AS(gem(c, partial), NotAManifoldMap);
  }
}

TEST_CASE("Cayley graphs of permutation groups") {
  SUBCASE("three adjacent transpositions of four points") {
    PermutationGroupSpec spec;
    spec.degree = 4;
    spec.generators = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
    CayleyGraph cg = cayley(spec);
    CHECK(cg.graph.vertex_count() == 24);
    CHECK(static_cast<int>(cg.elements.size()) == 24);
    CHECK(cg.elements[0] == std::vector<int>{0, 1, 2, 3});
    REQUIRE(cg.natural_partition.has_value());
    CHECK_FALSE(cg.faces.has_value());
    CHECK(valid_partition(cg.graph, *cg.natural_partition));
    auto s = test_partition(cg.graph, *cg.natural_partition);
    REQUIRE(s.has_value());
    CHECK(is_bipartite(s->graph()).bipartite());
  }

  SUBCASE("transposition plus 4-rotation on five points") {
    PermutationGroupSpec spec;
    spec.degree = 5;
    spec.generators = {{1, 0, 2, 3, 4}, {0, 2, 3, 4, 1}};
    CayleyGraph cg = cayley(spec);
    CHECK(cg.graph.vertex_count() == 120);
    REQUIRE(cg.faces.has_value());
    CHECK_FALSE(cg.natural_partition.has_value());

    // Rotation cycles are squares; the alternating faces are 10-cycles.
    CHECK(length_histogram(*cg.faces) == std::map<int, int>{{4, 30}, {10, 24}});

    const ColoredSurface& s = accept(check_xyz_surface(cg.graph, *cg.faces));
    std::array<int, 3> sizes = class_sizes(s);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::array<int, 3>{12, 12, 30});
    CHECK(euler_characteristic(cg.graph, *cg.faces) == -6);
  }

  SUBCASE("generator validation") {
    PermutationGroupSpec bad;
    bad.degree = 3;
    bad.generators = {{1, 0, 2}, {0, 2, 1}};  // two involutions: degree two
    CHECK_THROWS_AS(cayley(bad), NotCubicCayley);

    bad.generators = {{1, 0, 2}, {1, 0, 2}, {0, 2, 1}};  // repeated involution
    CHECK_THROWS_AS(cayley(bad), NotCubicCayley);

    bad.generators = {{0, 1, 2}, {1, 2, 0}};  // identity generator
    CHECK_THROWS_AS(cayley(bad), NotCubicCayley);

    bad.generators = {{1, 1, 0}};  // not a permutation
    CHECK_THROWS_AS(cayley(bad), NotCubicCayley);

    PermutationGroupSpec big;
    big.degree = 5;
    big.generators = {{1, 0, 2, 3, 4}, {0, 2, 3, 4, 1}};
    CayleyOptions opts;
    opts.group_cap = 50;
    CHECK_THROWS_AS(cayley(big, opts), GroupTooLarge);
  }
}

TEST_CASE("brick-wall torus admits exactly two face structures") {
  CHECK_THROWS_AS(ambiguous_torus(0), std::invalid_argument);

  AmbiguousTorus at = ambiguous_torus(1);
  CHECK(at.graph.vertex_count() == 32);
  CHECK(at.graph.find_edge(at.u, at.v).has_value());
  accept(check_xyz_surface_with_coloring(at.graph, at.faces, at.colors));
  CHECK(euler_characteristic(at.graph, at.faces) == 0);

  PartitionCycles tw = ambiguous_torus_twisted(1);
  accept(check_xyz_surface_with_coloring(at.graph, tw.faces, tw.colors));
  CHECK(tw.faces.canonical() != at.faces.canonical());

  // The attachment edge (u, v) lies on no square in the declared structure.
  {
    EdgeId uv = *at.graph.find_edge(at.u, at.v);
    for (int f : at.faces.faces_of_edge(uv)) CHECK(at.faces.face(f).size() > 4);
  }

  // Exhaustive enumeration finds the declared and the twisted face sets and
  // nothing else.
  auto r = recognize_all(at.graph);
  REQUIRE(std::holds_alternative<Census>(r));
  const Census& census = std::get<Census>(r);
  CHECK(static_cast<int>(census.entries.size()) == 2);
  std::set<std::vector<std::vector<VertexId>>> found, expected;
  for (const auto& e : census.entries) found.insert(e.surface.faces().canonical());
  expected.insert(at.faces.canonical());
  expected.insert(tw.faces.canonical());
  CHECK(found == expected);
}

TEST_CASE("larger brick-wall tori: the twisted structure changes the genus") {
  AmbiguousTorus at = ambiguous_torus(2);
  CHECK(at.graph.vertex_count() == 128);
  accept(check_xyz_surface_with_coloring(at.graph, at.faces, at.colors));
  CHECK(euler_characteristic(at.graph, at.faces) == 0);

  PartitionCycles tw = ambiguous_torus_twisted(2);
  accept(check_xyz_surface_with_coloring(at.graph, tw.faces, tw.colors));
  int chi = euler_characteristic(at.graph, tw.faces);
  CHECK(chi < 0);
  CHECK(chi % 2 == 0);
  CHECK(classify_topology(at.graph, tw.faces).orientable);
}

TEST_CASE("named instances") {
  std::vector<std::string> names = builtin_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
  for (const auto& name : names) {
    CAPTURE(name);
    CubicGraph g = builtin(name);
    CHECK(g.vertex_count() >= 4);
  }
  CHECK(testutil::isomorphic(builtin("petersen"), testutil::petersen()));
  CHECK(testutil::isomorphic(builtin("desargues"), testutil::desargues()));
  CHECK(testutil::isomorphic(builtin("mobius-kantor"), testutil::mobius_kantor()));
  CHECK(builtin("pappus").vertex_count() == 18);

  CHECK_THROWS_AS(builtin("heptagon"), UnknownName);
  CHECK_THROWS_AS(builtin_map("pappus"), UnknownName);
  CHECK(builtin_map("tetrahedron-map").graph.vertex_count() == 4);
}
