#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xyz/embed.hpp"
#include "xyz/graph.hpp"
#include "xyz/recognize.hpp"
#include "xyz/surface.hpp"

namespace xyz {

struct GeneratedMap {
  CubicGraph graph;
  FaceSet faces;
  std::optional<std::vector<Axis>> colors;
};

// Cube-connected cycles: n·2^n vertices (x,y) with id x*n+y; faces are the
// n-cycles around each x plus the octagons spanning consecutive cube
// dimensions; colored (cycles / even-dimension octagons / odd ones) when n is
// even.
GeneratedMap ccc(int n);

struct GridEmbedding {
  CubicGraph graph;
  Embedding3D coords;
};

// Points of the k-cube grid whose coordinate sum is 0 or 1 mod k, each
// axis-parallel line through them holding exactly two.
GridEmbedding grid_mod(int k);

struct DegenerateVector : GraphError {
  using GraphError::GraphError;
};

// Torus quotient of the 3-colored hexagonal tiling by the lattice spanned by
// (p,q) and its 60-degree rotation, in hexagon-center coordinates.  Requires
// p ≡ q (mod 3) (a same-color vector) and a rhombus large enough that the
// quotient stays polyhedral; p²+pq+q² hexagons, twice as many vertices.
GeneratedMap hex_rhombus_torus(int p, int q);

CubicGraph prism(int m);

// Input for gem(): a map on a general graph (parallel edges allowed, loops
// not), faces given as closed walks of directed edge ids.
struct MapDart {
  int edge;
  bool reversed;  // true: traverse from edges[edge].second to .first
};

struct MapInput {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<MapDart>> faces;
};

struct NotAManifoldMap : GraphError {
  using GraphError::GraphError;
};

// Flag graph of a map: one vertex per (vertex, edge, face) incidence, edges
// between flags differing in exactly one component, faces from vertices
// (2·deg-gons), faces (2·len-gons) and edges (quadrilaterals), colored by
// origin in that order (X, Y, Z).
GeneratedMap gem(const MapInput& m);
GeneratedMap gem(const CubicGraph& g, const FaceSet& fs);

struct PermutationGroupSpec {
  int degree = 0;
  std::vector<std::vector<int>> generators;  // one-line notation, 0-based
};

struct NotCubicCayley : GraphError {
  using GraphError::GraphError;
};

struct GroupTooLarge : GraphError {
  using GraphError::GraphError;
};

struct CayleyOptions {
  int group_cap = 200000;
  // For the involution+rotation case: search the 2^(number of b-cycles)
  // per-cycle traversal directions for one whose face set passes the surface
  // checks, instead of following b forward everywhere.
  bool orientation_search = false;
  std::uint64_t orientation_cap = 1 << 16;
};

struct CayleyGraph {
  CubicGraph graph;
  // Group elements in BFS order from the identity; vertex ids match.
  std::vector<std::vector<int>> elements;
  // Three-involution case: edges partitioned by generating involution.
  std::optional<MatchingPartition> natural_partition;
  // Involution a + rotation b case: the b-cycles plus the alternating
  // (a,b)-faces that follow b-edges forward.
  std::optional<FaceSet> faces;
  std::optional<std::vector<int>> b_cycle_orientation;  // set by the search
};

CayleyGraph cayley(const PermutationGroupSpec& spec, const CayleyOptions& opts = {});

// Brick-wall torus of 8k² diamonds: the flag graph of the 2k×2k torus grid.
// `faces`/`colors` describe the obvious torus embedding; (u,v) spans the
// first edge lying on no 4-cycle.
struct AmbiguousTorus {
  CubicGraph graph;
  FaceSet faces;
  std::vector<Axis> colors;
  VertexId u = -1, v = -1;
};

AmbiguousTorus ambiguous_torus(int k);

// The other face set of the same graph: the diamonds survive but the
// transversal faces zigzag, because the two in-diamond axes are exchanged on
// every diamond that comes from a horizontal grid edge.
PartitionCycles ambiguous_torus_twisted(int k);

struct UnknownName : GraphError {
  using GraphError::GraphError;
};

// Named instances: "petersen", "desargues", "dodecahedron", "mobius-kantor",
// "pappus", "tetrahedron-map", "k33-projective-map", "mobius-kantor-map".
CubicGraph builtin(const std::string& name);
std::vector<std::string> builtin_names();

// The *-map names with their face sets (inputs for gem()).
struct BuiltinMap {
  CubicGraph graph;
  FaceSet faces;
};
BuiltinMap builtin_map(const std::string& name);

}  // namespace xyz
