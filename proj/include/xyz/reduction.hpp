#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "xyz/graph.hpp"

namespace xyz {

struct VerificationFailed : GraphError {
  using GraphError::GraphError;
};

// Honeycomb cylinder of two hexagon rings (18 vertices, 24 internal edges)
// with three dangling edges on each boundary ring: ports A, B, C on the left
// and D, E, F on the right.  In every axis assignment that could extend to an
// xyz drawing the two port triples use three distinct axes each and pair up
// parallel as A||F, B||E, C||D.
OpenCubicGraph connector_gadget();

struct ConnectorReport {
  int surviving = 0;
  // Survivors per axis triple on (A, B, C), indexed by the lexicographic
  // permutations of (x, y, z); symmetry makes all six counts equal.
  std::array<int, 6> per_left_triple{};
};

// Enumerates every axis assignment of the gadget's internal and port edges
// subject to the locally sound restrictions of an xyz drawing: three distinct
// axes at every vertex, and no two closed two-axis cycles sharing two or more
// edges (closed alternating cycles are exactly the faces a global drawing
// would impose).  Throws VerificationFailed with a counterexample assignment
// when a survivor breaks the port law described at connector_gadget().
ConnectorReport verify_connector(const OpenCubicGraph& gadget);

// The 32-vertex torus graph with exactly two xyz face sets, together with the
// endpoints (u, v) of an edge lying on no 4-cycle.  Across its two drawings
// the axis triple around v either copies the one around u or swaps the two
// axes not shared with the uv edge.
struct FlipGadget {
  CubicGraph graph;
  VertexId u = 0;
  VertexId v = 0;
};

FlipGadget flip_gadget();

// Even prism large enough to offer d parallel attachment edges: in any xyz
// drawing the rungs of an even prism all run along one axis, so attaching the
// neighbors of a degree-d vertex to d distinct rungs forces one shared axis,
// i.e. one of three colors.
struct VertexGadget {
  CubicGraph graph;                // prism(m), m even, m >= max(4, d)
  std::vector<EdgeId> attachment;  // the first d rung edges
};

VertexGadget vertex_gadget(int d);

// Connector--flip--connector--flip--connector chain with 114 internal
// vertices; the free left (A,B,C) and right (D,E,F) triples realize exactly
// the orientation pairs whose color-carrying axes (A and F) differ.
struct EdgeGadget {
  OpenCubicGraph graph;
  // Junction wiring, kept so tests can replay the relational composition:
  // wiring[0]: star slot j of the first flip's u  -> right port of connector 1
  // wiring[1]: star slot j of the first flip's v  -> left port of connector 2
  // wiring[2]: star slot j of the second flip's u -> right port of connector 2
  // wiring[3]: star slot j of the second flip's v -> left port of connector 3
  // Right ports are indexed D=0, E=1, F=2 and left ports A=0, B=1, C=2.
  std::array<std::array<int, 3>, 4> wiring{};
};

EdgeGadget edge_gadget();

// Arbitrary simple graph to be reduced; vertices 0..n-1.
struct SimpleGraphInput {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct Reduction {
  CubicGraph graph;
  int h_vertices = 0;
  int h_edges = 0;
  // Surviving prism vertices per input vertex: 2 m_v - deg(v).
  std::vector<int> vertex_gadget_size;
  int edge_gadget_size = 114;
  long long total_size = 0;
  // Genus bound 3m - n + 1 carried by the construction; reported as a claim,
  // not recomputed from the output.
  long long genus_claim = 0;
};

// Builds the cubic graph whose xyz-realizability mirrors 3-colorability of h:
// one prism per vertex, one edge gadget per edge, attached by deleting one
// rung endpoint per incidence and wiring its three stubs to a gadget end.
// Requires h simple with no isolated vertices; the output is always cubic and
// simple, and connected when h is.
Reduction reduce_3coloring(const SimpleGraphInput& h);

}  // namespace xyz
