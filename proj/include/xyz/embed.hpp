#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xyz/graph.hpp"
#include "xyz/recognize.hpp"
#include "xyz/surface.hpp"

namespace xyz {

using Coord = std::array<std::int64_t, 3>;
using Embedding3D = std::vector<Coord>;  // indexed by vertex id

// Coordinate values to substitute for the default per-class face numbering:
// one value per face of each color class, in the class's numbering order
// (ascending smallest contained vertex).  Lets callers give disjoint
// same-color faces equal coordinates.
struct CoordOverride {
  std::vector<std::int64_t> x, y, z;
};

// Per-class face numbering used for coordinates: faces of one color sorted by
// their smallest contained vertex.
struct FaceNumbering {
  // class_faces[c] lists face ids of color c in numbering order, so the face
  // class_faces[c][i] has coordinate i (or an override value) on axis c.
  std::array<std::vector<int>, 3> class_faces;
  // index_in_class[f] is the position of face f within its class.
  std::vector<int> index_in_class;
};

FaceNumbering number_faces(const ColoredSurface& s);

Embedding3D coordinates_from_surface(const ColoredSurface& s);
Embedding3D coordinates_from_surface(const ColoredSurface& s, const CoordOverride& over);

struct EmbeddingViolation {
  // "line-count": an axis-parallel line with != 2 vertices (listed);
  // "edge-not-axis-parallel": an edge whose endpoints do not agree in exactly
  // two coordinates; "line-not-edge": a 2-vertex line whose vertices are not
  // adjacent.
  std::string kind;
  std::vector<VertexId> vertices;
  std::optional<EdgeId> edge;
};

std::optional<EmbeddingViolation> validate_xyz_embedding(const CubicGraph& g,
                                                         const Embedding3D& e);

// Distinct coordinate values per axis.
std::array<int, 3> grid_extent(const Embedding3D& e);

// The axis along which each edge runs.  Fails (nullopt) when some edge's
// endpoints do not differ in exactly one coordinate.
std::optional<MatchingPartition> partition_from_embedding(const CubicGraph& g,
                                                          const Embedding3D& e);

// Faces of a valid embedding: the cycles lying in axis-parallel planes,
// with their plane colors.
PartitionCycles faces_from_embedding(const CubicGraph& g, const Embedding3D& e);

struct DrawingMetrics {
  // Distinct coordinate-plane counts per color class: n_xy counts planes
  // parallel to the xy-plane (distinct z values), and so on.
  int n_xy = 0, n_yz = 0, n_xz = 0;
  std::int64_t volume = 0;  // (n_xy-1)*(n_yz-1)*(n_xz-1)
  // Edge pairs whose segments meet at a point interior to at least one of
  // them.  Exact integer arithmetic.
  std::int64_t crossings = 0;
};

DrawingMetrics drawing_metrics(const CubicGraph& g, const Embedding3D& e);

struct IncompatibleGluing : GraphError {
  using GraphError::GraphError;
};

// Removes a vertex from each surface and joins the dangling edge ends so
// same-color faces merge, after relabeling b's colors by `correspondence`
// (axis c of b becomes correspondence[c] of the result).  The identity is the
// default; `rotation` 0..2 picks a cyclic correspondence.  Output vertex ids:
// a's vertices except va (ids above va shift down by one), then b's except vb.
struct ConnectedSum {
  CubicGraph graph;
  ColoredSurface surface;
};

ConnectedSum connected_sum(const ColoredSurface& a, VertexId va, const ColoredSurface& b,
                           VertexId vb, const std::array<Axis, 3>& correspondence);
ConnectedSum connected_sum(const ColoredSurface& a, VertexId va, const ColoredSurface& b,
                           VertexId vb, int rotation = 0);

// Isometric projection along (1,1,1) with a small integer skew added so
// vertices stacked along the view direction land on distinct pixels.
std::string export_svg(const CubicGraph& g, const Embedding3D& e);

}  // namespace xyz
