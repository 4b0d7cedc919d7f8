#pragma once

// Face multisets on cubic graphs, manifold/polyhedral checks, face
// 3-coloring, orientation and topology classification, and perfect face
// covers.  A "surface" here is a combinatorial polyhedral embedding given by
// its face cycles; no geometry is involved at this layer.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xyz/graph.hpp"

namespace xyz {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };
const char* axis_name(Axis a);           // "x" / "y" / "z"
std::optional<Axis> axis_from_name(const std::string& s);
inline Axis axis_complement(Axis a, Axis b) {
  return static_cast<Axis>(3 - static_cast<int>(a) - static_cast<int>(b));
}

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FaceNotCycle : SurfaceError {
  FaceNotCycle(int face, const std::string& why);
  int face;
};

// Multiset of faces, each a simple cycle of length >= 3 in the graph.
// Duplicate cycles are allowed here (they fail the polyhedral check later).
class FaceSet {
 public:
  FaceSet(const CubicGraph& g, std::vector<std::vector<VertexId>> faces);

  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<VertexId>& face(int f) const { return faces_[static_cast<size_t>(f)]; }
  const std::vector<std::vector<VertexId>>& faces() const { return faces_; }

  // Ids of the faces using edge e (0 to 2 entries kept; more throws at build).
  const std::vector<int>& faces_of_edge(EdgeId e) const {
    return edge_faces_[static_cast<size_t>(e)];
  }
  int edge_multiplicity(EdgeId e) const {
    return static_cast<int>(edge_faces_[static_cast<size_t>(e)].size());
  }

  // Canonical form: every face rotated/reflected to start at its smallest
  // vertex in the smaller direction, faces sorted.  Equal canonical forms
  // mean equal face multisets.
  std::vector<std::vector<VertexId>> canonical() const;

 private:
  std::vector<std::vector<VertexId>> faces_;
  std::vector<std::vector<int>> edge_faces_;
};

std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle);

struct ManifoldCheck {
  bool ok = false;
  EdgeId bad_edge = -1;  // an edge not covered exactly twice
  int multiplicity = 0;
};
ManifoldCheck check_manifold(const CubicGraph& g, const FaceSet& fs);

struct PolyhedralCheck {
  bool ok = false;
  int face_a = -1, face_b = -1;    // two faces sharing >= 2 edges
  EdgeId shared_a = -1, shared_b = -1;
};
// Linear-time via two-pass bucket sort of edges keyed by their (sorted)
// incident-face-id pair, then a scan for adjacent duplicates.
PolyhedralCheck check_polyhedral(const CubicGraph& g, const FaceSet& fs);

struct ColoringFailure {
  // Face that lost all candidate colors, or -1 if propagation stalled with
  // faces left uncolored (`stalled` lists them).
  int dead_face = -1;
  std::vector<int> stalled;
};
// Propagation 3-coloring: seed the two faces of the lowest-id edge with X and
// Y (lower face id gets X), then repeatedly color faces with exactly one
// remaining candidate.  Complete for connected polyhedral maps.
std::variant<std::vector<Axis>, ColoringFailure> three_color_faces(const CubicGraph& g,
                                                                   const FaceSet& fs);

class ColoredSurface {
 public:
  // Validates that colors are proper (faces sharing an edge differ).
  ColoredSurface(CubicGraph g, FaceSet faces, std::vector<Axis> colors);

  const CubicGraph& graph() const { return graph_; }
  const FaceSet& faces() const { return faces_; }
  const std::vector<Axis>& colors() const { return colors_; }
  Axis color(int f) const { return colors_[static_cast<size_t>(f)]; }

  // Edge axis: complement of the colors of its two faces.
  Axis edge_axis(EdgeId e) const;

 private:
  CubicGraph graph_;
  FaceSet faces_;
  std::vector<Axis> colors_;
};

struct SurfaceRejection {
  enum class Reason {
    NotManifold,
    NotPolyhedral,
    OddFace,
    ShortFace,
    NotThreeColorable,
  } reason;
  std::string detail;
};
// Full xyz-surface test: manifold, polyhedral, all faces even of length >= 4,
// and 3-colorable (coloring found by propagation).
std::variant<ColoredSurface, SurfaceRejection> check_xyz_surface(const CubicGraph& g,
                                                                 const FaceSet& fs);
// Same conditions but with a fixed coloring (no search): colors must be
// proper for the given faces.
std::variant<ColoredSurface, SurfaceRejection> check_xyz_surface_with_coloring(
    const CubicGraph& g, const FaceSet& fs, const std::vector<Axis>& colors);

int euler_characteristic(const CubicGraph& g, const FaceSet& fs);

struct OrientationWitness {
  // Closed walk of face flips proving nonorientability: faces_[i] and
  // faces_[i+1] share edge via_[i], and the parity constraints around the
  // walk contradict.
  std::vector<int> face_walk;
  std::vector<EdgeId> via;
};
struct Orientation {
  // flip[f] == 1 means face f is traversed opposite to its listed order.
  std::vector<std::uint8_t> flip;
};
std::variant<Orientation, OrientationWitness> orient_faces(const CubicGraph& g,
                                                           const FaceSet& fs);

struct TopologyClass {
  int euler_characteristic = 0;
  bool orientable = false;
  int genus = -1;      // orientable: (2 - chi) / 2
  int crosscap = -1;   // nonorientable: 2 - chi
};
TopologyClass classify_topology(const CubicGraph& g, const FaceSet& fs);

// Subset of faces covering every vertex exactly once, if one exists.  Such a
// cover must be a connected component of the auxiliary graph joining the two
// faces "opposite" each edge; components are scanned in deterministic order.
std::optional<std::vector<int>> perfect_face_cover(const CubicGraph& g, const FaceSet& fs);

}  // namespace xyz
