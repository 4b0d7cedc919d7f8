#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xyz/surface.hpp"

namespace xyz {

struct TooLarge : GraphError {
  using GraphError::GraphError;
};

struct PreconditionViolated : GraphError {
  using GraphError::GraphError;
};

// Faces given as closed vertex walks. Unlike FaceSet cycles a walk may pass
// through a vertex twice and may even use an edge twice, as long as across all
// walks every edge of the graph is used exactly twice. This admits maps such
// as the Moebius ladder drawn with one n-gon and one 2n-gon.
struct WalkMap {
  std::vector<std::vector<VertexId>> walks;
};

// View an ordinary face set as a walk map.
WalkMap walk_map(const CubicGraph& g, const FaceSet& fs);

struct CoverResult {
  CubicGraph graph;
  FaceSet faces;
  std::vector<VertexId> projection;  // cover vertex -> base vertex
  int ply = 0;                       // fiber size over one component
  int components = 0;
  // Face colors, present when the construction implies them (sixfold_cover).
  std::optional<std::vector<Axis>> colors;
};

struct CoverOptions {
  int edge_cap = 14;      // refuse the full lift on maps with more edges
  int retry_budget = 64;  // label resamplings before reduced_cover gives up
};

// Lift a connected map through the group (Z_2)^k: each edge carries a label in
// [0, 2^k), cover vertices are (vertex, group element) pairs, and each face
// walk lifts to closed walks that wrap once or twice depending on whether its
// label sum vanishes. Vertex v in fiber position a gets id v * 2^k + a.
CoverResult lift_cover(const CubicGraph& g, const WalkMap& wm, int k,
                       const std::vector<std::uint32_t>& labels);

// Lift through (Z_2)^m with one distinct generator per edge. Every lifted face
// wraps twice, so all cover faces are even and the cover is polyhedral.
CoverResult even_polyhedral_cover(const CubicGraph& g, const WalkMap& wm,
                                  const CoverOptions& opts = {});
CoverResult even_polyhedral_cover(const CubicGraph& g, const FaceSet& fs,
                                  const CoverOptions& opts = {});

struct ReducedCover {
  std::optional<CoverResult> cover;  // empty when the budget ran out
  int attempts = 0;
  std::uint64_t seed = 0;
};

// Randomized small-group variant: edge labels are drawn from (Z_2)^k with a
// seeded generator and a draw is accepted only if the lifted map is polyhedral
// with all faces even (checked explicitly; small groups can close faces after
// a single wrap). Running out of budget is an outcome, not an error.
ReducedCover reduced_cover(const CubicGraph& g, const WalkMap& wm, int k,
                           std::uint64_t seed, const CoverOptions& opts = {});
ReducedCover reduced_cover(const CubicGraph& g, const FaceSet& fs, int k,
                           std::uint64_t seed, const CoverOptions& opts = {});

// The canonical 6-fold axis cover of a connected polyhedral map with all faces
// even. Fiber elements over a vertex are the six ways to assign the three axes
// to its edges; crossing an edge matches the axis of the shared edge and of
// the companion edges in the two shared faces. Faces are the six alternating
// two-axis labelings of each base face, colored with the complementary axis.
// The component count divides 6 and the ply is 6 / components.
CoverResult sixfold_cover(const CubicGraph& g, const FaceSet& fs);

// Predict the ply of sixfold_cover without building it: 1 when the map is
// already an xyz surface, 2 when it has a perfect face cover but is not one,
// 3 when neither holds but every closed walk preserves orientation exactly
// when its length is even, and 6 otherwise.
int classify_cover_case(const CubicGraph& g, const FaceSet& fs);

}  // namespace xyz
