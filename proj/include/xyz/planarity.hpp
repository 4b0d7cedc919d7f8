#pragma once

#include <optional>
#include <vector>

#include "xyz/graph.hpp"

namespace xyz {

// Combinatorial embedding: incident edge ids in rotation order around each
// vertex.
struct PlanarEmbedding {
  std::vector<std::vector<EdgeId>> rotation;
};

bool is_planar(const CubicGraph& g);
std::optional<PlanarEmbedding> planar_embedding(const CubicGraph& g);

// Orbit count of the face-tracing permutation of an arbitrary rotation
// system.  Faces here are closed walks and may repeat vertices.
int count_rotation_faces(const CubicGraph& g, const std::vector<std::vector<EdgeId>>& rotation);

// Face walks of a rotation system as vertex cycles.  Throws SurfaceError via
// FaceSet construction later if a walk repeats a vertex; callers should only
// use this on embeddings whose faces are simple cycles (e.g. planar
// embeddings of 2-connected graphs).
std::vector<std::vector<VertexId>> faces_from_rotation(
    const CubicGraph& g, const std::vector<std::vector<EdgeId>>& rotation);

}  // namespace xyz
