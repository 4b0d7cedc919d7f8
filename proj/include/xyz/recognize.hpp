#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xyz/graph.hpp"
#include "xyz/surface.hpp"

namespace xyz {

struct NotPlanar : GraphError {
  NotPlanar() : GraphError("graph is not planar") {}
};

// Assignment of one axis per edge such that the three edges at every vertex
// receive three distinct axes; each axis class is then a perfect matching.
struct MatchingPartition {
  std::vector<Axis> axis;  // indexed by edge id
};

bool valid_partition(const CubicGraph& g, const MatchingPartition& p);

// Cycle decomposition of the three pairwise matching unions.  A cycle using
// axes {a,b} lies in a plane of the third axis and is colored with it.  Faces
// are emitted color by color (Z-colored first, then Y, then X), each color's
// cycles in order of their smallest vertex, so the output is deterministic.
struct PartitionCycles {
  FaceSet faces;
  std::vector<Axis> colors;
};

PartitionCycles cycles_from_partition(const CubicGraph& g, const MatchingPartition& p);

// Full surface test for one partition: decompose into cycles, then run the
// surface checks with the induced coloring fixed.
std::optional<ColoredSurface> test_partition(const CubicGraph& g, const MatchingPartition& p);

// Enumerates every matching partition exactly once, modulo axis permutations:
// the source star of the st-order (source = vertex 0, sink = its lowest
// neighbor) is fixed to X,Y,Z in edge-id order.  Branching happens only at
// split vertices (one earlier neighbor); there the lower edge id tries the
// smaller remaining axis first.  Returning false from the callback stops the
// enumeration.
void enumerate_partitions(const CubicGraph& g,
                          const std::function<bool(const MatchingPartition&)>& emit);

std::vector<MatchingPartition> all_partitions(const CubicGraph& g);

struct Recognition {
  MatchingPartition partition;
  ColoredSurface surface;
};

// Reason strings are stable identifiers: "disconnected", "contains-triangle",
// "not-3-connected", "not-bipartite", "planar-not-bipartite",
// "no-valid-partition".
struct RecognitionFailure {
  std::string reason;
  std::string detail;
};

struct RecognizeOptions {
  // Planar inputs short-circuit through the unique planar face set.  Verdicts
  // always agree with enumeration, and accepted outputs are byte-identical;
  // rejected planar nonbipartite inputs report "planar-not-bipartite" instead
  // of "no-valid-partition".
  bool planar_fast = true;
  // Number of worker threads for the backtracking search.  Results are
  // byte-identical for every thread count.
  int threads = 1;
};

std::variant<Recognition, RecognitionFailure> recognize_xyz(const CubicGraph& g,
                                                            const RecognizeOptions& opts = {});

// Exhaustive census of distinct accepted face sets (unordered sets of
// unordered cycles).  Entries are sorted by canonical face set; each carries
// the first partition (in sequential enumeration order) that produced it.
struct CensusEntry {
  MatchingPartition partition;
  ColoredSurface surface;
};

struct Census {
  std::vector<CensusEntry> entries;
  std::uint64_t partitions_enumerated = 0;
  int split_vertices = 0;
};

std::variant<Census, RecognitionFailure> recognize_all(const CubicGraph& g,
                                                       const RecognizeOptions& opts = {});

// Linear-time path for planar inputs: accepted exactly when the graph is
// 3-connected and bipartite, in which case the planar face set is the only
// candidate.  Throws NotPlanar on nonplanar input.
std::variant<ColoredSurface, RecognitionFailure> planar_recognize(const CubicGraph& g);

}  // namespace xyz
