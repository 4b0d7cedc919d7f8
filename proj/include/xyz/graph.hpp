#pragma once

// Cubic (3-regular) simple graphs with stable edge ids, plus the structural
// predicates the rest of the library builds on.  Malformed inputs and violated
// preconditions throw; negative analysis verdicts are ordinary return values.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xyz {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId u = -1;
  VertexId v = -1;
  bool operator==(const Edge&) const = default;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedDocument : GraphError {
  using GraphError::GraphError;
};
struct NotCubic : GraphError {
  NotCubic(VertexId v, int deg);
  VertexId vertex;
  int degree;
};
struct SelfLoop : GraphError {
  explicit SelfLoop(VertexId v);
  VertexId vertex;
};
struct ParallelEdge : GraphError {
  ParallelEdge(VertexId u, VertexId v);
  VertexId u, v;
};
struct NotBiconnected : GraphError {
  using GraphError::GraphError;
};

// Simple 3-regular graph.  Edge ids are the positions in the edge list given
// at construction and stay stable through serialization round trips.
class CubicGraph {
 public:
  CubicGraph(VertexId n, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge ids of v in ascending id order.
  const std::array<EdgeId, 3>& incident(VertexId v) const {
    return incident_[static_cast<size_t>(v)];
  }
  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.u == v ? ed.v : ed.u;
  }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }
  std::array<VertexId, 3> neighbors(VertexId v) const;

  bool connected() const;

 private:
  VertexId n_;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incident_;
};

// Partial cubic graph used by the reduction gadgets: every vertex has degree
// three counting dangling half-edges ("ports").  Ports are named and ordered.
struct Port {
  std::string name;
  VertexId vertex = -1;
};

class OpenCubicGraph {
 public:
  OpenCubicGraph(VertexId n, std::vector<Edge> edges, std::vector<Port> ports);

  VertexId vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Port>& ports() const { return ports_; }
  const Port& port(const std::string& name) const;

  int degree(VertexId v) const;

 private:
  VertexId n_;
  std::vector<Edge> edges_;
  std::vector<Port> ports_;
};

struct BipartiteCheck {
  // side[v] in {0,1} when bipartite; otherwise odd_cycle holds a closed odd
  // walk (as a vertex cycle, last implicitly adjacent to first).
  std::optional<std::vector<std::uint8_t>> side;
  std::vector<VertexId> odd_cycle;
  bool bipartite() const { return side.has_value(); }
};
BipartiteCheck is_bipartite(const CubicGraph& g);

std::optional<std::array<VertexId, 3>> find_triangle(const CubicGraph& g);
inline bool is_triangle_free(const CubicGraph& g) { return !find_triangle(g); }

struct ConnectivityCheck {
  bool connected = false;
  bool three_connected = false;
  // Witness for the failure, when any: a single cut vertex or a separating
  // pair (lexicographically first found).
  std::optional<VertexId> cut_vertex;
  std::optional<std::pair<VertexId, VertexId>> cut_pair;
};
ConnectivityCheck is_three_connected(const CubicGraph& g);

// st-numbering of a biconnected graph for an adjacent pair (s, t): a vertex
// order starting at s and ending at t in which every other vertex has both an
// earlier and a later neighbor.  For cubic graphs exactly (n-2)/2 vertices are
// "split" vertices (one earlier neighbor, two later).
struct StNumbering {
  std::vector<VertexId> order;        // position -> vertex
  std::vector<int> number;            // vertex -> position
  std::vector<VertexId> split_vertices;  // ascending by position
};
StNumbering st_numbering(const CubicGraph& g, VertexId s, VertexId t);

// Bipartite double cover: vertex v maps to v (even side) and n+v (odd side);
// edge e maps to edges 2e and 2e+1.
CubicGraph double_cover(const CubicGraph& g);

}  // namespace xyz
