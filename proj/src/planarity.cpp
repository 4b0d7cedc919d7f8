#include "xyz/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace xyz {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const CubicGraph& g) {
  BoostGraph bg(static_cast<size_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    boost::add_edge(static_cast<size_t>(g.edge(e).u), static_cast<size_t>(g.edge(e).v), e, bg);
  return bg;
}

}  // namespace

bool is_planar(const CubicGraph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<PlanarEmbedding> planar_embedding(const CubicGraph& g) {
  BoostGraph bg = to_boost(g);
  using Traits = boost::graph_traits<BoostGraph>;
  std::vector<std::vector<Traits::edge_descriptor>> storage(
      static_cast<size_t>(g.vertex_count()));
  auto emb = boost::make_iterator_property_map(storage.begin(),
                                               boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = emb))
    return std::nullopt;
  PlanarEmbedding out;
  out.rotation.resize(storage.size());
  auto eindex = boost::get(boost::edge_index, bg);
  for (size_t v = 0; v < storage.size(); ++v)
    for (const auto& ed : storage[v]) out.rotation[v].push_back(eindex[ed]);
  return out;
}

namespace {

// Darts are (edge, end) with end 0 meaning the dart points away from edge.u.
// Tracing: arrive at v along a dart, turn to the next edge in v's rotation,
// leave along it.
struct DartWalker {
  const CubicGraph& g;
  const std::vector<std::vector<EdgeId>>& rot;

  int next_dart(int dart) const {
    EdgeId e = dart >> 1;
    VertexId head = (dart & 1) ? g.edge(e).u : g.edge(e).v;
    const auto& r = rot[static_cast<size_t>(head)];
    size_t i = 0;
    while (r[i] != e) ++i;
    EdgeId f = r[(i + 1) % r.size()];
    return (f << 1) | (g.edge(f).u == head ? 0 : 1);
  }
};

}  // namespace

int count_rotation_faces(const CubicGraph& g, const std::vector<std::vector<EdgeId>>& rotation) {
  DartWalker w{g, rotation};
  std::vector<char> seen(static_cast<size_t>(2 * g.edge_count()), 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * g.edge_count(); ++d0) {
    if (seen[static_cast<size_t>(d0)]) continue;
    ++faces;
    int d = d0;
    do {
      seen[static_cast<size_t>(d)] = 1;
      d = w.next_dart(d);
    } while (d != d0);
  }
  return faces;
}

std::vector<std::vector<VertexId>> faces_from_rotation(
    const CubicGraph& g, const std::vector<std::vector<EdgeId>>& rotation) {
  DartWalker w{g, rotation};
  std::vector<char> seen(static_cast<size_t>(2 * g.edge_count()), 0);
  std::vector<std::vector<VertexId>> faces;
  for (int d0 = 0; d0 < 2 * g.edge_count(); ++d0) {
    if (seen[static_cast<size_t>(d0)]) continue;
    std::vector<VertexId> cyc;
    int d = d0;
    do {
      seen[static_cast<size_t>(d)] = 1;
      EdgeId e = d >> 1;
      cyc.push_back((d & 1) ? g.edge(e).v : g.edge(e).u);
      d = w.next_dart(d);
    } while (d != d0);
    faces.push_back(std::move(cyc));
  }
  return faces;
}

}  // namespace xyz
