#include "xyz/covers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace xyz {

namespace {

Edge mk(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

int component_count(const CubicGraph& g) {
  Dsu d(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) d.unite(g.edge(e).u, g.edge(e).v);
  int c = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (d.find(v) == v) ++c;
  return c;
}

// Edge ids along each walk, validating the walk-map contract: closed walks of
// adjacent vertices that together use every edge of the graph exactly twice.
std::vector<std::vector<EdgeId>> walk_edges(const CubicGraph& g, const WalkMap& wm) {
  std::vector<int> used(static_cast<size_t>(g.edge_count()), 0);
  std::vector<std::vector<EdgeId>> out;
  for (const auto& w : wm.walks) {
    if (w.size() < 2) throw PreconditionViolated("face walk too short");
    std::vector<EdgeId> es;
    es.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
      VertexId a = w[i];
      VertexId b = w[(i + 1) % w.size()];
      if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
        throw PreconditionViolated("face walk vertex out of range");
      std::optional<EdgeId> e = g.find_edge(a, b);
      if (!e) throw PreconditionViolated("face walk uses a non-edge");
      ++used[static_cast<size_t>(*e)];
      es.push_back(*e);
    }
    out.push_back(std::move(es));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (used[static_cast<size_t>(e)] != 2)
      throw PreconditionViolated("face walks must use every edge exactly twice");
  return out;
}

void require_closed_even_polyhedral(const CubicGraph& g, const FaceSet& fs) {
  if (!g.connected()) throw PreconditionViolated("map is disconnected");
  if (!check_manifold(g, fs).ok) throw PreconditionViolated("map is not a manifold");
  if (!check_polyhedral(g, fs).ok) throw PreconditionViolated("map is not polyhedral");
  for (int f = 0; f < fs.face_count(); ++f)
    if (fs.face(f).size() % 2 != 0) throw PreconditionViolated("map has an odd face");
}

constexpr std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};

int perm_index(const std::array<int, 3>& p) {
  for (int i = 0; i < 6; ++i)
    if (kPerms[static_cast<size_t>(i)] == p) return i;
  return -1;
}

int slot_of(const CubicGraph& g, VertexId v, EdgeId e) {
  const auto& inc = g.incident(v);
  for (int i = 0; i < 3; ++i)
    if (inc[static_cast<size_t>(i)] == e) return i;
  throw GraphError("internal: edge is not incident to the vertex");
}

// For every (face, vertex) incidence the two face edges meeting at the vertex.
std::map<std::pair<int, VertexId>, std::array<EdgeId, 2>> corner_edges(const CubicGraph& g,
                                                                       const FaceSet& fs) {
  std::map<std::pair<int, VertexId>, std::array<EdgeId, 2>> out;
  for (int f = 0; f < fs.face_count(); ++f) {
    const auto& c = fs.face(f);
    const int len = static_cast<int>(c.size());
    std::vector<EdgeId> es(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j)
      es[static_cast<size_t>(j)] = *g.find_edge(c[static_cast<size_t>(j)],
                                                c[static_cast<size_t>((j + 1) % len)]);
    for (int j = 0; j < len; ++j) {
      EdgeId ein = es[static_cast<size_t>((j + len - 1) % len)];
      EdgeId eout = es[static_cast<size_t>(j)];
      out[{f, c[static_cast<size_t>(j)]}] = {ein, eout};
    }
  }
  return out;
}

// Orientation-transport parity per edge: 0 when carrying a local orientation
// across the edge preserves it, 1 when it flips.  Computed from an alternate
// 2-coloring of the six (edge side, face side) incidences around each vertex.
std::vector<int> edge_orientation_parity(const CubicGraph& g, const FaceSet& fs) {
  const VertexId n = g.vertex_count();
  // Local flag = slot * 2 + side, where side indexes faces_of_edge(incident
  // edge). The flags form a single 6-cycle alternating same-edge and
  // same-face steps; its 2-coloring is the pair of local orientations.
  std::vector<std::array<int, 6>> color(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    const auto& inc = g.incident(v);
    std::array<std::vector<int>, 6> nb;
    for (int s = 0; s < 3; ++s) {
      nb[static_cast<size_t>(s * 2)].push_back(s * 2 + 1);
      nb[static_cast<size_t>(s * 2 + 1)].push_back(s * 2);
    }
    std::map<int, std::vector<int>> byface;
    for (int s = 0; s < 3; ++s) {
      const auto& ef = fs.faces_of_edge(inc[static_cast<size_t>(s)]);
      for (int side = 0; side < 2; ++side)
        byface[ef[static_cast<size_t>(side)]].push_back(s * 2 + side);
    }
    for (const auto& [f, flags] : byface) {
      if (flags.size() != 2)
        throw GraphError("internal: face corner does not pair two edge sides");
      nb[static_cast<size_t>(flags[0])].push_back(flags[1]);
      nb[static_cast<size_t>(flags[1])].push_back(flags[0]);
    }
    std::array<int, 6>& col = color[static_cast<size_t>(v)];
    col.fill(-1);
    std::deque<int> queue{0};
    col[0] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : nb[static_cast<size_t>(x)])
        if (col[static_cast<size_t>(y)] < 0) {
          col[static_cast<size_t>(y)] = col[static_cast<size_t>(x)] ^ 1;
          queue.push_back(y);
        }
    }
    for (int x = 0; x < 6; ++x)
      if (col[static_cast<size_t>(x)] < 0)
        throw GraphError("internal: vertex umbrella is not a single cycle");
  }
  std::vector<int> tau(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& be = g.edge(e);
    int su = slot_of(g, be.u, e);
    int sv = slot_of(g, be.v, e);
    // Side 0 refers to the same face at both endpoints.
    tau[static_cast<size_t>(e)] = color[static_cast<size_t>(be.u)][static_cast<size_t>(su * 2)] ^
                                  color[static_cast<size_t>(be.v)][static_cast<size_t>(sv * 2)] ^ 1;
  }
  return tau;
}

}  // namespace

WalkMap walk_map(const CubicGraph& g, const FaceSet& fs) {
  (void)g;
  WalkMap wm;
  wm.walks.reserve(static_cast<size_t>(fs.face_count()));
  for (int f = 0; f < fs.face_count(); ++f) wm.walks.push_back(fs.face(f));
  return wm;
}

CoverResult lift_cover(const CubicGraph& g, const WalkMap& wm, int k,
                       const std::vector<std::uint32_t>& labels) {
  if (k < 1 || k > 20) throw TooLarge("cover group exponent must be between 1 and 20");
  const std::int64_t fiber = std::int64_t{1} << k;
  if (static_cast<std::int64_t>(g.vertex_count()) * fiber > 4'000'000)
    throw TooLarge("cover would exceed the vertex budget");
  if (static_cast<EdgeId>(labels.size()) != g.edge_count())
    throw std::invalid_argument("need exactly one label per edge");
  const std::uint32_t group = std::uint32_t{1} << k;
  for (std::uint32_t x : labels)
    if (x >= group) throw std::invalid_argument("edge label outside the cover group");
  if (!g.connected()) throw PreconditionViolated("map is disconnected");
  const std::vector<std::vector<EdgeId>> wedges = walk_edges(g, wm);

  auto vid = [group](VertexId v, std::uint32_t a) {
    return static_cast<VertexId>(static_cast<std::uint32_t>(v) * group + a);
  };

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()) * group);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& be = g.edge(e);
    for (std::uint32_t a = 0; a < group; ++a)
      edges.push_back(mk(vid(be.u, a), vid(be.v, a ^ labels[static_cast<size_t>(e)])));
  }

  std::vector<std::vector<VertexId>> faces;
  for (size_t wi = 0; wi < wm.walks.size(); ++wi) {
    const auto& w = wm.walks[wi];
    const auto& es = wedges[wi];
    const size_t len = w.size();
    std::vector<std::uint32_t> prefix(len);
    std::uint32_t sum = 0;
    for (size_t j = 0; j < len; ++j) {
      prefix[j] = sum;
      sum ^= labels[static_cast<size_t>(es[j])];
    }
    if (sum == 0) {
      // The walk closes after one wrap in every fiber position.
      for (std::uint32_t a = 0; a < group; ++a) {
        std::vector<VertexId> face(len);
        for (size_t j = 0; j < len; ++j) face[j] = vid(w[j], a ^ prefix[j]);
        faces.push_back(std::move(face));
      }
    } else {
      // The walk wraps twice; the lifts from a and a ^ sum coincide.
      for (std::uint32_t a = 0; a < group; ++a) {
        if ((a ^ sum) < a) continue;
        std::vector<VertexId> face(2 * len);
        for (size_t j = 0; j < 2 * len; ++j) {
          std::uint32_t shift = j >= len ? sum : 0;
          face[j] = vid(w[j % len], a ^ prefix[j % len] ^ shift);
        }
        faces.push_back(std::move(face));
      }
    }
  }

  CubicGraph cover(static_cast<VertexId>(g.vertex_count() * static_cast<VertexId>(group)),
                   std::move(edges));
  FaceSet cover_faces(cover, std::move(faces));
  std::vector<VertexId> projection(static_cast<size_t>(cover.vertex_count()));
  for (VertexId v = 0; v < cover.vertex_count(); ++v)
    projection[static_cast<size_t>(v)] = v / static_cast<VertexId>(group);
  int components = component_count(cover);
  if (static_cast<int>(group) % components != 0)
    throw GraphError("internal: cover components do not share a fiber size");
  int ply = static_cast<int>(group) / components;
  return CoverResult{std::move(cover), std::move(cover_faces), std::move(projection),
                     ply,              components,             std::nullopt};
}

CoverResult even_polyhedral_cover(const CubicGraph& g, const WalkMap& wm,
                                  const CoverOptions& opts) {
  if (g.edge_count() > opts.edge_cap)
    throw TooLarge("map has more edges than the doubling-cover cap");
  std::vector<std::uint32_t> labels(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    labels[static_cast<size_t>(e)] = std::uint32_t{1} << e;
  return lift_cover(g, wm, g.edge_count(), labels);
}

CoverResult even_polyhedral_cover(const CubicGraph& g, const FaceSet& fs,
                                  const CoverOptions& opts) {
  return even_polyhedral_cover(g, walk_map(g, fs), opts);
}

ReducedCover reduced_cover(const CubicGraph& g, const WalkMap& wm, int k, std::uint64_t seed,
                           const CoverOptions& opts) {
  if (k < 1 || k > 20) throw TooLarge("cover group exponent must be between 1 and 20");
  ReducedCover out;
  out.seed = seed;
  // Raw engine bits keep the draw identical across platforms; distributions
  // have implementation-defined streams.
  std::mt19937_64 rng(seed);
  const std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> labels(static_cast<size_t>(g.edge_count()));
  for (int attempt = 1; attempt <= opts.retry_budget; ++attempt) {
    out.attempts = attempt;
    for (auto& x : labels) x = static_cast<std::uint32_t>(rng()) & mask;
    std::optional<CoverResult> cover;
    try {
      cover = lift_cover(g, wm, k, labels);
    } catch (const SurfaceError&) {
      continue;  // a lifted walk failed to close into simple cycles
    }
    bool even = true;
    for (int f = 0; f < cover->faces.face_count() && even; ++f)
      even = cover->faces.face(f).size() % 2 == 0;
    if (!even) continue;
    if (!check_manifold(cover->graph, cover->faces).ok) continue;
    if (!check_polyhedral(cover->graph, cover->faces).ok) continue;
    out.cover = std::move(cover);
    return out;
  }
  return out;
}

ReducedCover reduced_cover(const CubicGraph& g, const FaceSet& fs, int k, std::uint64_t seed,
                           const CoverOptions& opts) {
  return reduced_cover(g, walk_map(g, fs), k, seed, opts);
}

CoverResult sixfold_cover(const CubicGraph& g, const FaceSet& fs) {
  require_closed_even_polyhedral(g, fs);
  const auto corners = corner_edges(g, fs);
  auto other_at = [&](int f, VertexId v, EdgeId e) {
    const auto& pair = corners.at({f, v});
    return pair[0] == e ? pair[1] : pair[0];
  };

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()) * 6);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& be = g.edge(e);
    const int su = slot_of(g, be.u, e);
    const int sv = slot_of(g, be.v, e);
    const auto& ef = fs.faces_of_edge(e);
    for (int p = 0; p < 6; ++p) {
      std::array<int, 3> axes{-1, -1, -1};
      axes[static_cast<size_t>(sv)] = kPerms[static_cast<size_t>(p)][static_cast<size_t>(su)];
      for (int f : ef) {
        EdgeId ou = other_at(f, be.u, e);
        EdgeId ov = other_at(f, be.v, e);
        axes[static_cast<size_t>(slot_of(g, be.v, ov))] =
            kPerms[static_cast<size_t>(p)][static_cast<size_t>(slot_of(g, be.u, ou))];
      }
      int q = perm_index(axes);
      if (q < 0) throw GraphError("internal: axis crossing rule produced no permutation");
      edges.push_back(mk(be.u * 6 + p, be.v * 6 + q));
    }
  }

  constexpr std::array<std::array<int, 2>, 6> kAxisPairs = {
      {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  std::vector<std::vector<VertexId>> faces;
  std::vector<Axis> colors;
  faces.reserve(static_cast<size_t>(fs.face_count()) * 6);
  for (int f = 0; f < fs.face_count(); ++f) {
    const auto& c = fs.face(f);
    const int len = static_cast<int>(c.size());
    std::vector<EdgeId> es(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j)
      es[static_cast<size_t>(j)] = *g.find_edge(c[static_cast<size_t>(j)],
                                                c[static_cast<size_t>((j + 1) % len)]);
    for (const auto& pair : kAxisPairs) {
      const int a = pair[0];
      const int b = pair[1];
      std::vector<VertexId> cyc(static_cast<size_t>(len));
      for (int j = 0; j < len; ++j) {
        const int jin = (j + len - 1) % len;
        const int axin = jin % 2 == 0 ? a : b;
        const int axout = j % 2 == 0 ? a : b;
        const VertexId v = c[static_cast<size_t>(j)];
        std::array<int, 3> axes{-1, -1, -1};
        axes[static_cast<size_t>(slot_of(g, v, es[static_cast<size_t>(jin)]))] = axin;
        axes[static_cast<size_t>(slot_of(g, v, es[static_cast<size_t>(j)]))] = axout;
        for (auto& x : axes)
          if (x < 0) x = 3 - axin - axout;
        int q = perm_index(axes);
        if (q < 0) throw GraphError("internal: face labeling produced no permutation");
        cyc[static_cast<size_t>(j)] = v * 6 + q;
      }
      faces.push_back(std::move(cyc));
      colors.push_back(static_cast<Axis>(3 - a - b));
    }
  }

  CubicGraph cover(g.vertex_count() * 6, std::move(edges));
  FaceSet cover_faces(cover, std::move(faces));
  std::vector<VertexId> projection(static_cast<size_t>(cover.vertex_count()));
  for (VertexId v = 0; v < cover.vertex_count(); ++v) projection[static_cast<size_t>(v)] = v / 6;
  int components = component_count(cover);
  if (6 % components != 0)
    throw GraphError("internal: six-fold cover component count does not divide six");
  return CoverResult{std::move(cover),  std::move(cover_faces), std::move(projection),
                     6 / components,    components,             std::move(colors)};
}

int classify_cover_case(const CubicGraph& g, const FaceSet& fs) {
  require_closed_even_polyhedral(g, fs);
  if (std::holds_alternative<ColoredSurface>(check_xyz_surface(g, fs))) return 1;
  if (perfect_face_cover(g, fs)) return 2;
  const std::vector<int> tau = edge_orientation_parity(g, fs);
  // Reachability over (vertex, length parity, orientation parity): the map
  // falls in the three-fold case exactly when every closed walk preserves
  // orientation iff its length is even.
  const VertexId n = g.vertex_count();
  std::vector<char> seen(static_cast<size_t>(n) * 4, 0);
  std::deque<int> queue;
  seen[0] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    int state = queue.front();
    queue.pop_front();
    VertexId v = state / 4;
    int len = (state / 2) % 2;
    int rev = state % 2;
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      int next = w * 4 + ((len ^ 1) * 2) + (rev ^ tau[static_cast<size_t>(e)]);
      if (!seen[static_cast<size_t>(next)]) {
        seen[static_cast<size_t>(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  const bool even_reversing = seen[0 * 4 + 0 * 2 + 1];
  const bool odd_preserving = seen[0 * 4 + 1 * 2 + 0];
  return (!even_reversing && !odd_preserving) ? 3 : 6;
}

}  // namespace xyz
