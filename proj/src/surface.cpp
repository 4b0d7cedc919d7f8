#include "xyz/surface.hpp"

#include <algorithm>
#include <queue>

namespace xyz {

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default: return "z";
  }
}

std::optional<Axis> axis_from_name(const std::string& s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  return std::nullopt;
}

FaceNotCycle::FaceNotCycle(int f, const std::string& why)
    : SurfaceError("face " + std::to_string(f) + ": " + why), face(f) {}

FaceSet::FaceSet(const CubicGraph& g, std::vector<std::vector<VertexId>> faces)
    : faces_(std::move(faces)) {
  edge_faces_.assign(static_cast<size_t>(g.edge_count()), {});
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  for (int f = 0; f < face_count(); ++f) {
    const auto& cyc = faces_[static_cast<size_t>(f)];
    if (cyc.size() < 3) throw FaceNotCycle(f, "length below 3");
    for (VertexId v : cyc) {
      if (v < 0 || v >= g.vertex_count()) throw FaceNotCycle(f, "vertex out of range");
      if (seen[static_cast<size_t>(v)]) throw FaceNotCycle(f, "repeated vertex");
      seen[static_cast<size_t>(v)] = 1;
    }
    for (VertexId v : cyc) seen[static_cast<size_t>(v)] = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      auto e = g.find_edge(a, b);
      if (!e) throw FaceNotCycle(f, "consecutive vertices not adjacent");
      auto& list = edge_faces_[static_cast<size_t>(*e)];
      if (list.size() >= 2)
        throw FaceNotCycle(f, "edge covered more than twice");
      list.push_back(f);
    }
  }
}

std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle) {
  const size_t L = cycle.size();
  size_t mi = 0;
  for (size_t i = 1; i < L; ++i)
    if (cycle[i] < cycle[mi]) mi = i;
  std::vector<VertexId> fwd(L), bwd(L);
  for (size_t i = 0; i < L; ++i) {
    fwd[i] = cycle[(mi + i) % L];
    bwd[i] = cycle[(mi + L - i) % L];
  }
  return fwd <= bwd ? fwd : bwd;
}

std::vector<std::vector<VertexId>> FaceSet::canonical() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back(canonical_cycle(f));
  std::sort(out.begin(), out.end());
  return out;
}

ManifoldCheck check_manifold(const CubicGraph& g, const FaceSet& fs) {
  ManifoldCheck out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (fs.edge_multiplicity(e) != 2) {
      out.bad_edge = e;
      out.multiplicity = fs.edge_multiplicity(e);
      return out;
    }
  out.ok = true;
  return out;
}

PolyhedralCheck check_polyhedral(const CubicGraph& g, const FaceSet& fs) {
  PolyhedralCheck out;
  const int nf = fs.face_count();
  const EdgeId m = g.edge_count();
  // Key each edge by its sorted incident-face pair; radix sort by the minor
  // then the major face id (two bucket passes), then scan neighbors.
  struct Keyed {
    int lo, hi;
    EdgeId e;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    const auto& f = fs.faces_of_edge(e);
    if (f.size() != 2) continue;  // not this check's concern
    keyed.push_back({std::min(f[0], f[1]), std::max(f[0], f[1]), e});
  }
  std::vector<Keyed> tmp(keyed.size());
  std::vector<int> bucket(static_cast<size_t>(nf) + 1, 0);
  auto pass = [&](auto key) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (const Keyed& k : keyed) ++bucket[static_cast<size_t>(key(k)) + 1];
    for (size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
    for (const Keyed& k : keyed) tmp[static_cast<size_t>(bucket[static_cast<size_t>(key(k))]++)] = k;
    keyed.swap(tmp);
  };
  pass([](const Keyed& k) { return k.lo; });
  pass([](const Keyed& k) { return k.hi; });  // stable: final order (hi, lo)
  for (size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].lo == keyed[i - 1].lo && keyed[i].hi == keyed[i - 1].hi) {
      out.face_a = keyed[i].lo;
      out.face_b = keyed[i].hi;
      out.shared_a = keyed[i - 1].e;
      out.shared_b = keyed[i].e;
      return out;
    }
  out.ok = true;
  return out;
}

namespace {

std::vector<std::vector<int>> face_adjacency(const CubicGraph& g, const FaceSet& fs) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(fs.face_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& f = fs.faces_of_edge(e);
    if (f.size() == 2 && f[0] != f[1]) {
      adj[static_cast<size_t>(f[0])].push_back(f[1]);
      adj[static_cast<size_t>(f[1])].push_back(f[0]);
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace

std::variant<std::vector<Axis>, ColoringFailure> three_color_faces(const CubicGraph& g,
                                                                   const FaceSet& fs) {
  const int nf = fs.face_count();
  auto adj = face_adjacency(g, fs);
  std::vector<std::uint8_t> avail(static_cast<size_t>(nf), 0b111);
  std::vector<int> color(static_cast<size_t>(nf), -1);
  std::queue<int> forced;
  int colored = 0;

  auto assign = [&](int f, int c) -> std::optional<ColoringFailure> {
    color[static_cast<size_t>(f)] = c;
    ++colored;
    for (int nb : adj[static_cast<size_t>(f)]) {
      if (color[static_cast<size_t>(nb)] == c) return ColoringFailure{nb, {}};
      if (color[static_cast<size_t>(nb)] != -1) continue;
      std::uint8_t before = avail[static_cast<size_t>(nb)];
      std::uint8_t after = static_cast<std::uint8_t>(before & ~(1u << c));
      if (after == 0) return ColoringFailure{nb, {}};
      avail[static_cast<size_t>(nb)] = after;
      if (after != before && (after & (after - 1)) == 0) forced.push(nb);
    }
    return std::nullopt;
  };

  if (nf == 0) return std::vector<Axis>{};
  // Seed: the two faces of the lowest edge that has two distinct faces.
  int fa = -1, fb = -1;
  for (EdgeId e = 0; e < g.edge_count() && fa == -1; ++e) {
    const auto& f = fs.faces_of_edge(e);
    if (f.size() == 2 && f[0] != f[1]) {
      fa = std::min(f[0], f[1]);
      fb = std::max(f[0], f[1]);
    }
  }
  if (fa == -1) return ColoringFailure{-1, {}};
  if (auto fail = assign(fa, 0)) return *fail;
  if (auto fail = assign(fb, 1)) return *fail;
  while (colored < nf) {
    if (forced.empty()) {
      ColoringFailure fail;
      for (int f = 0; f < nf; ++f)
        if (color[static_cast<size_t>(f)] == -1) fail.stalled.push_back(f);
      return fail;
    }
    int f = forced.front();
    forced.pop();
    if (color[static_cast<size_t>(f)] != -1) continue;
    std::uint8_t bits = avail[static_cast<size_t>(f)];
    int c = bits == 1 ? 0 : bits == 2 ? 1 : 2;
    if (auto fail = assign(f, c)) return *fail;
  }
  std::vector<Axis> out(static_cast<size_t>(nf));
  for (int f = 0; f < nf; ++f) out[static_cast<size_t>(f)] = static_cast<Axis>(color[static_cast<size_t>(f)]);
  return out;
}

ColoredSurface::ColoredSurface(CubicGraph g, FaceSet faces, std::vector<Axis> colors)
    : graph_(std::move(g)), faces_(std::move(faces)), colors_(std::move(colors)) {
  if (colors_.size() != static_cast<size_t>(faces_.face_count()))
    throw SurfaceError("color count does not match face count");
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    const auto& f = faces_.faces_of_edge(e);
    if (f.size() == 2 && colors_[static_cast<size_t>(f[0])] == colors_[static_cast<size_t>(f[1])])
      throw SurfaceError("adjacent faces share a color at edge " + std::to_string(e));
  }
}

Axis ColoredSurface::edge_axis(EdgeId e) const {
  const auto& f = faces_.faces_of_edge(e);
  if (f.size() != 2) throw SurfaceError("edge not on two faces");
  return axis_complement(colors_[static_cast<size_t>(f[0])], colors_[static_cast<size_t>(f[1])]);
}

namespace {

std::variant<ColoredSurface, SurfaceRejection> finish_surface(const CubicGraph& g,
                                                              const FaceSet& fs,
                                                              std::vector<Axis> colors) {
  return ColoredSurface(g, fs, std::move(colors));
}

std::optional<SurfaceRejection> structural_checks(const CubicGraph& g, const FaceSet& fs) {
  auto mf = check_manifold(g, fs);
  if (!mf.ok)
    return SurfaceRejection{SurfaceRejection::Reason::NotManifold,
                            "edge " + std::to_string(mf.bad_edge) + " covered " +
                                std::to_string(mf.multiplicity) + " times"};
  for (int f = 0; f < fs.face_count(); ++f) {
    size_t len = fs.face(f).size();
    if (len < 4)
      return SurfaceRejection{SurfaceRejection::Reason::ShortFace,
                              "face " + std::to_string(f) + " has length " + std::to_string(len)};
    if (len % 2 != 0)
      return SurfaceRejection{SurfaceRejection::Reason::OddFace,
                              "face " + std::to_string(f) + " has odd length " + std::to_string(len)};
  }
  auto ph = check_polyhedral(g, fs);
  if (!ph.ok)
    return SurfaceRejection{SurfaceRejection::Reason::NotPolyhedral,
                            "faces " + std::to_string(ph.face_a) + " and " +
                                std::to_string(ph.face_b) + " share edges " +
                                std::to_string(ph.shared_a) + "," + std::to_string(ph.shared_b)};
  return std::nullopt;
}

}  // namespace

std::variant<ColoredSurface, SurfaceRejection> check_xyz_surface(const CubicGraph& g,
                                                                 const FaceSet& fs) {
  if (auto rej = structural_checks(g, fs)) return *rej;
  auto colored = three_color_faces(g, fs);
  if (std::holds_alternative<ColoringFailure>(colored))
    return SurfaceRejection{SurfaceRejection::Reason::NotThreeColorable, "propagation failed"};
  return finish_surface(g, fs, std::get<std::vector<Axis>>(std::move(colored)));
}

std::variant<ColoredSurface, SurfaceRejection> check_xyz_surface_with_coloring(
    const CubicGraph& g, const FaceSet& fs, const std::vector<Axis>& colors) {
  if (auto rej = structural_checks(g, fs)) return *rej;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& f = fs.faces_of_edge(e);
    if (f.size() == 2 && colors[static_cast<size_t>(f[0])] == colors[static_cast<size_t>(f[1])])
      return SurfaceRejection{SurfaceRejection::Reason::NotThreeColorable,
                              "given coloring not proper at edge " + std::to_string(e)};
  }
  return finish_surface(g, fs, colors);
}

int euler_characteristic(const CubicGraph& g, const FaceSet& fs) {
  return g.vertex_count() - g.edge_count() + fs.face_count();
}

std::variant<Orientation, OrientationWitness> orient_faces(const CubicGraph& g,
                                                           const FaceSet& fs) {
  const int nf = fs.face_count();
  // Direction in which face f traverses edge e, as +1 (u->v of the edge) or
  // -1, by listed order.
  auto traversal = [&](int f, EdgeId e) -> int {
    const auto& cyc = fs.face(f);
    const Edge& ed = g.edge(e);
    for (size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a == ed.u && b == ed.v) return +1;
      if (a == ed.v && b == ed.u) return -1;
    }
    throw SurfaceError("face does not contain its incident edge");
  };
  // Constraint per edge with two distinct faces: flips must differ from the
  // listed traversal agreement.  Same-direction listed traversals mean the
  // two faces need different flip parity.
  std::vector<int> flip(static_cast<size_t>(nf), -1);
  std::vector<int> parent(static_cast<size_t>(nf), -1);
  std::vector<EdgeId> parent_edge(static_cast<size_t>(nf), -1);
  for (int root = 0; root < nf; ++root) {
    if (flip[static_cast<size_t>(root)] != -1) continue;
    flip[static_cast<size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (VertexId i = 0; i < static_cast<VertexId>(fs.face(f).size()); ++i) {
        const auto& cyc = fs.face(f);
        EdgeId e = *g.find_edge(cyc[static_cast<size_t>(i)],
                                cyc[(static_cast<size_t>(i) + 1) % cyc.size()]);
        const auto& facepair = fs.faces_of_edge(e);
        if (facepair.size() != 2) continue;
        int other = facepair[0] == f ? facepair[1] : facepair[0];
        if (other == f) continue;
        int want =
            traversal(f, e) == traversal(other, e) ? 1 - flip[static_cast<size_t>(f)] : flip[static_cast<size_t>(f)];
        if (flip[static_cast<size_t>(other)] == -1) {
          flip[static_cast<size_t>(other)] = want;
          parent[static_cast<size_t>(other)] = f;
          parent_edge[static_cast<size_t>(other)] = e;
          q.push(other);
        } else if (flip[static_cast<size_t>(other)] != want) {
          // Odd constraint cycle: walk both faces to the root.
          OrientationWitness w;
          std::vector<int> path_f, path_o;
          std::vector<EdgeId> via_f, via_o;
          for (int x = f; x != -1; x = parent[static_cast<size_t>(x)]) {
            path_f.push_back(x);
            if (parent[static_cast<size_t>(x)] != -1) via_f.push_back(parent_edge[static_cast<size_t>(x)]);
          }
          for (int x = other; x != -1; x = parent[static_cast<size_t>(x)]) {
            path_o.push_back(x);
            if (parent[static_cast<size_t>(x)] != -1) via_o.push_back(parent_edge[static_cast<size_t>(x)]);
          }
          w.face_walk = path_f;
          w.via.assign(via_f.begin(), via_f.end());
          w.via.push_back(e);
          for (size_t i = path_o.size(); i-- > 0;) {
            w.face_walk.push_back(path_o[i]);
            if (i > 0) w.via.push_back(via_o[i - 1]);
          }
          return w;
        }
      }
    }
  }
  Orientation out;
  out.flip.assign(flip.begin(), flip.end());
  return out;
}

TopologyClass classify_topology(const CubicGraph& g, const FaceSet& fs) {
  TopologyClass out;
  out.euler_characteristic = euler_characteristic(g, fs);
  out.orientable = std::holds_alternative<Orientation>(orient_faces(g, fs));
  if (out.orientable)
    out.genus = (2 - out.euler_characteristic) / 2;
  else
    out.crosscap = 2 - out.euler_characteristic;
  return out;
}

std::optional<std::vector<int>> perfect_face_cover(const CubicGraph& g, const FaceSet& fs) {
  const int nf = fs.face_count();
  const VertexId n = g.vertex_count();
  // Membership map: which faces pass through each vertex.
  std::vector<std::vector<int>> at_vertex(static_cast<size_t>(n));
  for (int f = 0; f < nf; ++f)
    for (VertexId v : fs.face(f)) at_vertex[static_cast<size_t>(v)].push_back(f);
  // Auxiliary adjacency: for edge uv, join the face at u avoiding uv with the
  // face at v avoiding uv.
  std::vector<std::vector<int>> aux(static_cast<size_t>(nf));
  auto face_avoiding = [&](VertexId v, EdgeId e) -> std::optional<int> {
    int found = -1, count = 0;
    for (int f : at_vertex[static_cast<size_t>(v)]) {
      const auto& onedge = fs.faces_of_edge(e);
      if (std::find(onedge.begin(), onedge.end(), f) == onedge.end()) {
        found = f;
        ++count;
      }
    }
    if (count != 1) return std::nullopt;
    return found;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    auto fu = face_avoiding(u, e), fv = face_avoiding(v, e);
    if (fu && fv && *fu != *fv) {
      aux[static_cast<size_t>(*fu)].push_back(*fv);
      aux[static_cast<size_t>(*fv)].push_back(*fu);
    }
  }
  // Scan auxiliary components in ascending smallest-face order.
  std::vector<char> visited(static_cast<size_t>(nf), 0);
  for (int seed = 0; seed < nf; ++seed) {
    if (visited[static_cast<size_t>(seed)]) continue;
    std::vector<int> comp{seed};
    visited[static_cast<size_t>(seed)] = 1;
    for (size_t head = 0; head < comp.size(); ++head)
      for (int nb : aux[static_cast<size_t>(comp[head])])
        if (!visited[static_cast<size_t>(nb)]) {
          visited[static_cast<size_t>(nb)] = 1;
          comp.push_back(nb);
        }
    std::vector<int> times(static_cast<size_t>(n), 0);
    bool good = true;
    for (int f : comp)
      for (VertexId v : fs.face(f))
        if (++times[static_cast<size_t>(v)] > 1) {
          good = false;
          break;
        }
    if (good && std::all_of(times.begin(), times.end(), [](int t) { return t == 1; })) {
      std::sort(comp.begin(), comp.end());
      return comp;
    }
  }
  return std::nullopt;
}

}  // namespace xyz
