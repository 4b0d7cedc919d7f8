#include "xyz/embed.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace xyz {

namespace {

// The face of each color at each vertex.  Every vertex of a valid colored
// surface lies on exactly one face per color.
std::vector<std::array<int, 3>> faces_at_vertices(const ColoredSurface& s) {
  std::vector<std::array<int, 3>> at(static_cast<size_t>(s.graph().vertex_count()),
                                     {-1, -1, -1});
  for (int f = 0; f < s.faces().face_count(); ++f)
    for (VertexId v : s.faces().face(f)) {
      int c = static_cast<int>(s.color(f));
      if (at[static_cast<size_t>(v)][static_cast<size_t>(c)] != -1)
        throw SurfaceError("vertex " + std::to_string(v) + " lies on two faces of one color");
      at[static_cast<size_t>(v)][static_cast<size_t>(c)] = f;
    }
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v)
    for (int c = 0; c < 3; ++c)
      if (at[static_cast<size_t>(v)][static_cast<size_t>(c)] == -1)
        throw SurfaceError("vertex " + std::to_string(v) + " misses a face color");
  return at;
}

}  // namespace

FaceNumbering number_faces(const ColoredSurface& s) {
  FaceNumbering out;
  const int nf = s.faces().face_count();
  std::vector<VertexId> smallest(static_cast<size_t>(nf));
  for (int f = 0; f < nf; ++f)
    smallest[static_cast<size_t>(f)] =
        *std::min_element(s.faces().face(f).begin(), s.faces().face(f).end());
  for (int f = 0; f < nf; ++f)
    out.class_faces[static_cast<size_t>(s.color(f))].push_back(f);
  for (auto& cls : out.class_faces)
    std::sort(cls.begin(), cls.end(), [&](int a, int b) {
      return smallest[static_cast<size_t>(a)] < smallest[static_cast<size_t>(b)];
    });
  out.index_in_class.assign(static_cast<size_t>(nf), -1);
  for (const auto& cls : out.class_faces)
    for (size_t i = 0; i < cls.size(); ++i)
      out.index_in_class[static_cast<size_t>(cls[i])] = static_cast<int>(i);
  return out;
}

Embedding3D coordinates_from_surface(const ColoredSurface& s) {
  return coordinates_from_surface(s, CoordOverride{});
}

Embedding3D coordinates_from_surface(const ColoredSurface& s, const CoordOverride& over) {
  FaceNumbering num = number_faces(s);
  std::array<const std::vector<std::int64_t>*, 3> values{&over.x, &over.y, &over.z};
  for (int c = 0; c < 3; ++c)
    if (!values[static_cast<size_t>(c)]->empty() &&
        values[static_cast<size_t>(c)]->size() != num.class_faces[static_cast<size_t>(c)].size())
      throw MalformedDocument("override for axis " + std::string(axis_name(static_cast<Axis>(c))) +
                              " must list one value per face of that color");
  auto at = faces_at_vertices(s);
  Embedding3D e(static_cast<size_t>(s.graph().vertex_count()));
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v)
    for (int c = 0; c < 3; ++c) {
      int idx = num.index_in_class[static_cast<size_t>(at[static_cast<size_t>(v)][static_cast<size_t>(c)])];
      const auto& vals = *values[static_cast<size_t>(c)];
      e[static_cast<size_t>(v)][static_cast<size_t>(c)] =
          vals.empty() ? idx : vals[static_cast<size_t>(idx)];
    }
  return e;
}

std::optional<EmbeddingViolation> validate_xyz_embedding(const CubicGraph& g,
                                                         const Embedding3D& e) {
  if (e.size() != static_cast<size_t>(g.vertex_count()))
    throw MalformedDocument("embedding size does not match vertex count");
  for (EdgeId ed = 0; ed < g.edge_count(); ++ed) {
    auto [u, v] = g.edge(ed);
    int diff = 0;
    for (int c = 0; c < 3; ++c)
      if (e[static_cast<size_t>(u)][static_cast<size_t>(c)] != e[static_cast<size_t>(v)][static_cast<size_t>(c)]) ++diff;
    if (diff != 1) return EmbeddingViolation{"edge-not-axis-parallel", {u, v}, ed};
  }
  for (int axis = 0; axis < 3; ++axis) {
    int c1 = axis == 0 ? 1 : 0;
    int c2 = axis == 2 ? 1 : 2;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<VertexId>> lines;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      lines[{e[static_cast<size_t>(v)][static_cast<size_t>(c1)], e[static_cast<size_t>(v)][static_cast<size_t>(c2)]}]
          .push_back(v);
    for (const auto& [key, verts] : lines) {
      if (verts.size() != 2) return EmbeddingViolation{"line-count", verts, std::nullopt};
      if (!g.adjacent(verts[0], verts[1]))
        return EmbeddingViolation{"line-not-edge", verts, std::nullopt};
    }
  }
  return std::nullopt;
}

std::array<int, 3> grid_extent(const Embedding3D& e) {
  std::array<int, 3> out{};
  for (int c = 0; c < 3; ++c) {
    std::set<std::int64_t> vals;
    for (const Coord& p : e) vals.insert(p[static_cast<size_t>(c)]);
    out[static_cast<size_t>(c)] = static_cast<int>(vals.size());
  }
  return out;
}

std::optional<MatchingPartition> partition_from_embedding(const CubicGraph& g,
                                                          const Embedding3D& e) {
  if (e.size() != static_cast<size_t>(g.vertex_count()))
    throw MalformedDocument("embedding size does not match vertex count");
  MatchingPartition p;
  p.axis.resize(static_cast<size_t>(g.edge_count()));
  for (EdgeId ed = 0; ed < g.edge_count(); ++ed) {
    auto [u, v] = g.edge(ed);
    int diff = -1, count = 0;
    for (int c = 0; c < 3; ++c)
      if (e[static_cast<size_t>(u)][static_cast<size_t>(c)] != e[static_cast<size_t>(v)][static_cast<size_t>(c)]) {
        diff = c;
        ++count;
      }
    if (count != 1) return std::nullopt;
    p.axis[static_cast<size_t>(ed)] = static_cast<Axis>(diff);
  }
  return p;
}

PartitionCycles faces_from_embedding(const CubicGraph& g, const Embedding3D& e) {
  auto p = partition_from_embedding(g, e);
  if (!p || !valid_partition(g, *p))
    throw MalformedDocument("embedding does not induce an axis partition");
  return cycles_from_partition(g, *p);
}

DrawingMetrics drawing_metrics(const CubicGraph& g, const Embedding3D& e) {
  auto part = partition_from_embedding(g, e);
  if (!part) throw MalformedDocument("embedding has a non-axis-parallel edge");
  DrawingMetrics out;
  auto extent = grid_extent(e);
  out.n_yz = extent[0];
  out.n_xz = extent[1];
  out.n_xy = extent[2];
  out.volume = static_cast<std::int64_t>(out.n_xy - 1) * (out.n_yz - 1) * (out.n_xz - 1);

  // Segment ranges: per edge, the running axis, its closed range, and the two
  // fixed coordinates.
  struct Seg {
    int axis;
    std::int64_t lo, hi;
    Coord fixed;  // fixed[axis] unused
  };
  std::vector<Seg> segs(static_cast<size_t>(g.edge_count()));
  for (EdgeId ed = 0; ed < g.edge_count(); ++ed) {
    auto [u, v] = g.edge(ed);
    int a = static_cast<int>(part->axis[static_cast<size_t>(ed)]);
    Seg s;
    s.axis = a;
    s.lo = std::min(e[static_cast<size_t>(u)][static_cast<size_t>(a)], e[static_cast<size_t>(v)][static_cast<size_t>(a)]);
    s.hi = std::max(e[static_cast<size_t>(u)][static_cast<size_t>(a)], e[static_cast<size_t>(v)][static_cast<size_t>(a)]);
    s.fixed = e[static_cast<size_t>(u)];
    segs[static_cast<size_t>(ed)] = s;
  }
  for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1)
    for (EdgeId e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
      auto [u1, v1] = g.edge(e1);
      auto [u2, v2] = g.edge(e2);
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
      const Seg& a = segs[static_cast<size_t>(e1)];
      const Seg& b = segs[static_cast<size_t>(e2)];
      if (a.axis == b.axis) {
        // Parallel: meet only if collinear and overlapping (impossible in a
        // valid embedding, counted defensively).
        int p = a.axis == 0 ? 1 : 0;
        int q = a.axis == 2 ? 1 : 2;
        if (a.fixed[static_cast<size_t>(p)] == b.fixed[static_cast<size_t>(p)] &&
            a.fixed[static_cast<size_t>(q)] == b.fixed[static_cast<size_t>(q)] &&
            a.lo <= b.hi && b.lo <= a.hi)
          ++out.crossings;
        continue;
      }
      int third = 3 - a.axis - b.axis;
      if (a.fixed[static_cast<size_t>(third)] != b.fixed[static_cast<size_t>(third)]) continue;
      if (b.fixed[static_cast<size_t>(a.axis)] >= a.lo && b.fixed[static_cast<size_t>(a.axis)] <= a.hi &&
          a.fixed[static_cast<size_t>(b.axis)] >= b.lo && a.fixed[static_cast<size_t>(b.axis)] <= b.hi)
        ++out.crossings;
    }
  return out;
}

ConnectedSum connected_sum(const ColoredSurface& a, VertexId va, const ColoredSurface& b,
                           VertexId vb, int rotation) {
  if (rotation < 0 || rotation > 2) throw IncompatibleGluing("rotation must be 0, 1, or 2");
  std::array<Axis, 3> corr;
  for (int c = 0; c < 3; ++c) corr[static_cast<size_t>(c)] = static_cast<Axis>((c + rotation) % 3);
  return connected_sum(a, va, b, vb, corr);
}

ConnectedSum connected_sum(const ColoredSurface& a, VertexId va, const ColoredSurface& b,
                           VertexId vb, const std::array<Axis, 3>& corr) {
  const CubicGraph& ga = a.graph();
  const CubicGraph& gb = b.graph();
  if (va < 0 || va >= ga.vertex_count() || vb < 0 || vb >= gb.vertex_count())
    throw MalformedDocument("connected_sum vertex out of range");
  // corr maps b's colors into the result's; it must be a bijection.
  {
    unsigned mask = 0;
    for (Axis c : corr) mask |= 1u << static_cast<int>(c);
    if (mask != 0b111u) throw IncompatibleGluing("color correspondence is not a bijection");
  }
  std::array<Axis, 3> inv{};  // inv[result color] = b color
  for (int c = 0; c < 3; ++c) inv[static_cast<size_t>(corr[static_cast<size_t>(c)])] = static_cast<Axis>(c);

  // Stub of each axis: the far endpoint of the deleted vertex's edge on that
  // axis.
  auto stubs = [](const ColoredSurface& s, VertexId v) {
    std::array<VertexId, 3> out{-1, -1, -1};
    for (EdgeId e : s.graph().incident(v))
      out[static_cast<size_t>(s.edge_axis(e))] = s.graph().other_end(e, v);
    return out;
  };
  std::array<VertexId, 3> sa = stubs(a, va);
  std::array<VertexId, 3> sb = stubs(b, vb);

  const VertexId na = ga.vertex_count();
  auto ra = [va](VertexId v) { return v > va ? v - 1 : v; };
  auto rb = [vb, na](VertexId v) { return na - 1 + (v > vb ? v - 1 : v); };

  std::vector<Edge> edges;
  for (const Edge& ed : ga.edges())
    if (ed.u != va && ed.v != va) edges.push_back({ra(ed.u), ra(ed.v)});
  for (const Edge& ed : gb.edges())
    if (ed.u != vb && ed.v != vb) edges.push_back({rb(ed.u), rb(ed.v)});
  // New edge of axis d joins a's d-stub to b's stub of the color mapping to d.
  for (int d = 0; d < 3; ++d)
    edges.push_back({ra(sa[static_cast<size_t>(d)]),
                     rb(sb[static_cast<size_t>(inv[static_cast<size_t>(d)])])});

  auto at_a = faces_at_vertices(a);
  auto at_b = faces_at_vertices(b);

  // Path of a face around its deleted vertex: the cycle with v removed,
  // running from v's successor to v's predecessor.
  auto open_path = [](const FaceSet& fs, int f, VertexId v) {
    const auto& cyc = fs.face(f);
    size_t i = 0;
    while (cyc[i] != v) ++i;
    std::vector<VertexId> path;
    for (size_t k = 1; k < cyc.size(); ++k) path.push_back(cyc[(i + k) % cyc.size()]);
    return path;
  };

  std::vector<std::vector<VertexId>> faces;
  std::vector<Axis> colors;
  for (int f = 0; f < a.faces().face_count(); ++f) {
    Axis color = a.color(f);
    int fb = at_b[static_cast<size_t>(vb)][static_cast<size_t>(inv[static_cast<size_t>(color)])];
    if (f != at_a[static_cast<size_t>(va)][static_cast<size_t>(color)]) {
      std::vector<VertexId> cyc;
      for (VertexId v : a.faces().face(f)) cyc.push_back(ra(v));
      faces.push_back(std::move(cyc));
      colors.push_back(color);
      continue;
    }
    // Merged face: a-part path, then the b-part oriented so paired stubs are
    // consecutive.
    std::vector<VertexId> pa = open_path(a.faces(), f, va);
    std::vector<VertexId> pb = open_path(b.faces(), fb, vb);
    VertexId endA = pa.back();
    int d = -1;  // axis of a's stub at the end of the a-part
    for (int c = 0; c < 3; ++c)
      if (sa[static_cast<size_t>(c)] == endA) d = c;
    if (d < 0) throw IncompatibleGluing("face around removed vertex does not end at a stub");
    VertexId want = sb[static_cast<size_t>(inv[static_cast<size_t>(d)])];
    if (pb.front() != want) std::reverse(pb.begin(), pb.end());
    if (pb.front() != want) throw IncompatibleGluing("stub pairing does not close the face");
    std::vector<VertexId> cyc;
    for (VertexId v : pa) cyc.push_back(ra(v));
    for (VertexId v : pb) cyc.push_back(rb(v));
    faces.push_back(std::move(cyc));
    colors.push_back(color);
  }
  for (int f = 0; f < b.faces().face_count(); ++f) {
    Axis bcolor = b.color(f);
    if (f == at_b[static_cast<size_t>(vb)][static_cast<size_t>(bcolor)]) continue;  // merged above
    std::vector<VertexId> cyc;
    for (VertexId v : b.faces().face(f)) cyc.push_back(rb(v));
    faces.push_back(std::move(cyc));
    colors.push_back(corr[static_cast<size_t>(bcolor)]);
  }

  CubicGraph graph(na + gb.vertex_count() - 2, edges);
  FaceSet fs(graph, std::move(faces));
  ColoredSurface surface(graph, std::move(fs), std::move(colors));
  return ConnectedSum{std::move(graph), std::move(surface)};
}

std::string export_svg(const CubicGraph& g, const Embedding3D& e) {
  if (e.size() != static_cast<size_t>(g.vertex_count()))
    throw MalformedDocument("embedding size does not match vertex count");
  // Integer isometric projection; the +5s term shears points stacked along
  // (1,1,1) apart (injective while every coordinate stays below 29).
  auto project = [](const Coord& c) {
    std::int64_t s = c[0] + c[1] + c[2];
    std::int64_t px = 87 * (c[0] - c[1]) + 5 * s;
    std::int64_t py = 50 * (c[0] + c[1]) - 100 * c[2] + 5 * s;
    return std::pair<std::int64_t, std::int64_t>{px, py};
  };
  std::int64_t minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const Coord& c : e) {
    auto p = project(c);
    pts.push_back(p);
    if (first || p.first < minx) minx = p.first;
    if (first || p.first > maxx) maxx = p.first;
    if (first || p.second < miny) miny = p.second;
    if (first || p.second > maxy) maxy = p.second;
    first = false;
  }
  const std::int64_t margin = 60, legend_h = 160;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minx - margin) << " "
      << (miny - margin - legend_h) << " " << (maxx - minx + 2 * margin) << " "
      << (maxy - miny + 2 * margin + legend_h) << "\">\n";
  static const char* axis_color[3] = {"#c43", "#2a7", "#36c"};
  for (EdgeId ed = 0; ed < g.edge_count(); ++ed) {
    auto [u, v] = g.edge(ed);
    int diff = -1, count = 0;
    for (int c = 0; c < 3; ++c)
      if (e[static_cast<size_t>(u)][static_cast<size_t>(c)] != e[static_cast<size_t>(v)][static_cast<size_t>(c)]) {
        diff = c;
        ++count;
      }
    const char* color = count == 1 ? axis_color[diff] : "#888";
    svg << "  <line x1=\"" << pts[static_cast<size_t>(u)].first << "\" y1=\""
        << pts[static_cast<size_t>(u)].second << "\" x2=\"" << pts[static_cast<size_t>(v)].first
        << "\" y2=\"" << pts[static_cast<size_t>(v)].second << "\" stroke=\"" << color
        << "\" stroke-width=\"4\"/>\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    svg << "  <circle cx=\"" << pts[static_cast<size_t>(v)].first << "\" cy=\""
        << pts[static_cast<size_t>(v)].second << "\" r=\"7\" fill=\"#222\"/>\n";
  // Legend: the three projected unit directions.
  std::int64_t lx = minx, ly = miny - margin - legend_h / 2;
  const Coord units[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  static const char* axis_label[3] = {"x", "y", "z"};
  for (int c = 0; c < 3; ++c) {
    auto p = project(units[static_cast<size_t>(c)]);
    std::int64_t ex = lx + p.first * 6 / 10, ey = ly + p.second * 6 / 10;
    svg << "  <line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << ex << "\" y2=\"" << ey
        << "\" stroke=\"" << axis_color[c] << "\" stroke-width=\"3\"/>\n"
        << "  <text x=\"" << (lx + p.first * 7 / 10) << "\" y=\"" << (ly + p.second * 7 / 10)
        << "\" font-size=\"28\" fill=\"" << axis_color[c] << "\">" << axis_label[c]
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace xyz
