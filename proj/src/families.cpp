#include "xyz/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace xyz {
namespace {

Edge mk(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int floor_mod(long long a, long long m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

GeneratedMap ccc(int n) {
  if (n < 3) throw std::invalid_argument("ccc requires n >= 3");
  if (n > 16) throw std::invalid_argument("ccc supports n <= 16");
  const int levels = 1 << n;
  auto vid = [n](int x, int y) { return static_cast<VertexId>(x * n + y); };

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(levels) * n * 3 / 2);
  for (int x = 0; x < levels; ++x)
    for (int y = 0; y < n; ++y) {
      edges.push_back(mk(vid(x, y), vid(x, (y + 1) % n)));
      const int xx = x ^ (1 << y);
      if (x < xx) edges.push_back(mk(vid(x, y), vid(xx, y)));
    }
  CubicGraph g(static_cast<VertexId>(levels * n), std::move(edges));

  std::vector<std::vector<VertexId>> cycles;
  for (int x = 0; x < levels; ++x) {
    std::vector<VertexId> c(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) c[static_cast<size_t>(y)] = vid(x, y);
    cycles.push_back(std::move(c));
  }
  // Octagons between consecutive hypercube dimensions i and i+1, one per
  // 4-tuple {x, x^2^i, x^2^j, x^2^i^2^j}, emitted at the tuple's minimum.
  for (int x = 0; x < levels; ++x)
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      if ((x & (1 << i)) || (x & (1 << j))) continue;
      const int xi = x ^ (1 << i), xj = x ^ (1 << j), xij = xi ^ (1 << j);
      cycles.push_back({vid(x, i), vid(xi, i), vid(xi, j), vid(xij, j), vid(xij, i), vid(xj, i),
                        vid(xj, j), vid(x, j)});
    }
  FaceSet fs(g, std::move(cycles));

  std::optional<std::vector<Axis>> colors;
  if (n % 2 == 0) {
    std::vector<Axis> cols(static_cast<size_t>(levels), Axis::X);
    for (int x = 0; x < levels; ++x)
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if ((x & (1 << i)) || (x & (1 << j))) continue;
        cols.push_back(i % 2 == 0 ? Axis::Y : Axis::Z);
      }
    colors = std::move(cols);
  }
  return GeneratedMap{std::move(g), std::move(fs), std::move(colors)};
}

GridEmbedding grid_mod(int k) {
  if (k < 2) throw std::invalid_argument("grid-mod requires k >= 2");
  if (k > 64) throw std::invalid_argument("grid-mod supports k <= 64");
  std::vector<std::vector<std::vector<VertexId>>> idx(
      static_cast<size_t>(k),
      std::vector<std::vector<VertexId>>(static_cast<size_t>(k),
                                         std::vector<VertexId>(static_cast<size_t>(k), -1)));
  Embedding3D coords;
  VertexId next = 0;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        const int r = (x + y + z) % k;
        if (r == 0 || r == 1) {
          idx[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)] = next++;
          coords.push_back({x, y, z});
        }
      }
  auto at = [&](int x, int y, int z) {
    return idx[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
  };
  std::vector<Edge> edges;
  for (int y = 0; y < k; ++y)
    for (int z = 0; z < k; ++z)
      edges.push_back(mk(at(floor_mod(-(y + z), k), y, z), at(floor_mod(1 - y - z, k), y, z)));
  for (int x = 0; x < k; ++x)
    for (int z = 0; z < k; ++z)
      edges.push_back(mk(at(x, floor_mod(-(x + z), k), z), at(x, floor_mod(1 - x - z, k), z)));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      edges.push_back(mk(at(x, y, floor_mod(-(x + y), k)), at(x, y, floor_mod(1 - x - y, k))));
  CubicGraph g(next, std::move(edges));
  return GridEmbedding{std::move(g), std::move(coords)};
}

GeneratedMap hex_rhombus_torus(int p, int q) {
  if (p == 0 && q == 0) throw DegenerateVector("translation vector must be nonzero");
  if (floor_mod(p - q, 3) != 0)
    throw DegenerateVector("translation vector must join same-colored hexagons (p == q mod 3)");
  const long long N =
      static_cast<long long>(p) * p + static_cast<long long>(p) * q + static_cast<long long>(q) * q;
  if (N > 250000) throw GroupTooLarge("hex rhombus torus too large");
  const int n = static_cast<int>(N);

  // Hexagon centers modulo the lattice spanned by (p,q) and (-q,p+q).  The
  // key map (m,w) -> ((p+q)m + qw, pw - qm) mod N is linear with kernel
  // exactly that lattice, so keys enumerate cosets; N*(1,0) and N*(0,1) lie
  // in the lattice, hence scanning [0,N)^2 reaches every coset.
  auto key = [&](long long m, long long w) {
    return std::pair<int, int>(floor_mod((static_cast<long long>(p) + q) * m + q * w, N),
                               floor_mod(static_cast<long long>(p) * w - static_cast<long long>(q) * m, N));
  };
  std::map<std::pair<int, int>, int> key_to_hex;
  std::vector<std::pair<int, int>> rep;
  for (int m = 0; m < n && static_cast<int>(rep.size()) < n; ++m)
    for (int w = 0; w < n && static_cast<int>(rep.size()) < n; ++w)
      if (key_to_hex.emplace(key(m, w), static_cast<int>(rep.size())).second)
        rep.push_back({m, w});
  auto hex_at = [&](int m, int w) { return key_to_hex.at(key(m, w)); };

  // Vertices 2h (up) and 2h+1 (down); up(m,w) touches down at (m,w), (m-1,w)
  // and (m,w-1).
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> hexes;
  std::vector<Axis> colors;
  for (int h = 0; h < n; ++h) {
    const auto [m, w] = rep[static_cast<size_t>(h)];
    edges.push_back(mk(2 * h, 2 * hex_at(m, w) + 1));
    edges.push_back(mk(2 * h, 2 * hex_at(m - 1, w) + 1));
    edges.push_back(mk(2 * h, 2 * hex_at(m, w - 1) + 1));
    hexes.push_back({2 * h, 2 * hex_at(m - 1, w) + 1, 2 * hex_at(m - 1, w),
                     2 * hex_at(m - 1, w - 1) + 1, 2 * hex_at(m, w - 1),
                     2 * hex_at(m, w - 1) + 1});
    colors.push_back(static_cast<Axis>(floor_mod(m - w, 3)));
  }
  try {
    CubicGraph g(2 * n, std::move(edges));
    FaceSet fs(g, std::move(hexes));
    auto res = check_xyz_surface_with_coloring(g, fs, colors);
    if (auto* rej = std::get_if<SurfaceRejection>(&res))
      throw DegenerateVector("rhombus too small for a polyhedral quotient: " + rej->detail);
    return GeneratedMap{std::move(g), std::move(fs), std::move(colors)};
  } catch (const DegenerateVector&) {
    throw;
  } catch (const GraphError& e) {
    throw DegenerateVector(std::string("degenerate rhombus: ") + e.what());
  } catch (const SurfaceError& e) {
    throw DegenerateVector(std::string("degenerate rhombus: ") + e.what());
  }
}

CubicGraph prism(int m) {
  if (m < 3) throw std::invalid_argument("prism requires m >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back(mk(i, (i + 1) % m));
  for (int i = 0; i < m; ++i) edges.push_back(mk(m + i, m + (i + 1) % m));
  for (int i = 0; i < m; ++i) edges.push_back(mk(i, m + i));
  return CubicGraph(2 * m, std::move(edges));
}

namespace {

// Flag-graph construction shared by gem() and the ambiguous torus.  Flags are
// (face, position, side) with side 0 at the dart's tail; ids are
// offset[face] + 2*position + side.
struct GemData {
  VertexId flags = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> cycles;
  std::vector<Axis> colors;
  std::vector<int> flag_edge;  // originating map edge of each flag
};

GemData build_gem(const MapInput& m) {
  if (m.n <= 0) throw NotAManifoldMap("map needs at least one vertex");
  const int E = static_cast<int>(m.edges.size());
  if (E == 0) throw NotAManifoldMap("map needs edges");
  std::vector<int> degree(static_cast<size_t>(m.n), 0);
  for (const auto& [a, b] : m.edges) {
    if (a < 0 || b < 0 || a >= m.n || b >= m.n) throw NotAManifoldMap("edge endpoint out of range");
    if (a == b) throw NotAManifoldMap("loops are not supported");
    ++degree[static_cast<size_t>(a)];
    ++degree[static_cast<size_t>(b)];
  }
  for (int v = 0; v < m.n; ++v)
    if (degree[static_cast<size_t>(v)] < 3) throw NotAManifoldMap("vertex of degree below three");

  const int F = static_cast<int>(m.faces.size());
  if (F == 0) throw NotAManifoldMap("map needs faces");
  auto tail = [&](const MapDart& d) {
    return d.reversed ? m.edges[static_cast<size_t>(d.edge)].second
                      : m.edges[static_cast<size_t>(d.edge)].first;
  };
  auto head = [&](const MapDart& d) {
    return d.reversed ? m.edges[static_cast<size_t>(d.edge)].first
                      : m.edges[static_cast<size_t>(d.edge)].second;
  };
  std::vector<std::vector<std::array<int, 3>>> uses(static_cast<size_t>(E));  // (face, pos, fwd)
  std::vector<int> offset(static_cast<size_t>(F) + 1, 0);
  for (int f = 0; f < F; ++f) {
    const auto& walk = m.faces[static_cast<size_t>(f)];
    const int len = static_cast<int>(walk.size());
    if (len < 2) throw NotAManifoldMap("face walk too short");
    std::set<int> visited;
    for (int i = 0; i < len; ++i) {
      const MapDart& d = walk[static_cast<size_t>(i)];
      if (d.edge < 0 || d.edge >= E) throw NotAManifoldMap("dart references a missing edge");
      const MapDart& nx = walk[static_cast<size_t>((i + 1) % len)];
      if (nx.edge < 0 || nx.edge >= E) throw NotAManifoldMap("dart references a missing edge");
      if (head(d) != tail(nx)) throw NotAManifoldMap("face walk is not closed");
      if (d.edge == nx.edge) throw NotAManifoldMap("face walk repeats an edge consecutively");
      if (!visited.insert(tail(d)).second) throw NotAManifoldMap("face walk revisits a vertex");
      uses[static_cast<size_t>(d.edge)].push_back({f, i, d.reversed ? 0 : 1});
    }
    offset[static_cast<size_t>(f) + 1] = offset[static_cast<size_t>(f)] + 2 * len;
  }
  for (int e = 0; e < E; ++e)
    if (uses[static_cast<size_t>(e)].size() != 2)
      throw NotAManifoldMap("every edge must lie on exactly two face sides");

  const int phi = offset[static_cast<size_t>(F)];
  std::vector<VertexId> flag_vertex(static_cast<size_t>(phi));
  std::vector<int> flag_edge(static_cast<size_t>(phi));
  std::vector<int> s1(static_cast<size_t>(phi)), s2(static_cast<size_t>(phi));
  for (int f = 0; f < F; ++f) {
    const auto& walk = m.faces[static_cast<size_t>(f)];
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
      const int a = offset[static_cast<size_t>(f)] + 2 * i;
      flag_vertex[static_cast<size_t>(a)] = tail(walk[static_cast<size_t>(i)]);
      flag_vertex[static_cast<size_t>(a) + 1] = head(walk[static_cast<size_t>(i)]);
      flag_edge[static_cast<size_t>(a)] = flag_edge[static_cast<size_t>(a) + 1] =
          walk[static_cast<size_t>(i)].edge;
      const int c = offset[static_cast<size_t>(f)] + 2 * ((i + 1) % len);
      s1[static_cast<size_t>(a) + 1] = c;
      s1[static_cast<size_t>(c)] = a + 1;
    }
  }
  for (int e = 0; e < E; ++e) {
    const auto& u2 = uses[static_cast<size_t>(e)];
    const int a0 = offset[static_cast<size_t>(u2[0][0])] + 2 * u2[0][1];
    const int b0 = offset[static_cast<size_t>(u2[1][0])] + 2 * u2[1][1];
    if (u2[0][2] == u2[1][2]) {
      s2[static_cast<size_t>(a0)] = b0;
      s2[static_cast<size_t>(b0)] = a0;
      s2[static_cast<size_t>(a0) + 1] = b0 + 1;
      s2[static_cast<size_t>(b0) + 1] = a0 + 1;
    } else {
      s2[static_cast<size_t>(a0)] = b0 + 1;
      s2[static_cast<size_t>(b0) + 1] = a0;
      s2[static_cast<size_t>(a0) + 1] = b0;
      s2[static_cast<size_t>(b0)] = a0 + 1;
    }
  }

  // Every vertex must carry a single umbrella: its flags connected through
  // corner (s1) and edge-pairing (s2) moves.
  std::vector<int> parent(static_cast<size_t>(phi));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
  for (int x = 0; x < phi; ++x) {
    unite(x, s1[static_cast<size_t>(x)]);
    unite(x, s2[static_cast<size_t>(x)]);
  }
  std::vector<int> vroot(static_cast<size_t>(m.n), -1);
  for (int x = 0; x < phi; ++x) {
    const VertexId v = flag_vertex[static_cast<size_t>(x)];
    const int r = find(x);
    if (vroot[static_cast<size_t>(v)] < 0)
      vroot[static_cast<size_t>(v)] = r;
    else if (vroot[static_cast<size_t>(v)] != r)
      throw NotAManifoldMap("vertex umbrella is pinched");
  }

  GemData out;
  out.flags = phi;
  out.flag_edge = std::move(flag_edge);
  for (int f = 0; f < F; ++f)
    for (int i = offset[static_cast<size_t>(f)]; i < offset[static_cast<size_t>(f) + 1]; i += 2)
      out.edges.push_back(mk(i, i + 1));
  for (int x = 1; x < phi; x += 2) out.edges.push_back(mk(x, s1[static_cast<size_t>(x)]));
  for (int e = 0; e < E; ++e) {
    const auto& u2 = uses[static_cast<size_t>(e)];
    const int a0 = offset[static_cast<size_t>(u2[0][0])] + 2 * u2[0][1];
    out.edges.push_back(mk(a0, s2[static_cast<size_t>(a0)]));
    out.edges.push_back(mk(a0 + 1, s2[static_cast<size_t>(a0) + 1]));
  }

  std::vector<std::vector<int>> at_vertex(static_cast<size_t>(m.n));
  for (int x = 0; x < phi; ++x) at_vertex[static_cast<size_t>(flag_vertex[static_cast<size_t>(x)])].push_back(x);
  for (int v = 0; v < m.n; ++v) {
    const int x0 = at_vertex[static_cast<size_t>(v)][0];
    std::vector<VertexId> cyc;
    int x = x0;
    bool via1 = true;
    do {
      cyc.push_back(x);
      x = via1 ? s1[static_cast<size_t>(x)] : s2[static_cast<size_t>(x)];
      via1 = !via1;
    } while (x != x0);
    out.cycles.push_back(std::move(cyc));
    out.colors.push_back(Axis::X);
  }
  for (int f = 0; f < F; ++f) {
    std::vector<VertexId> cyc;
    for (int x = offset[static_cast<size_t>(f)]; x < offset[static_cast<size_t>(f) + 1]; ++x)
      cyc.push_back(x);
    out.cycles.push_back(std::move(cyc));
    out.colors.push_back(Axis::Y);
  }
  for (int e = 0; e < E; ++e) {
    const auto& u2 = uses[static_cast<size_t>(e)];
    const int a0 = offset[static_cast<size_t>(u2[0][0])] + 2 * u2[0][1];
    out.cycles.push_back({a0, a0 + 1, s2[static_cast<size_t>(a0) + 1], s2[static_cast<size_t>(a0)]});
    out.colors.push_back(Axis::Z);
  }
  return out;
}

}  // namespace

GeneratedMap gem(const MapInput& m) {
  GemData d = build_gem(m);
  CubicGraph g(d.flags, std::move(d.edges));
  FaceSet fs(g, std::move(d.cycles));
  return GeneratedMap{std::move(g), std::move(fs), std::move(d.colors)};
}

GeneratedMap gem(const CubicGraph& g, const FaceSet& fs) {
  MapInput m;
  m.n = g.vertex_count();
  for (const Edge& e : g.edges()) m.edges.push_back({e.u, e.v});
  for (int f = 0; f < fs.face_count(); ++f) {
    const auto& cyc = fs.face(f);
    const int len = static_cast<int>(cyc.size());
    std::vector<MapDart> walk;
    for (int i = 0; i < len; ++i) {
      const VertexId a = cyc[static_cast<size_t>(i)];
      const VertexId b = cyc[static_cast<size_t>((i + 1) % len)];
      const auto e = g.find_edge(a, b);
      if (!e) throw NotAManifoldMap("face uses a non-edge");
      walk.push_back(MapDart{*e, g.edge(*e).u != a});
    }
    m.faces.push_back(std::move(walk));
  }
  return gem(m);
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<size_t>(p[i])];
  return r;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

CayleyGraph cayley(const PermutationGroupSpec& spec, const CayleyOptions& opts) {
  const int deg = spec.degree;
  if (deg < 1) throw std::invalid_argument("permutation degree must be positive");
  for (const auto& gen : spec.generators) {
    if (static_cast<int>(gen.size()) != deg) throw NotCubicCayley("generator arity mismatch");
    std::vector<char> seen(static_cast<size_t>(deg), 0);
    for (int x : gen) {
      if (x < 0 || x >= deg || seen[static_cast<size_t>(x)])
        throw NotCubicCayley("generator is not a permutation");
      seen[static_cast<size_t>(x)] = 1;
    }
    if (is_identity_perm(gen)) throw NotCubicCayley("identity generator");
  }
  std::vector<char> invol;
  for (const auto& gen : spec.generators)
    invol.push_back(is_identity_perm(compose_perm(gen, gen)) ? 1 : 0);

  bool three_case = false;
  std::vector<std::vector<int>> expand;
  if (spec.generators.size() == 3 && invol[0] && invol[1] && invol[2]) {
    if (spec.generators[0] == spec.generators[1] || spec.generators[0] == spec.generators[2] ||
        spec.generators[1] == spec.generators[2])
      throw NotCubicCayley("involutions must be distinct");
    three_case = true;
    expand = spec.generators;
  } else if (spec.generators.size() == 2 && invol[0] + invol[1] == 1) {
    const auto& a = invol[0] ? spec.generators[0] : spec.generators[1];
    const auto& b = invol[0] ? spec.generators[1] : spec.generators[0];
    expand = {a, b, inverse_perm(b)};
  } else {
    throw NotCubicCayley("need three involutions, or one involution and one rotation");
  }

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> ident(static_cast<size_t>(deg));
  std::iota(ident.begin(), ident.end(), 0);
  elems.push_back(ident);
  index.emplace(std::move(ident), 0);
  std::queue<int> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (const auto& gstep : expand) {
      auto w = compose_perm(elems[static_cast<size_t>(v)], gstep);
      if (index.find(w) == index.end()) {
        if (static_cast<int>(elems.size()) >= opts.group_cap)
          throw GroupTooLarge("generated group exceeds the cap");
        const int id = static_cast<int>(elems.size());
        elems.push_back(w);
        index.emplace(std::move(w), id);
        bfs.push(id);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  if (n < 4) throw NotCubicCayley("generated group is too small for a simple cubic graph");

  std::vector<int> step(static_cast<size_t>(3 * n));
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 3; ++s)
      step[static_cast<size_t>(3 * v + s)] =
          index.at(compose_perm(elems[static_cast<size_t>(v)], expand[static_cast<size_t>(s)]));
  std::vector<Edge> edges;
  std::vector<Axis> axes;
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 3; ++s) {
      const int w = step[static_cast<size_t>(3 * v + s)];
      if (v < w) {
        edges.push_back(Edge{v, w});
        if (three_case) axes.push_back(static_cast<Axis>(s));
      }
    }
  CubicGraph g(n, std::move(edges));

  CayleyGraph out{std::move(g), std::move(elems), std::nullopt, std::nullopt, std::nullopt};
  if (three_case) {
    MatchingPartition p;
    p.axis = std::move(axes);
    out.natural_partition = std::move(p);
    return out;
  }

  // Involution + rotation: faces are the b-cycles plus the alternating
  // (a,b)-walks; each walk consumes the directed a-steps it starts from.
  std::vector<int> na(static_cast<size_t>(n)), nb(static_cast<size_t>(n)), pb(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    na[static_cast<size_t>(v)] = step[static_cast<size_t>(3 * v)];
    nb[static_cast<size_t>(v)] = step[static_cast<size_t>(3 * v + 1)];
    pb[static_cast<size_t>(v)] = step[static_cast<size_t>(3 * v + 2)];
  }
  std::vector<int> bc(static_cast<size_t>(n), -1);
  std::vector<std::vector<VertexId>> bcycles;
  for (int v = 0; v < n; ++v) {
    if (bc[static_cast<size_t>(v)] >= 0) continue;
    const int c = static_cast<int>(bcycles.size());
    std::vector<VertexId> cyc;
    int x = v;
    do {
      bc[static_cast<size_t>(x)] = c;
      cyc.push_back(x);
      x = nb[static_cast<size_t>(x)];
    } while (x != v);
    bcycles.push_back(std::move(cyc));
  }
  const int ncyc = static_cast<int>(bcycles.size());

  auto trace_faces =
      [&](const std::vector<char>& dir) -> std::optional<std::vector<std::vector<VertexId>>> {
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<std::vector<VertexId>> cycles = bcycles;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      std::vector<VertexId> cyc;
      int x = v;
      do {
        if (used[static_cast<size_t>(x)]) return std::nullopt;
        used[static_cast<size_t>(x)] = 1;
        cyc.push_back(x);
        const int y = na[static_cast<size_t>(x)];
        cyc.push_back(y);
        x = dir[static_cast<size_t>(bc[static_cast<size_t>(y)])] ? pb[static_cast<size_t>(y)]
                                                                 : nb[static_cast<size_t>(y)];
      } while (x != v);
      cycles.push_back(std::move(cyc));
    }
    return cycles;
  };
  auto build_faces = [&](const std::vector<std::vector<VertexId>>& cycles) -> std::optional<FaceSet> {
    try {
      return FaceSet(out.graph, cycles);
    } catch (const SurfaceError&) {
      return std::nullopt;
    }
  };

  const std::vector<char> forward(static_cast<size_t>(ncyc), 0);
  if (!opts.orientation_search) {
    if (auto cycles = trace_faces(forward)) out.faces = build_faces(*cycles);
    return out;
  }
  const std::uint64_t space = ncyc < 64 ? (std::uint64_t{1} << ncyc) : 0;
  const std::uint64_t limit = space == 0 ? opts.orientation_cap : std::min(space, opts.orientation_cap);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<char> dir(static_cast<size_t>(ncyc), 0);
    for (int i = 0; i < ncyc && i < 64; ++i) dir[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : 0;
    auto cycles = trace_faces(dir);
    if (!cycles) continue;
    auto fs = build_faces(*cycles);
    if (!fs) continue;
    if (std::holds_alternative<ColoredSurface>(check_xyz_surface(out.graph, *fs))) {
      out.faces = std::move(fs);
      out.b_cycle_orientation = std::vector<int>(dir.begin(), dir.end());
      return out;
    }
  }
  if (auto cycles = trace_faces(forward)) out.faces = build_faces(*cycles);
  return out;
}

namespace {

MapInput torus_grid_map(int k) {
  const int W = 2 * k;
  MapInput m;
  m.n = W * W;
  auto vid = [W](int i, int j) { return floor_mod(i, W) * W + floor_mod(j, W); };
  auto hid = [W](int i, int j) { return floor_mod(i, W) * W + floor_mod(j, W); };
  auto vedge = [W](int i, int j) { return W * W + floor_mod(i, W) * W + floor_mod(j, W); };
  for (int i = 0; i < W; ++i)
    for (int j = 0; j < W; ++j) m.edges.push_back({vid(i, j), vid(i + 1, j)});
  for (int i = 0; i < W; ++i)
    for (int j = 0; j < W; ++j) m.edges.push_back({vid(i, j), vid(i, j + 1)});
  for (int i = 0; i < W; ++i)
    for (int j = 0; j < W; ++j)
      m.faces.push_back({MapDart{hid(i, j), false}, MapDart{vedge(i + 1, j), false},
                         MapDart{hid(i, j + 1), true}, MapDart{vedge(i, j), true}});
  return m;
}

}  // namespace

AmbiguousTorus ambiguous_torus(int k) {
  if (k < 1) throw std::invalid_argument("ambiguous torus requires k >= 1");
  if (k > 64) throw std::invalid_argument("ambiguous torus supports k <= 64");
  GemData d = build_gem(torus_grid_map(k));
  CubicGraph g(d.flags, std::move(d.edges));
  FaceSet fs(g, std::move(d.cycles));
  VertexId u = -1, v = -1;
  for (EdgeId e = 0; e < g.edge_count() && u < 0; ++e) {
    const Edge& ed = g.edge(e);
    bool on4 = false;
    for (const VertexId x : g.neighbors(ed.u)) {
      if (x == ed.v || on4) continue;
      for (const VertexId y : g.neighbors(ed.v)) {
        if (y == ed.u || y == x) continue;
        if (g.adjacent(x, y)) {
          on4 = true;
          break;
        }
      }
    }
    if (!on4) {
      u = ed.u;
      v = ed.v;
    }
  }
  if (u < 0) throw GraphError("ambiguous torus: every edge lies on a 4-cycle");
  return AmbiguousTorus{std::move(g), std::move(fs), std::move(d.colors), u, v};
}

PartitionCycles ambiguous_torus_twisted(int k) {
  if (k < 1) throw std::invalid_argument("ambiguous torus requires k >= 1");
  if (k > 64) throw std::invalid_argument("ambiguous torus supports k <= 64");
  const int W = 2 * k;
  GemData d = build_gem(torus_grid_map(k));
  CubicGraph g(d.flags, std::move(d.edges));
  FaceSet fs(g, std::move(d.cycles));
  auto chk = check_xyz_surface_with_coloring(g, fs, d.colors);
  auto* cs = std::get_if<ColoredSurface>(&chk);
  if (!cs) throw GraphError("ambiguous torus: declared surface rejected");
  MatchingPartition p;
  p.axis.resize(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) p.axis[static_cast<size_t>(e)] = cs->edge_axis(e);
  // Half-twist: inside every diamond that comes from a horizontal grid edge,
  // exchange the two non-diamond axes.  The diamonds survive as faces; the
  // transversal faces re-route into zigzags.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int me = d.flag_edge[static_cast<size_t>(ed.u)];
    if (me != d.flag_edge[static_cast<size_t>(ed.v)] || me >= W * W) continue;
    Axis& a = p.axis[static_cast<size_t>(e)];
    if (a == Axis::X)
      a = Axis::Y;
    else if (a == Axis::Y)
      a = Axis::X;
  }
  return cycles_from_partition(g, p);
}

namespace {

CubicGraph generalized_petersen(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(mk(i, (i + 1) % n));
  for (int i = 0; i < n; ++i) edges.push_back(mk(i, n + i));
  for (int i = 0; i < n; ++i) edges.push_back(mk(n + i, n + (i + k) % n));
  return CubicGraph(2 * n, std::move(edges));
}

CubicGraph pappus_graph() {
  // Point-line incidences of the affine plane over GF(3) without the vertical
  // lines: point (i,j) = id 3i+j, line y = mx+b = id 9+3m+b.
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int mm = 0; mm < 3; ++mm)
        edges.push_back(Edge{3 * i + j, 9 + 3 * mm + floor_mod(j - mm * i, 3)});
  return CubicGraph(18, std::move(edges));
}

}  // namespace

CubicGraph builtin(const std::string& name) {
  if (name == "petersen") return generalized_petersen(5, 2);
  if (name == "desargues") return generalized_petersen(10, 3);
  if (name == "dodecahedron") return generalized_petersen(10, 2);
  if (name == "mobius-kantor") return generalized_petersen(8, 3);
  if (name == "pappus") return pappus_graph();
  if (name == "tetrahedron-map" || name == "k33-projective-map" || name == "mobius-kantor-map")
    return builtin_map(name).graph;
  throw UnknownName("unknown builtin: " + name);
}

std::vector<std::string> builtin_names() {
  return {"desargues",        "dodecahedron",       "k33-projective-map",
          "mobius-kantor",    "mobius-kantor-map",  "pappus",
          "petersen",         "tetrahedron-map"};
}

BuiltinMap builtin_map(const std::string& name) {
  if (name == "tetrahedron-map") {
    CubicGraph g(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}});
    FaceSet fs(g, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}});
    return BuiltinMap{std::move(g), std::move(fs)};
  }
  if (name == "k33-projective-map") {
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) edges.push_back(Edge{i, 3 + j});
    CubicGraph g(6, std::move(edges));
    FaceSet fs(g, {{0, 3, 1, 4, 2, 5}, {0, 3, 2, 4}, {1, 4, 0, 5}, {2, 5, 1, 3}});
    return BuiltinMap{std::move(g), std::move(fs)};
  }
  if (name == "mobius-kantor-map") {
    CubicGraph g = generalized_petersen(8, 3);
    std::vector<std::vector<VertexId>> fcs;
    fcs.push_back({0, 1, 2, 3, 4, 5, 6, 7});
    fcs.push_back({8, 11, 14, 9, 12, 15, 10, 13});
    for (int j = 0; j < 4; ++j)
      fcs.push_back({j, j + 1, 8 + j + 1, 8 + (j + 4) % 8, (j + 4) % 8, (j + 5) % 8,
                     8 + (j + 5) % 8, 8 + j});
    FaceSet fs(g, std::move(fcs));
    return BuiltinMap{std::move(g), std::move(fs)};
  }
  throw UnknownName("no face structure for: " + name);
}

}  // namespace xyz
