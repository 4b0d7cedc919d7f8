#include "xyz/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "xyz/families.hpp"
#include "xyz/recognize.hpp"

namespace xyz {

namespace {

Edge mk(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

constexpr std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                       {0, 2, 1},
                                                       {1, 0, 2},
                                                       {1, 2, 0},
                                                       {2, 0, 1},
                                                       {2, 1, 0}}};

int perm_index(int a, int b, int c) {
  const std::array<int, 3> p{a, b, c};
  for (int i = 0; i < 6; ++i)
    if (kPerms[static_cast<size_t>(i)] == p) return i;
  return -1;
}

char axis_letter(int a) { return a == 0 ? 'x' : a == 1 ? 'y' : 'z'; }

}  // namespace

OpenCubicGraph connector_gadget() {
  std::vector<Edge> edges;
  for (int ring = 0; ring < 3; ++ring) {
    const VertexId base = ring * 6;
    for (int i = 0; i < 5; ++i) edges.push_back({base + i, base + i + 1});
    edges.push_back({base, base + 5});
  }
  edges.push_back({0, 6});
  edges.push_back({2, 8});
  edges.push_back({4, 10});
  edges.push_back({7, 13});
  edges.push_back({9, 15});
  edges.push_back({11, 17});
  // Right-side names follow the pairing the enumeration certifies (A with F,
  // B with E, C with D), not the vertex numbering: the B-partner sits at
  // vertex 12 and the C-partner at vertex 14.
  std::vector<Port> ports = {{"A", 1},  {"B", 3},  {"C", 5},
                             {"D", 14}, {"E", 12}, {"F", 16}};
  return OpenCubicGraph(18, std::move(edges), std::move(ports));
}

ConnectorReport verify_connector(const OpenCubicGraph& gadget) {
  const VertexId n = gadget.vertex_count();
  const auto& internal = gadget.edges();
  const auto& ports = gadget.ports();
  const int ni = static_cast<int>(internal.size());
  const int nvar = ni + static_cast<int>(ports.size());

  std::vector<std::vector<int>> at(static_cast<size_t>(n));
  for (int i = 0; i < ni; ++i) {
    at[static_cast<size_t>(internal[static_cast<size_t>(i)].u)].push_back(i);
    at[static_cast<size_t>(internal[static_cast<size_t>(i)].v)].push_back(i);
  }
  for (size_t p = 0; p < ports.size(); ++p)
    at[static_cast<size_t>(ports[p].vertex)].push_back(ni + static_cast<int>(p));

  // Assign variables grouped by vertex so the distinctness constraint prunes
  // as early as possible.
  std::vector<int> order;
  std::vector<char> listed(static_cast<size_t>(nvar), 0);
  for (VertexId v = 0; v < n; ++v)
    for (int x : at[static_cast<size_t>(v)])
      if (!listed[static_cast<size_t>(x)]) {
        listed[static_cast<size_t>(x)] = 1;
        order.push_back(x);
      }

  auto pvar = [&](const std::string& name) {
    for (size_t p = 0; p < ports.size(); ++p)
      if (ports[p].name == name) return ni + static_cast<int>(p);
    throw GraphError("connector gadget is missing port " + name);
  };
  const std::array<int, 6> portvar = {pvar("A"), pvar("B"), pvar("C"),
                                      pvar("D"), pvar("E"), pvar("F")};

  std::vector<int> axis(static_cast<size_t>(nvar), -1);

  // Maximal two-axis chains over internal edges AND port half-edges: closed
  // cycles, or open paths leaving the gadget through ports.  In any host
  // drawing each chain continues into a single axis-parallel polygon; chains
  // of different axis pairs lie on distinct polygons, and distinct polygons
  // of a drawing share at most one edge.  Port half-edges must be counted:
  // both chains through a port continue along that same host edge.
  auto chains = [&]() {
    std::vector<std::pair<int, std::vector<int>>> out;  // (excluded axis, variables)
    for (int excluded = 0; excluded < 3; ++excluded) {
      std::vector<int> par(static_cast<size_t>(n));
      std::iota(par.begin(), par.end(), 0);
      auto find = [&](int x) {
        while (par[static_cast<size_t>(x)] != x) {
          par[static_cast<size_t>(x)] = par[static_cast<size_t>(par[static_cast<size_t>(x)])];
          x = par[static_cast<size_t>(x)];
        }
        return x;
      };
      for (int i = 0; i < ni; ++i)
        if (axis[static_cast<size_t>(i)] != excluded) {
          const Edge& e = internal[static_cast<size_t>(i)];
          par[static_cast<size_t>(find(e.u))] = find(e.v);
        }
      std::map<int, std::vector<int>> comp;
      for (int i = 0; i < ni; ++i)
        if (axis[static_cast<size_t>(i)] != excluded)
          comp[find(internal[static_cast<size_t>(i)].u)].push_back(i);
      for (size_t p = 0; p < ports.size(); ++p)
        if (axis[static_cast<size_t>(ni + static_cast<int>(p))] != excluded)
          comp[find(ports[p].vertex)].push_back(ni + static_cast<int>(p));
      for (auto& [root, vars] : comp) {
        (void)root;
        out.emplace_back(excluded, std::move(vars));
      }
    }
    return out;
  };

  auto sharing_ok = [&]() {
    auto cs = chains();
    for (size_t a = 0; a < cs.size(); ++a)
      for (size_t b = a + 1; b < cs.size(); ++b) {
        if (cs[a].first == cs[b].first) continue;  // same pair: edge-disjoint
        int shared = 0;
        for (int e : cs[a].second)
          if (std::find(cs[b].second.begin(), cs[b].second.end(), e) != cs[b].second.end())
            ++shared;
        if (shared >= 2) return false;
      }
    return true;
  };

  auto dump_assignment = [&]() {
    std::string s;
    for (int i = 0; i < ni; ++i) {
      const Edge& e = internal[static_cast<size_t>(i)];
      s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")=";
      s += axis_letter(axis[static_cast<size_t>(i)]);
      s += ' ';
    }
    for (size_t p = 0; p < ports.size(); ++p) {
      s += ports[p].name + "=";
      s += axis_letter(axis[static_cast<size_t>(ni + static_cast<int>(p))]);
      s += ' ';
    }
    return s;
  };

  ConnectorReport report;

  auto consistent = [&](int var) {
    auto ok_at = [&](VertexId v) {
      for (int other : at[static_cast<size_t>(v)])
        if (other != var && axis[static_cast<size_t>(other)] == axis[static_cast<size_t>(var)])
          return false;
      return true;
    };
    if (var < ni) {
      const Edge& e = internal[static_cast<size_t>(var)];
      return ok_at(e.u) && ok_at(e.v);
    }
    return ok_at(ports[static_cast<size_t>(var - ni)].vertex);
  };

  auto leaf = [&]() {
    if (!sharing_ok()) return;
    const int a = axis[static_cast<size_t>(portvar[0])];
    const int b = axis[static_cast<size_t>(portvar[1])];
    const int c = axis[static_cast<size_t>(portvar[2])];
    const int d = axis[static_cast<size_t>(portvar[3])];
    const int e = axis[static_cast<size_t>(portvar[4])];
    const int f = axis[static_cast<size_t>(portvar[5])];
    const bool law = a != b && b != c && a != c && d != e && e != f && d != f && a == f &&
                     b == e && c == d;
    if (!law)
      throw VerificationFailed("surviving assignment violates the port law: " +
                               dump_assignment());
    ++report.surviving;
    ++report.per_left_triple[static_cast<size_t>(perm_index(a, b, c))];
  };

  // Iterative depth-first search over the variable order.
  std::vector<int> choice(static_cast<size_t>(nvar), -1);
  int depth = 0;
  while (depth >= 0) {
    if (depth == nvar) {
      leaf();
      --depth;
      continue;
    }
    int var = order[static_cast<size_t>(depth)];
    int next = choice[static_cast<size_t>(depth)] + 1;
    if (next == 3) {
      choice[static_cast<size_t>(depth)] = -1;
      axis[static_cast<size_t>(var)] = -1;
      --depth;
      continue;
    }
    choice[static_cast<size_t>(depth)] = next;
    axis[static_cast<size_t>(var)] = next;
    if (consistent(var)) ++depth;
  }
  return report;
}

FlipGadget flip_gadget() {
  AmbiguousTorus at = ambiguous_torus(1);
  return FlipGadget{std::move(at.graph), at.u, at.v};
}

VertexGadget vertex_gadget(int d) {
  if (d < 1) throw std::invalid_argument("vertex gadget needs degree at least one");
  int m = std::max(4, d);
  m += m & 1;
  CubicGraph g = prism(m);
  std::vector<EdgeId> attachment(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) attachment[static_cast<size_t>(i)] = 2 * m + i;
  return VertexGadget{std::move(g), std::move(attachment)};
}

namespace {

using Rel = std::array<std::uint8_t, 6>;  // rel[s] = bitmask of related triples

Rel compose(const Rel& r, const Rel& s) {
  Rel t{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (r[static_cast<size_t>(i)] >> j & 1) t[static_cast<size_t>(i)] |= s[static_cast<size_t>(j)];
  return t;
}

std::array<int, 3> inverse_of(int w) {
  std::array<int, 3> q{};
  for (int i = 0; i < 3; ++i) q[static_cast<size_t>(kPerms[static_cast<size_t>(w)][static_cast<size_t>(i)])] = i;
  return q;
}

// Relation between the star triples of u and v across both drawings of the
// flip gadget, closed under relabeling the three axes.
Rel flip_relation(const FlipGadget& flip) {
  const CubicGraph& g = flip.graph;
  const auto& iu = g.incident(flip.u);
  const auto& iv = g.incident(flip.v);
  Rel rel{};
  for (const MatchingPartition& p : all_partitions(g)) {
    if (!test_partition(g, p)) continue;
    std::array<int, 3> au{}, av{};
    for (int j = 0; j < 3; ++j) {
      au[static_cast<size_t>(j)] = static_cast<int>(p.axis[static_cast<size_t>(iu[static_cast<size_t>(j)])]);
      av[static_cast<size_t>(j)] = static_cast<int>(p.axis[static_cast<size_t>(iv[static_cast<size_t>(j)])]);
    }
    for (int s = 0; s < 6; ++s) {
      const auto& sig = kPerms[static_cast<size_t>(s)];
      int tu = perm_index(sig[static_cast<size_t>(au[0])], sig[static_cast<size_t>(au[1])],
                          sig[static_cast<size_t>(au[2])]);
      int tv = perm_index(sig[static_cast<size_t>(av[0])], sig[static_cast<size_t>(av[1])],
                          sig[static_cast<size_t>(av[2])]);
      rel[static_cast<size_t>(tu)] |= static_cast<std::uint8_t>(1u << tv);
    }
  }
  if (rel == Rel{}) throw GraphError("internal: flip gadget admits no valid drawing");
  return rel;
}

// Relation seen between connector port triples once the flip's u star reads
// its axes through wiring w1 and the v star through w2.
Rel wire(const Rel& rel, int w1, int w2) {
  const auto i1 = inverse_of(w1);
  const auto i2 = inverse_of(w2);
  Rel out{};
  for (int tu = 0; tu < 6; ++tu) {
    if (!rel[static_cast<size_t>(tu)]) continue;
    const auto& pu = kPerms[static_cast<size_t>(tu)];
    int s = perm_index(pu[static_cast<size_t>(i1[0])], pu[static_cast<size_t>(i1[1])],
                       pu[static_cast<size_t>(i1[2])]);
    for (int tv = 0; tv < 6; ++tv)
      if (rel[static_cast<size_t>(tu)] >> tv & 1) {
        const auto& pv = kPerms[static_cast<size_t>(tv)];
        int t = perm_index(pv[static_cast<size_t>(i2[0])], pv[static_cast<size_t>(i2[1])],
                           pv[static_cast<size_t>(i2[2])]);
        out[static_cast<size_t>(s)] |= static_cast<std::uint8_t>(1u << t);
      }
  }
  return out;
}

EdgeGadget build_edge_gadget() {
  const OpenCubicGraph conn = connector_gadget();
  const FlipGadget flip = flip_gadget();
  const CubicGraph& fg = flip.graph;

  // Deterministic wiring search: the chain of three connectors and two flips
  // must realize exactly the pairs of triples whose A and F axes differ.
  Rel rev{};
  for (int t = 0; t < 6; ++t) {
    const auto& p = kPerms[static_cast<size_t>(t)];
    rev[static_cast<size_t>(t)] = static_cast<std::uint8_t>(
        1u << perm_index(p[2], p[1], p[0]));
  }
  Rel target{};
  for (int s = 0; s < 6; ++s)
    for (int t = 0; t < 6; ++t)
      if (kPerms[static_cast<size_t>(s)][0] != kPerms[static_cast<size_t>(t)][2])
        target[static_cast<size_t>(s)] |= static_cast<std::uint8_t>(1u << t);

  const Rel base = flip_relation(flip);
  std::array<Rel, 36> wired;
  for (int w1 = 0; w1 < 6; ++w1)
    for (int w2 = 0; w2 < 6; ++w2)
      wired[static_cast<size_t>(w1 * 6 + w2)] = wire(base, w1, w2);

  std::array<std::array<int, 3>, 4> wiring{};
  bool found = false;
  for (int i = 0; i < 36 && !found; ++i) {
    const Rel left = compose(compose(rev, wired[static_cast<size_t>(i)]), rev);
    for (int j = 0; j < 36 && !found; ++j) {
      const Rel total = compose(compose(left, wired[static_cast<size_t>(j)]), rev);
      if (total == target) {
        wiring[0] = kPerms[static_cast<size_t>(i / 6)];
        wiring[1] = kPerms[static_cast<size_t>(i % 6)];
        wiring[2] = kPerms[static_cast<size_t>(j / 6)];
        wiring[3] = kPerms[static_cast<size_t>(j % 6)];
        found = true;
      }
    }
  }
  if (!found)
    throw GraphError("internal: no junction wiring realizes the different-color relation");

  // Assemble: connector 0..17, first flip 18..47, connector 48..65, second
  // flip 66..95, connector 96..113.
  const std::array<VertexId, 3> cbase = {0, 48, 96};
  const std::array<VertexId, 2> fbase = {18, 66};
  std::vector<VertexId> fmap_base(static_cast<size_t>(fg.vertex_count()));
  {
    VertexId next = 0;
    for (VertexId x = 0; x < fg.vertex_count(); ++x) {
      if (x == flip.u || x == flip.v) continue;
      fmap_base[static_cast<size_t>(x)] = next++;
    }
  }
  auto right_port = [&](int chain, int idx) {
    // (D, E, F) vertex offsets in the certified reversal pairing.
    static const std::array<VertexId, 3> off = {14, 12, 16};
    return cbase[static_cast<size_t>(chain)] + off[static_cast<size_t>(idx)];
  };
  auto left_port = [&](int chain, int idx) {
    static const std::array<VertexId, 3> off = {1, 3, 5};
    return cbase[static_cast<size_t>(chain)] + off[static_cast<size_t>(idx)];
  };

  std::vector<Edge> edges;
  for (int chain = 0; chain < 3; ++chain)
    for (const Edge& e : conn.edges())
      edges.push_back({cbase[static_cast<size_t>(chain)] + e.u,
                       cbase[static_cast<size_t>(chain)] + e.v});
  for (int half = 0; half < 2; ++half)
    for (EdgeId e = 0; e < fg.edge_count(); ++e) {
      const Edge& be = fg.edge(e);
      if (be.u == flip.u || be.u == flip.v || be.v == flip.u || be.v == flip.v) continue;
      edges.push_back(mk(fbase[static_cast<size_t>(half)] + fmap_base[static_cast<size_t>(be.u)],
                         fbase[static_cast<size_t>(half)] + fmap_base[static_cast<size_t>(be.v)]));
    }

  const auto& iu = fg.incident(flip.u);
  const auto& iv = fg.incident(flip.v);
  int slot_uv_v = -1;
  for (int j = 0; j < 3; ++j)
    if (fg.other_end(iv[static_cast<size_t>(j)], flip.v) == flip.u) slot_uv_v = j;
  if (slot_uv_v < 0) throw GraphError("internal: flip endpoints are not adjacent");

  for (int half = 0; half < 2; ++half) {
    const auto& wu = wiring[static_cast<size_t>(half * 2)];
    const auto& wv = wiring[static_cast<size_t>(half * 2 + 1)];
    for (int j = 0; j < 3; ++j) {
      VertexId w = fg.other_end(iu[static_cast<size_t>(j)], flip.u);
      if (w == flip.v) {
        // The deleted uv edge survives as a direct connector-to-connector
        // strand through both gadget ends.
        edges.push_back(mk(right_port(half, wu[static_cast<size_t>(j)]),
                           left_port(half + 1, wv[static_cast<size_t>(slot_uv_v)])));
      } else {
        edges.push_back(mk(right_port(half, wu[static_cast<size_t>(j)]),
                           fbase[static_cast<size_t>(half)] + fmap_base[static_cast<size_t>(w)]));
      }
    }
    for (int j = 0; j < 3; ++j) {
      VertexId w = fg.other_end(iv[static_cast<size_t>(j)], flip.v);
      if (w == flip.u) continue;
      edges.push_back(mk(left_port(half + 1, wv[static_cast<size_t>(j)]),
                         fbase[static_cast<size_t>(half)] + fmap_base[static_cast<size_t>(w)]));
    }
  }

  std::vector<Port> ports = {{"A", left_port(0, 0)},  {"B", left_port(0, 1)},
                             {"C", left_port(0, 2)},  {"D", right_port(2, 0)},
                             {"E", right_port(2, 1)}, {"F", right_port(2, 2)}};
  OpenCubicGraph graph(114, std::move(edges), std::move(ports));
  EdgeGadget out{std::move(graph), wiring};
  return out;
}

const EdgeGadget& cached_edge_gadget() {
  static const EdgeGadget gadget = build_edge_gadget();
  return gadget;
}

}  // namespace

EdgeGadget edge_gadget() { return cached_edge_gadget(); }

Reduction reduce_3coloring(const SimpleGraphInput& h) {
  if (h.n <= 0) throw std::invalid_argument("reduction input needs at least one vertex");
  std::vector<std::pair<int, int>> he;
  std::set<std::pair<int, int>> dedup;
  for (const auto& [a, b] : h.edges) {
    if (a < 0 || a >= h.n || b < 0 || b >= h.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("input graph must be simple: loop found");
    std::pair<int, int> e{std::min(a, b), std::max(a, b)};
    if (!dedup.insert(e).second)
      throw std::invalid_argument("input graph must be simple: parallel edge found");
    he.push_back(e);
  }
  std::vector<std::vector<int>> inc(static_cast<size_t>(h.n));
  for (int i = 0; i < static_cast<int>(he.size()); ++i) {
    inc[static_cast<size_t>(he[static_cast<size_t>(i)].first)].push_back(i);
    inc[static_cast<size_t>(he[static_cast<size_t>(i)].second)].push_back(i);
  }
  for (int v = 0; v < h.n; ++v)
    if (inc[static_cast<size_t>(v)].empty())
      throw std::invalid_argument("input graph has an isolated vertex");

  const EdgeGadget& eg = cached_edge_gadget();
  const std::array<VertexId, 3> left_ports = {eg.graph.port("A").vertex,
                                              eg.graph.port("B").vertex,
                                              eg.graph.port("C").vertex};
  const std::array<VertexId, 3> right_ports = {eg.graph.port("F").vertex,
                                               eg.graph.port("E").vertex,
                                               eg.graph.port("D").vertex};

  struct Layout {
    int m = 0;
    std::vector<VertexId> map;  // local prism vertex -> global, -1 if deleted
  };
  std::vector<Layout> layout(static_cast<size_t>(h.n));
  Reduction out{CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                h.n,
                static_cast<int>(he.size()),
                {},
                114,
                0,
                0};

  VertexId next = 0;
  for (int v = 0; v < h.n; ++v) {
    const int d = static_cast<int>(inc[static_cast<size_t>(v)].size());
    int m = std::max(4, d);
    m += m & 1;
    Layout& lay = layout[static_cast<size_t>(v)];
    lay.m = m;
    std::vector<char> deleted(static_cast<size_t>(2 * m), 0);
    for (int i = 0; i < d; ++i)
      deleted[static_cast<size_t>(i % 2 == 0 ? i : m + i)] = 1;
    lay.map.assign(static_cast<size_t>(2 * m), -1);
    for (int local = 0; local < 2 * m; ++local)
      if (!deleted[static_cast<size_t>(local)]) lay.map[static_cast<size_t>(local)] = next++;
    out.vertex_gadget_size.push_back(2 * m - d);
  }
  const VertexId gadget_base = next;
  const VertexId total = next + 114 * static_cast<VertexId>(he.size());

  std::vector<Edge> edges;
  for (int v = 0; v < h.n; ++v) {
    const Layout& lay = layout[static_cast<size_t>(v)];
    CubicGraph pg = prism(lay.m);
    for (EdgeId e = 0; e < pg.edge_count(); ++e) {
      const Edge& be = pg.edge(e);
      VertexId gu = lay.map[static_cast<size_t>(be.u)];
      VertexId gv = lay.map[static_cast<size_t>(be.v)];
      if (gu >= 0 && gv >= 0) edges.push_back(mk(gu, gv));
    }
  }
  for (int i = 0; i < static_cast<int>(he.size()); ++i) {
    const VertexId base = gadget_base + 114 * i;
    for (const Edge& e : eg.graph.edges()) edges.push_back({base + e.u, base + e.v});
  }

  // Stubs left by deleting the junction vertex for incidence i at a vertex
  // gadget: the rung partner (the color-carrying strand), then the two ring
  // neighbors.  Even incidences delete the outer rung endpoint, odd ones the
  // inner endpoint, so neighboring junctions never collide.
  auto stubs = [&](const Layout& lay, int i) -> std::array<VertexId, 3> {
    const int m = lay.m;
    int rung, prev, nxt;
    if (i % 2 == 0) {
      rung = m + i;
      prev = (i + m - 1) % m;
      nxt = (i + 1) % m;
    } else {
      rung = i;
      prev = m + (i + m - 1) % m;
      nxt = m + (i + 1) % m;
    }
    return {lay.map[static_cast<size_t>(rung)], lay.map[static_cast<size_t>(prev)],
            lay.map[static_cast<size_t>(nxt)]};
  };

  for (int i = 0; i < static_cast<int>(he.size()); ++i) {
    const VertexId base = gadget_base + 114 * i;
    const auto [a, b] = he[static_cast<size_t>(i)];
    const auto& ia = inc[static_cast<size_t>(a)];
    const auto& ib = inc[static_cast<size_t>(b)];
    const int pa = static_cast<int>(std::find(ia.begin(), ia.end(), i) - ia.begin());
    const int pb = static_cast<int>(std::find(ib.begin(), ib.end(), i) - ib.begin());
    const auto sa = stubs(layout[static_cast<size_t>(a)], pa);
    const auto sb = stubs(layout[static_cast<size_t>(b)], pb);
    for (int j = 0; j < 3; ++j) {
      edges.push_back(mk(base + left_ports[static_cast<size_t>(j)], sa[static_cast<size_t>(j)]));
      edges.push_back(mk(base + right_ports[static_cast<size_t>(j)], sb[static_cast<size_t>(j)]));
    }
  }

  out.graph = CubicGraph(total, std::move(edges));
  out.total_size = total;
  out.genus_claim = 3ll * static_cast<long long>(he.size()) - h.n + 1;
  return out;
}

}  // namespace xyz
