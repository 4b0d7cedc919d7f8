#pragma once
// Test-side oracles and fixtures.  Everything in this header is written
// independently of the library code it is used to check: the oracles only use
// CubicGraph as an edge-list container and reimplement their own cycle
// extraction, coloring search, cover search, and face tracing.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <sys/wait.h>

#include "xyz/graph.hpp"

namespace testutil {

using xyz::CubicGraph;
using xyz::Edge;
using xyz::EdgeId;
using xyz::VertexId;

// ---------------------------------------------------------------------------
// Corpus graphs, written as explicit edge lists so they do not depend on the
// library's family constructors.

inline CubicGraph k4() {
  return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline CubicGraph cube() {
  return CubicGraph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                        {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline CubicGraph k33() {
  return CubicGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Generalized Petersen graph: outer cycle, spokes, inner cycle with step k.
inline CubicGraph gp(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (int i = 0; i < n; ++i) {
    int a = n + i, b = n + (i + k) % n;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return CubicGraph(2 * n, std::move(edges));
}

inline CubicGraph petersen() { return gp(5, 2); }
inline CubicGraph mobius_kantor() { return gp(8, 3); }
inline CubicGraph desargues() { return gp(10, 3); }
inline CubicGraph dodecahedron() { return gp(10, 2); }

// Random simple cubic graph from the stub-pairing model, deterministic in the
// seed.  n must be even.
inline CubicGraph random_cubic(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < 3; ++j) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) { ok = false; break; }
      auto key = std::minmax(a, b);
      if (!seen.insert({key.first, key.second}).second) { ok = false; break; }
      edges.push_back({key.first, key.second});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return CubicGraph(n, std::move(edges));
  }
  throw std::runtime_error("random_cubic failed to build a simple graph");
}

// The six faces of the cube, matching the vertex numbering of cube().
inline std::vector<std::vector<VertexId>> cube_faces() {
  return {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
}

// ---------------------------------------------------------------------------
// Canonical forms for faces and face sets, so oracle output and library
// output can be compared representation-independently.

inline std::vector<VertexId> canonical_cycle(std::vector<VertexId> c) {
  const size_t n = c.size();
  size_t p = static_cast<size_t>(std::min_element(c.begin(), c.end()) - c.begin());
  std::vector<VertexId> fwd(n), rev(n);
  for (size_t i = 0; i < n; ++i) {
    fwd[i] = c[(p + i) % n];
    rev[i] = c[(p + n - i % n) % n];
  }
  return std::min(fwd, rev);
}

using CanonicalFaces = std::vector<std::vector<VertexId>>;

inline CanonicalFaces canonical_faces(const std::vector<std::vector<VertexId>>& faces) {
  CanonicalFaces out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(canonical_cycle(f));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive edge-labeling oracle.  Walks the full 3^{|E|} labeling space
// with per-vertex prefix pruning; a labeling is kept when every vertex sees
// three distinct axes, and counted as a surface when the two-axis cycles are
// pairwise near-disjoint (share at most one edge).

struct LabelingOracle {
  long long colorings = 0;  // proper 3-edge-labelings
  long long surfaces = 0;   // labelings whose cycle structure is polyhedral
  std::set<CanonicalFaces> face_sets;
};

namespace detail {

inline std::vector<std::vector<VertexId>> labeling_cycles(const CubicGraph& g,
                                                          const std::vector<int>& label) {
  std::vector<std::vector<VertexId>> cycles;
  for (int skip = 0; skip < 3; ++skip) {
    std::vector<char> visited(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
      if (label[static_cast<size_t>(e0)] == skip || visited[static_cast<size_t>(e0)]) continue;
      std::vector<VertexId> cyc;
      VertexId start = g.edge(e0).u;
      VertexId cv = start;
      EdgeId ce = e0;
      do {
        cyc.push_back(cv);
        visited[static_cast<size_t>(ce)] = 1;
        cv = g.other_end(ce, cv);
        for (EdgeId f : g.incident(cv))
          if (f != ce && label[static_cast<size_t>(f)] != skip) {
            ce = f;
            break;
          }
      } while (cv != start);
      cycles.push_back(std::move(cyc));
    }
  }
  return cycles;
}

inline bool cycles_polyhedral(const CubicGraph& g,
                              const std::vector<std::vector<VertexId>>& cycles) {
  std::vector<std::vector<EdgeId>> edge_sets;
  edge_sets.reserve(cycles.size());
  for (const auto& cyc : cycles) {
    std::vector<EdgeId> es;
    for (size_t i = 0; i < cyc.size(); ++i) {
      auto e = g.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (!e) throw std::runtime_error("oracle produced a non-cycle");
      es.push_back(*e);
    }
    std::sort(es.begin(), es.end());
    edge_sets.push_back(std::move(es));
  }
  for (size_t a = 0; a < edge_sets.size(); ++a)
    for (size_t b = a + 1; b < edge_sets.size(); ++b) {
      size_t i = 0, j = 0, shared = 0;
      while (i < edge_sets[a].size() && j < edge_sets[b].size()) {
        if (edge_sets[a][i] < edge_sets[b][j]) ++i;
        else if (edge_sets[a][i] > edge_sets[b][j]) ++j;
        else { ++shared; ++i; ++j; }
      }
      if (shared >= 2) return false;
    }
  return true;
}

}  // namespace detail

inline LabelingOracle run_labeling_oracle(const CubicGraph& g) {
  const int m = g.edge_count();
  std::vector<int> label(static_cast<size_t>(m), -1);
  std::vector<int> used(static_cast<size_t>(g.vertex_count()), 0);
  LabelingOracle out;
  std::function<void(int)> dfs = [&](int e) {
    if (e == m) {
      ++out.colorings;
      auto cycles = detail::labeling_cycles(g, label);
      if (detail::cycles_polyhedral(g, cycles)) {
        ++out.surfaces;
        out.face_sets.insert(canonical_faces(cycles));
      }
      return;
    }
    const Edge& ed = g.edge(e);
    for (int a = 0; a < 3; ++a) {
      if (used[static_cast<size_t>(ed.u)] >> a & 1) continue;
      if (used[static_cast<size_t>(ed.v)] >> a & 1) continue;
      used[static_cast<size_t>(ed.u)] |= 1 << a;
      used[static_cast<size_t>(ed.v)] |= 1 << a;
      label[static_cast<size_t>(e)] = a;
      dfs(e + 1);
      label[static_cast<size_t>(e)] = -1;
      used[static_cast<size_t>(ed.u)] &= ~(1 << a);
      used[static_cast<size_t>(ed.v)] &= ~(1 << a);
    }
  };
  dfs(0);
  return out;
}

// ---------------------------------------------------------------------------
// Exact-cover oracle: is there a subset of faces covering every vertex
// exactly once?

inline bool perfect_cover_oracle(int n, const std::vector<std::vector<VertexId>>& faces) {
  std::vector<std::vector<int>> at(static_cast<size_t>(n));
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (VertexId v : faces[static_cast<size_t>(f)]) at[static_cast<size_t>(v)].push_back(f);
  std::vector<char> covered(static_cast<size_t>(n), 0);
  std::function<bool()> dfs = [&]() {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!covered[static_cast<size_t>(i)]) { v = i; break; }
    if (v < 0) return true;
    for (int f : at[static_cast<size_t>(v)]) {
      bool clash = false;
      for (VertexId w : faces[static_cast<size_t>(f)])
        if (covered[static_cast<size_t>(w)]) { clash = true; break; }
      if (clash) continue;
      for (VertexId w : faces[static_cast<size_t>(f)]) covered[static_cast<size_t>(w)] = 1;
      if (dfs()) return true;
      for (VertexId w : faces[static_cast<size_t>(f)]) covered[static_cast<size_t>(w)] = 0;
    }
    return false;
  };
  return dfs();
}

// ---------------------------------------------------------------------------
// Face-coloring oracle: can the faces be 3-colored so that faces sharing an
// edge get different colors?

inline bool face_coloring_oracle(const std::vector<std::vector<VertexId>>& faces) {
  const int nf = static_cast<int>(faces.size());
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_edge;
  for (int f = 0; f < nf; ++f) {
    const auto& cyc = faces[static_cast<size_t>(f)];
    for (size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      by_edge[std::minmax(a, b)].push_back(f);
    }
  }
  std::vector<std::set<int>> adj(static_cast<size_t>(nf));
  for (const auto& [e, fs] : by_edge) {
    (void)e;
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = i + 1; j < fs.size(); ++j)
        if (fs[i] != fs[j]) {
          adj[static_cast<size_t>(fs[i])].insert(fs[j]);
          adj[static_cast<size_t>(fs[j])].insert(fs[i]);
        }
  }
  std::vector<int> color(static_cast<size_t>(nf), -1);
  std::function<bool(int)> dfs = [&](int f) {
    if (f == nf) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int o : adj[static_cast<size_t>(f)])
        if (color[static_cast<size_t>(o)] == c) { ok = false; break; }
      if (!ok) continue;
      color[static_cast<size_t>(f)] = c;
      if (dfs(f + 1)) return true;
      color[static_cast<size_t>(f)] = -1;
    }
    return false;
  };
  return dfs(0);
}

// ---------------------------------------------------------------------------
// Face tracing for orientable rotation systems.  rot[v] is a cyclic order of
// the three edges at v; faces are the orbits of the next-dart map, one
// directed walk per face.

inline std::vector<std::vector<VertexId>> trace_rotation(
    const CubicGraph& g, const std::vector<std::array<EdgeId, 3>>& rot) {
  const int darts = 2 * g.edge_count();
  auto dart_head = [&](int d) {
    const Edge& e = g.edge(d >> 1);
    return (d & 1) ? e.u : e.v;
  };
  auto dart_tail = [&](int d) {
    const Edge& e = g.edge(d >> 1);
    return (d & 1) ? e.v : e.u;
  };
  std::vector<char> seen(static_cast<size_t>(darts), 0);
  std::vector<std::vector<VertexId>> faces;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[static_cast<size_t>(d0)]) continue;
    std::vector<VertexId> walk;
    int d = d0;
    do {
      seen[static_cast<size_t>(d)] = 1;
      walk.push_back(dart_tail(d));
      VertexId v = dart_head(d);
      EdgeId e = d >> 1;
      const auto& r = rot[static_cast<size_t>(v)];
      int i = 0;
      while (r[static_cast<size_t>(i)] != e) ++i;
      EdgeId ne = r[static_cast<size_t>((i + 1) % 3)];
      d = 2 * ne + (g.edge(ne).u == v ? 0 : 1);
    } while (d != d0);
    faces.push_back(std::move(walk));
  }
  return faces;
}

// Rotation system number `mask`: bit v selects one of the two cyclic orders
// of the edges at v.
inline std::vector<std::array<EdgeId, 3>> rotation_from_mask(const CubicGraph& g,
                                                             std::uint64_t mask) {
  std::vector<std::array<EdgeId, 3>> rot(static_cast<size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    rot[static_cast<size_t>(v)] = (mask >> v & 1)
                                      ? std::array<EdgeId, 3>{inc[0], inc[2], inc[1]}
                                      : std::array<EdgeId, 3>{inc[0], inc[1], inc[2]};
  }
  return rot;
}

// All walks are simple cycles of length >= 4 and even.  Such a traced map has
// every edge on exactly two distinct faces.
inline bool faces_simple_even(const std::vector<std::vector<VertexId>>& faces) {
  for (const auto& f : faces) {
    if (f.size() < 4 || f.size() % 2 != 0) return false;
    std::set<VertexId> distinct(f.begin(), f.end());
    if (distinct.size() != f.size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graph isomorphism for small cubic graphs: backtracking over a BFS order
// with adjacency consistency checks.

inline bool isomorphic(const CubicGraph& a, const CubicGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<VertexId> order;
  {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      std::vector<VertexId> queue = {s};
      seen[static_cast<size_t>(s)] = 1;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId v = queue[qi];
        order.push_back(v);
        for (VertexId w : a.neighbors(v))
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            queue.push_back(w);
          }
      }
    }
  }
  std::vector<VertexId> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::function<bool(size_t)> dfs = [&](size_t i) {
    if (i == order.size()) return true;
    VertexId v = order[i];
    for (VertexId w = 0; w < n; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      bool ok = true;
      for (VertexId u : a.neighbors(v)) {
        VertexId mu = map[static_cast<size_t>(u)];
        if (mu >= 0 && !b.adjacent(mu, w)) { ok = false; break; }
      }
      if (!ok) continue;
      map[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = 1;
      if (dfs(i + 1)) return true;
      map[static_cast<size_t>(v)] = -1;
      used[static_cast<size_t>(w)] = 0;
    }
    return false;
  };
  return dfs(0);
}

// ---------------------------------------------------------------------------
// Hexagonal torus map on 26 vertices (13 honeycomb cells): bipartite,
// orientable, all faces hexagons, and 6 does not divide 26, so no subset of
// faces can cover every vertex exactly once.

struct HexTorusMap {
  CubicGraph graph;
  std::vector<std::vector<VertexId>> faces;
};

inline HexTorusMap hex_torus_13() {
  const int cells = 13;
  auto A = [&](int c) { return 2 * ((c % cells + cells) % cells); };
  auto B = [&](int c) { return 2 * ((c % cells + cells) % cells) + 1; };
  std::vector<Edge> edges;
  for (int c = 0; c < cells; ++c) {
    auto push = [&](int x, int y) {
      edges.push_back({std::min(x, y), std::max(x, y)});
    };
    push(B(c), A(c));
    push(B(c), A(c + 1));
    push(B(c), A(c + 10));
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  std::vector<std::vector<VertexId>> faces;
  for (int c = 0; c < cells; ++c)
    faces.push_back({A(c), B(c), A(c + 1), B(c + 4), A(c + 4), B(c + 3)});
  return {CubicGraph(2 * cells, std::move(edges)), std::move(faces)};
}

// ---------------------------------------------------------------------------
// CLI runner: executes the binary named by XYZ_BIN and captures exit code,
// stdout, and stderr.

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

inline CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("XYZ_BIN");
  if (!bin) throw std::runtime_error("XYZ_BIN is not set");
  std::filesystem::create_directories("cli_tmp");
  static int counter = 0;
  std::string stem = "cli_tmp/run_" + std::to_string(counter++);
  std::string cmd = std::string("\"") + bin + "\" " + args + " >" + stem + ".out 2>" + stem + ".err";
  int rc = std::system(cmd.c_str());
  CliResult res;
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = read_file(stem + ".out");
  res.err = read_file(stem + ".err");
  return res;
}

}  // namespace testutil
