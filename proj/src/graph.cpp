#include "xyz/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace xyz {

NotCubic::NotCubic(VertexId v, int deg)
    : GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(deg)),
      vertex(v),
      degree(deg) {}

SelfLoop::SelfLoop(VertexId v)
    : GraphError("self loop at vertex " + std::to_string(v)), vertex(v) {}

ParallelEdge::ParallelEdge(VertexId a, VertexId b)
    : GraphError("parallel edge between " + std::to_string(a) + " and " + std::to_string(b)),
      u(a),
      v(b) {}

CubicGraph::CubicGraph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 4) throw MalformedDocument("cubic graph needs at least 4 vertices");
  if (edges_.size() != static_cast<size_t>(n_) * 3 / 2 || n_ % 2 != 0)
    throw NotCubic(-1, -1);
  std::vector<int> deg(static_cast<size_t>(n_), 0);
  incident_.assign(static_cast<size_t>(n_), {-1, -1, -1});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    Edge& ed = edges_[static_cast<size_t>(e)];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw MalformedDocument("edge endpoint out of range");
    if (ed.u == ed.v) throw SelfLoop(ed.u);
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert(key).second) throw ParallelEdge(key.first, key.second);
    for (VertexId w : {ed.u, ed.v}) {
      if (deg[static_cast<size_t>(w)] == 3) throw NotCubic(w, 4);
      incident_[static_cast<size_t>(w)][static_cast<size_t>(deg[static_cast<size_t>(w)]++)] = e;
    }
  }
  for (VertexId v = 0; v < n_; ++v)
    if (deg[static_cast<size_t>(v)] != 3) throw NotCubic(v, deg[static_cast<size_t>(v)]);
  // incident_ is already ascending: edges are inserted in id order.
}

std::optional<EdgeId> CubicGraph::find_edge(VertexId u, VertexId v) const {
  for (EdgeId e : incident(u))
    if (other_end(e, u) == v) return e;
  return std::nullopt;
}

std::array<VertexId, 3> CubicGraph::neighbors(VertexId v) const {
  const auto& inc = incident(v);
  return {other_end(inc[0], v), other_end(inc[1], v), other_end(inc[2], v)};
}

bool CubicGraph::connected() const {
  std::vector<char> vis(static_cast<size_t>(n_), 0);
  std::queue<VertexId> q;
  q.push(0);
  vis[0] = 1;
  VertexId count = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : neighbors(v))
      if (!vis[static_cast<size_t>(w)]) {
        vis[static_cast<size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == n_;
}

OpenCubicGraph::OpenCubicGraph(VertexId n, std::vector<Edge> edges, std::vector<Port> ports)
    : n_(n), edges_(std::move(edges)), ports_(std::move(ports)) {
  std::vector<int> deg(static_cast<size_t>(n_), 0);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& ed : edges_) {
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw MalformedDocument("edge endpoint out of range");
    if (ed.u == ed.v) throw SelfLoop(ed.u);
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert(key).second) throw ParallelEdge(key.first, key.second);
    ++deg[static_cast<size_t>(ed.u)];
    ++deg[static_cast<size_t>(ed.v)];
  }
  for (const Port& p : ports_) {
    if (p.vertex < 0 || p.vertex >= n_) throw MalformedDocument("port vertex out of range");
    ++deg[static_cast<size_t>(p.vertex)];
  }
  for (VertexId v = 0; v < n_; ++v)
    if (deg[static_cast<size_t>(v)] != 3) throw NotCubic(v, deg[static_cast<size_t>(v)]);
}

const Port& OpenCubicGraph::port(const std::string& name) const {
  for (const Port& p : ports_)
    if (p.name == name) return p;
  throw MalformedDocument("no port named " + name);
}

int OpenCubicGraph::degree(VertexId v) const {
  int d = 0;
  for (const Edge& ed : edges_)
    if (ed.u == v || ed.v == v) ++d;
  return d;
}

BipartiteCheck is_bipartite(const CubicGraph& g) {
  const VertexId n = g.vertex_count();
  std::vector<std::int8_t> side(static_cast<size_t>(n), -1);
  std::vector<VertexId> parent(static_cast<size_t>(n), -1);
  BipartiteCheck out;
  for (VertexId root = 0; root < n; ++root) {
    if (side[static_cast<size_t>(root)] != -1) continue;
    side[static_cast<size_t>(root)] = 0;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v)) {
        if (side[static_cast<size_t>(w)] == -1) {
          side[static_cast<size_t>(w)] = static_cast<std::int8_t>(1 - side[static_cast<size_t>(v)]);
          parent[static_cast<size_t>(w)] = v;
          q.push(w);
        } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
          // Odd closed walk: v..root + root..w through BFS parents, plus edge wv.
          std::vector<VertexId> up_v, up_w;
          for (VertexId x = v; x != -1; x = parent[static_cast<size_t>(x)]) up_v.push_back(x);
          for (VertexId x = w; x != -1; x = parent[static_cast<size_t>(x)]) up_w.push_back(x);
          // Trim to the lowest common ancestor.
          while (up_v.size() > 1 && up_w.size() > 1 &&
                 up_v[up_v.size() - 1] == up_w[up_w.size() - 1] &&
                 up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
            up_v.pop_back();
            up_w.pop_back();
          }
          out.odd_cycle = up_v;
          for (size_t i = up_w.size(); i-- > 1;) out.odd_cycle.push_back(up_w[i - 1]);
          return out;
        }
      }
    }
  }
  out.side.emplace(side.begin(), side.end());
  return out;
}

std::optional<std::array<VertexId, 3>> find_triangle(const CubicGraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    for (VertexId w : g.neighbors(u))
      if (w != v && g.adjacent(w, v)) {
        std::array<VertexId, 3> t{u, v, w};
        std::sort(t.begin(), t.end());
        return t;
      }
  }
  return std::nullopt;
}

namespace {

// Number of vertices reachable from `start` with up to two vertices removed.
VertexId reachable_without(const CubicGraph& g, VertexId start, VertexId a, VertexId b) {
  std::vector<char> vis(static_cast<size_t>(g.vertex_count()), 0);
  if (a >= 0) vis[static_cast<size_t>(a)] = 1;
  if (b >= 0) vis[static_cast<size_t>(b)] = 1;
  std::queue<VertexId> q;
  q.push(start);
  vis[static_cast<size_t>(start)] = 1;
  VertexId count = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : g.neighbors(v))
      if (!vis[static_cast<size_t>(w)]) {
        vis[static_cast<size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
  }
  return count;
}

}  // namespace

ConnectivityCheck is_three_connected(const CubicGraph& g) {
  ConnectivityCheck out;
  const VertexId n = g.vertex_count();
  out.connected = g.connected();
  if (!out.connected) return out;
  for (VertexId a = 0; a < n; ++a) {
    VertexId start = a == 0 ? 1 : 0;
    if (reachable_without(g, start, a, -1) != n - 1) {
      out.cut_vertex = a;
      return out;
    }
  }
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      VertexId start = 0;
      while (start == a || start == b) ++start;
      if (reachable_without(g, start, a, b) != n - 2) {
        out.cut_pair = {a, b};
        return out;
      }
    }
  out.three_connected = true;
  return out;
}

StNumbering st_numbering(const CubicGraph& g, VertexId s, VertexId t) {
  if (!g.adjacent(s, t)) throw MalformedDocument("st_numbering requires adjacent s, t");
  const VertexId n = g.vertex_count();
  const EdgeId st_edge = *g.find_edge(s, t);

  // Open ear decomposition, keeping a linear vertex order from s to t.  Each
  // new ear's interior is inserted immediately after the ear endpoint that
  // currently comes first, which preserves the st-property.
  std::vector<VertexId> order;
  std::vector<int> pos(static_cast<size_t>(n), -1);
  std::vector<char> edge_used(static_cast<size_t>(g.edge_count()), 0);

  // Initial ear: the cycle through (s, t) = edge st + an s-t path avoiding it.
  {
    std::vector<VertexId> parent(static_cast<size_t>(n), -1);
    std::vector<char> vis(static_cast<size_t>(n), 0);
    std::queue<VertexId> q;
    q.push(s);
    vis[static_cast<size_t>(s)] = 1;
    while (!q.empty() && !vis[static_cast<size_t>(t)]) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        if (e == st_edge) continue;
        VertexId w = g.other_end(e, v);
        if (!vis[static_cast<size_t>(w)]) {
          vis[static_cast<size_t>(w)] = 1;
          parent[static_cast<size_t>(w)] = v;
          q.push(w);
        }
      }
    }
    if (!vis[static_cast<size_t>(t)])
      throw NotBiconnected("edge (s,t) is a bridge");
    std::vector<VertexId> path;
    for (VertexId x = t; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());  // s .. t
    order = path;
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
    edge_used[static_cast<size_t>(st_edge)] = 1;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      edge_used[static_cast<size_t>(*g.find_edge(path[i], path[i + 1]))] = 1;
  }

  auto in_order = [&](VertexId v) { return pos[static_cast<size_t>(v)] != -1; };

  bool progress = true;
  while (progress) {
    progress = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (edge_used[static_cast<size_t>(e)]) continue;
      auto [u, v] = g.edge(e);
      if (in_order(u) && in_order(v)) {
        edge_used[static_cast<size_t>(e)] = 1;  // chord; order untouched
        progress = true;
        continue;
      }
      if (!in_order(u) && !in_order(v)) continue;
      // Ear a - x0 - ... - xb - b with distinct ordered endpoints a, b and new
      // interior.  BFS the whole new component so a second attachment besides
      // a is found whenever one exists.
      VertexId a = in_order(u) ? u : v;
      VertexId x0 = in_order(u) ? v : u;
      std::vector<VertexId> parent(static_cast<size_t>(n), -2);
      std::vector<VertexId> bfs{x0};
      parent[static_cast<size_t>(x0)] = -1;
      for (size_t head = 0; head < bfs.size(); ++head) {
        VertexId x = bfs[head];
        for (VertexId y : g.neighbors(x))
          if (!in_order(y) && parent[static_cast<size_t>(y)] == -2) {
            parent[static_cast<size_t>(y)] = x;
            bfs.push_back(y);
          }
      }
      VertexId b = -1, xb = -1;
      for (VertexId x : bfs) {
        for (VertexId y : g.neighbors(x))
          if (in_order(y) && y != a) {
            b = y;
            xb = x;
            break;
          }
        if (b != -1) break;
      }
      if (b == -1) throw NotBiconnected("component attaches at a single vertex");
      std::vector<VertexId> interior;
      for (VertexId x = xb; x != -1; x = parent[static_cast<size_t>(x)]) interior.push_back(x);
      std::reverse(interior.begin(), interior.end());  // x0 .. xb
      edge_used[static_cast<size_t>(e)] = 1;
      for (size_t i = 0; i + 1 < interior.size(); ++i)
        edge_used[static_cast<size_t>(*g.find_edge(interior[i], interior[i + 1]))] = 1;
      edge_used[static_cast<size_t>(*g.find_edge(xb, b))] = 1;
      // Insert after whichever endpoint is earlier, in path order from it.
      VertexId first = pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)] ? a : b;
      if (first == b) std::reverse(interior.begin(), interior.end());
      order.insert(order.begin() + pos[static_cast<size_t>(first)] + 1, interior.begin(),
                   interior.end());
      for (size_t i = 0; i < order.size(); ++i)
        pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
      progress = true;
    }
  }
  for (char used : edge_used)
    if (!used) throw NotBiconnected("graph is not biconnected");
  if (static_cast<VertexId>(order.size()) != n)
    throw NotBiconnected("graph is not connected");

  StNumbering out;
  out.order = order;
  out.number.assign(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < order.size(); ++i) out.number[static_cast<size_t>(order[i])] = static_cast<int>(i);
  for (VertexId v : order) {
    if (v == s || v == t) continue;
    int earlier = 0;
    for (VertexId w : g.neighbors(v))
      if (out.number[static_cast<size_t>(w)] < out.number[static_cast<size_t>(v)]) ++earlier;
    if (earlier == 0 || earlier == 3)
      throw NotBiconnected("internal error: invalid st-numbering produced");
    if (earlier == 1) out.split_vertices.push_back(v);
  }
  std::sort(out.split_vertices.begin(), out.split_vertices.end(),
            [&](VertexId a, VertexId b) {
              return out.number[static_cast<size_t>(a)] < out.number[static_cast<size_t>(b)];
            });
  return out;
}

CubicGraph double_cover(const CubicGraph& g) {
  const VertexId n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()) * 2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    edges.push_back({u, static_cast<VertexId>(n + v)});
    edges.push_back({static_cast<VertexId>(n + u), v});
  }
  return CubicGraph(n * 2, std::move(edges));
}

}  // namespace xyz
