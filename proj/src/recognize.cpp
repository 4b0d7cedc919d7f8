#include "xyz/recognize.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <map>
#include <mutex>
#include <thread>

#include "xyz/planarity.hpp"

namespace xyz {

bool valid_partition(const CubicGraph& g, const MatchingPartition& p) {
  if (p.axis.size() != static_cast<size_t>(g.edge_count())) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    unsigned mask = 0;
    for (EdgeId e : g.incident(v)) mask |= 1u << static_cast<int>(p.axis[static_cast<size_t>(e)]);
    if (mask != 0b111u) return false;
  }
  return true;
}

PartitionCycles cycles_from_partition(const CubicGraph& g, const MatchingPartition& p) {
  const VertexId n = g.vertex_count();
  // One edge of each axis per vertex.
  std::vector<std::array<EdgeId, 3>> by_axis(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v)
    for (EdgeId e : g.incident(v))
      by_axis[static_cast<size_t>(v)][static_cast<size_t>(p.axis[static_cast<size_t>(e)])] = e;

  std::vector<std::vector<VertexId>> faces;
  std::vector<Axis> colors;
  for (int c = 2; c >= 0; --c) {
    int a = c == 0 ? 1 : 0;  // the two axes of the cycle, a < b
    int b = c == 2 ? 1 : 2;
    std::vector<char> done(static_cast<size_t>(n), 0);
    for (VertexId start = 0; start < n; ++start) {
      if (done[static_cast<size_t>(start)]) continue;
      std::vector<VertexId> cyc;
      VertexId v = start;
      int step = a;
      do {
        done[static_cast<size_t>(v)] = 1;
        cyc.push_back(v);
        v = g.other_end(by_axis[static_cast<size_t>(v)][static_cast<size_t>(step)], v);
        step = step == a ? b : a;
      } while (v != start);
      faces.push_back(std::move(cyc));
      colors.push_back(static_cast<Axis>(c));
    }
  }
  return PartitionCycles{FaceSet(g, std::move(faces)), std::move(colors)};
}

std::optional<ColoredSurface> test_partition(const CubicGraph& g, const MatchingPartition& p) {
  if (!valid_partition(g, p)) return std::nullopt;
  PartitionCycles pc = cycles_from_partition(g, p);
  auto res = check_xyz_surface_with_coloring(g, pc.faces, pc.colors);
  if (std::holds_alternative<ColoredSurface>(res))
    return std::get<ColoredSurface>(std::move(res));
  return std::nullopt;
}

namespace {

// Vertex processing order and outgoing-edge lists derived from the canonical
// st-order (source 0, sink = lowest neighbor of 0).
struct StMachine {
  std::vector<VertexId> order;
  std::vector<std::vector<EdgeId>> outs;  // per position, ascending edge ids
  int total_splits = 0;

  explicit StMachine(const CubicGraph& g) {
    StNumbering st = st_numbering(g, 0, g.neighbors(0)[0]);
    order = st.order;
    const VertexId n = g.vertex_count();
    outs.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      VertexId u = order[static_cast<size_t>(i)];
      for (EdgeId e : g.incident(u))
        if (st.number[static_cast<size_t>(g.other_end(e, u))] > i)
          outs[static_cast<size_t>(i)].push_back(e);
    }
    total_splits = static_cast<int>(st.split_vertices.size());
  }
};

struct Enumerator {
  const CubicGraph& g;
  const StMachine& sm;
  std::vector<std::int8_t> axis;
  std::vector<std::uint8_t> vmask;
  std::vector<std::uint8_t> choice;
  // When set, the first forced->size() split decisions are pinned.
  const std::vector<std::uint8_t>* forced = nullptr;
  // When >= 0, stop descending once this many splits are decided and record
  // the prefix instead of enumerating leaves.
  int prefix_cap = -1;
  std::vector<std::vector<std::uint8_t>>* prefixes = nullptr;
  std::uint64_t emitted = 0;
  std::function<bool(const std::vector<std::int8_t>&)> sink;

  Enumerator(const CubicGraph& g_, const StMachine& sm_)
      : g(g_),
        sm(sm_),
        axis(static_cast<size_t>(g_.edge_count()), -1),
        vmask(static_cast<size_t>(g_.vertex_count()), 0),
        choice(static_cast<size_t>(sm_.total_splits), 0) {}

  bool try_assign(EdgeId e, int a, VertexId u) {
    VertexId w = g.other_end(e, u);
    if (vmask[static_cast<size_t>(w)] & (1u << a)) return false;
    axis[static_cast<size_t>(e)] = static_cast<std::int8_t>(a);
    vmask[static_cast<size_t>(w)] |= static_cast<std::uint8_t>(1u << a);
    vmask[static_cast<size_t>(u)] |= static_cast<std::uint8_t>(1u << a);
    return true;
  }

  void unassign(EdgeId e, int a, VertexId u) {
    VertexId w = g.other_end(e, u);
    axis[static_cast<size_t>(e)] = -1;
    vmask[static_cast<size_t>(w)] &= static_cast<std::uint8_t>(~(1u << a));
    vmask[static_cast<size_t>(u)] &= static_cast<std::uint8_t>(~(1u << a));
  }

  // Returns false when the sink asked to abort.
  bool walk(int pos, int split_idx) {
    if (pos == g.vertex_count()) {
      if (prefix_cap >= 0) {
        prefixes->emplace_back(choice.begin(), choice.begin() + prefix_cap);
        return true;
      }
      ++emitted;
      return sink(axis);
    }
    VertexId u = sm.order[static_cast<size_t>(pos)];
    const auto& o = sm.outs[static_cast<size_t>(pos)];
    if (o.empty()) return walk(pos + 1, split_idx);
    if (o.size() == 3) {
      // Source star: edges in id order get X, Y, Z.  No alternatives — the
      // enumeration is canonical modulo axis permutations.
      for (int i = 0; i < 3; ++i) {
        bool ok = try_assign(o[static_cast<size_t>(i)], i, u);
        assert(ok);
        (void)ok;
      }
      bool cont = walk(pos + 1, split_idx);
      for (int i = 2; i >= 0; --i) unassign(o[static_cast<size_t>(i)], i, u);
      return cont;
    }
    unsigned rem = 0b111u & ~vmask[static_cast<size_t>(u)];
    if (o.size() == 1) {
      // Merge vertex: forced.
      assert(std::popcount(rem) == 1);
      int a = std::countr_zero(rem);
      if (!try_assign(o[0], a, u)) return true;
      bool cont = walk(pos + 1, split_idx);
      unassign(o[0], a, u);
      return cont;
    }
    // Split vertex: two free axes; lower edge id takes the smaller axis first.
    assert(std::popcount(rem) == 2);
    int a_lo = std::countr_zero(rem);
    int a_hi = std::countr_zero(rem ^ (1u << a_lo));
    if (prefix_cap >= 0 && split_idx == prefix_cap) {
      prefixes->emplace_back(choice.begin(), choice.begin() + prefix_cap);
      return true;
    }
    for (int c = 0; c < 2; ++c) {
      if (forced && split_idx < static_cast<int>(forced->size()) &&
          (*forced)[static_cast<size_t>(split_idx)] != c)
        continue;
      int first = c == 0 ? a_lo : a_hi;
      int second = c == 0 ? a_hi : a_lo;
      if (!try_assign(o[0], first, u)) continue;
      if (!try_assign(o[1], second, u)) {
        unassign(o[0], first, u);
        continue;
      }
      choice[static_cast<size_t>(split_idx)] = static_cast<std::uint8_t>(c);
      bool cont = walk(pos + 1, split_idx + 1);
      unassign(o[1], second, u);
      unassign(o[0], first, u);
      if (!cont) return false;
    }
    return true;
  }
};

MatchingPartition to_partition(const std::vector<std::int8_t>& axis) {
  MatchingPartition p;
  p.axis.reserve(axis.size());
  for (std::int8_t a : axis) p.axis.push_back(static_cast<Axis>(a));
  return p;
}

// Subtree roots for the parallel search: all feasible assignments of the
// first J split decisions, in sequential branch order.
std::vector<std::vector<std::uint8_t>> collect_prefixes(const CubicGraph& g, const StMachine& sm,
                                                        int threads) {
  int j = 0;
  while ((1 << j) < 8 * threads && j < sm.total_splits && j < 16) ++j;
  Enumerator en(g, sm);
  std::vector<std::vector<std::uint8_t>> out;
  en.prefix_cap = j;
  en.prefixes = &out;
  en.walk(0, 0);
  return out;
}

}  // namespace

void enumerate_partitions(const CubicGraph& g,
                          const std::function<bool(const MatchingPartition&)>& emit) {
  StMachine sm(g);
  Enumerator en(g, sm);
  en.sink = [&](const std::vector<std::int8_t>& axis) { return emit(to_partition(axis)); };
  en.walk(0, 0);
}

std::vector<MatchingPartition> all_partitions(const CubicGraph& g) {
  std::vector<MatchingPartition> out;
  enumerate_partitions(g, [&](const MatchingPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

std::optional<RecognitionFailure> quick_rejects(const CubicGraph& g) {
  if (!g.connected()) return RecognitionFailure{"disconnected", ""};
  if (auto tri = find_triangle(g))
    return RecognitionFailure{"contains-triangle",
                              "vertices " + std::to_string((*tri)[0]) + "," +
                                  std::to_string((*tri)[1]) + "," + std::to_string((*tri)[2])};
  ConnectivityCheck conn = is_three_connected(g);
  if (!conn.three_connected) {
    std::string detail;
    if (conn.cut_vertex)
      detail = "cut vertex " + std::to_string(*conn.cut_vertex);
    else if (conn.cut_pair)
      detail = "cut pair " + std::to_string(conn.cut_pair->first) + "," +
               std::to_string(conn.cut_pair->second);
    return RecognitionFailure{"not-3-connected", detail};
  }
  return std::nullopt;
}

// Rewrites a partition's axes so the source star follows the canonical
// convention (edges of vertex 0 in id order get X, Y, Z).
MatchingPartition normalize_to_source_star(const CubicGraph& g, const MatchingPartition& p) {
  const auto& inc = g.incident(0);
  std::array<Axis, 3> perm{};
  for (int i = 0; i < 3; ++i)
    perm[static_cast<size_t>(p.axis[static_cast<size_t>(inc[static_cast<size_t>(i)])])] =
        static_cast<Axis>(i);
  MatchingPartition out;
  out.axis.reserve(p.axis.size());
  for (Axis a : p.axis) out.axis.push_back(perm[static_cast<size_t>(a)]);
  return out;
}

std::optional<Recognition> planar_shortcut(const CubicGraph& g) {
  auto surf = planar_recognize(g);
  if (!std::holds_alternative<ColoredSurface>(surf)) return std::nullopt;
  const ColoredSurface& cs = std::get<ColoredSurface>(surf);
  MatchingPartition p;
  p.axis.resize(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) p.axis[static_cast<size_t>(e)] = cs.edge_axis(e);
  p = normalize_to_source_star(g, p);
  auto rebuilt = test_partition(g, p);
  assert(rebuilt);
  return Recognition{std::move(p), std::move(*rebuilt)};
}

std::optional<std::vector<std::int8_t>> parallel_first(const CubicGraph& g, const StMachine& sm,
                                                       int threads) {
  auto prefixes = collect_prefixes(g, sm, threads);
  std::atomic<size_t> next{0};
  std::atomic<size_t> best{SIZE_MAX};
  std::vector<std::optional<std::vector<std::int8_t>>> found(prefixes.size());
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      if (i > best.load()) continue;
      Enumerator en(g, sm);
      en.forced = &prefixes[i];
      en.sink = [&](const std::vector<std::int8_t>& axis) {
        if (test_partition(g, to_partition(axis))) {
          found[i] = axis;
          size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return false;
        }
        return true;
      };
      en.walk(0, 0);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& f : found)
    if (f) return *f;
  return std::nullopt;
}

}  // namespace

std::variant<Recognition, RecognitionFailure> recognize_xyz(const CubicGraph& g,
                                                            const RecognizeOptions& opts) {
  if (auto fail = quick_rejects(g)) return *fail;
  if (opts.planar_fast && is_planar(g)) {
    auto bip = is_bipartite(g);
    if (!bip.side) return RecognitionFailure{"planar-not-bipartite", "graph has an odd cycle"};
    auto rec = planar_shortcut(g);
    assert(rec);
    return std::move(*rec);
  }
  StMachine sm(g);
  std::optional<std::vector<std::int8_t>> hit;
  if (opts.threads > 1) {
    hit = parallel_first(g, sm, opts.threads);
  } else {
    Enumerator en(g, sm);
    en.sink = [&](const std::vector<std::int8_t>& axis) {
      if (test_partition(g, to_partition(axis))) {
        hit = axis;
        return false;
      }
      return true;
    };
    en.walk(0, 0);
  }
  if (!hit) return RecognitionFailure{"no-valid-partition", ""};
  MatchingPartition p = to_partition(*hit);
  auto surface = test_partition(g, p);
  return Recognition{std::move(p), std::move(*surface)};
}

std::variant<Census, RecognitionFailure> recognize_all(const CubicGraph& g,
                                                       const RecognizeOptions& opts) {
  if (auto fail = quick_rejects(g)) return *fail;
  StMachine sm(g);
  using Key = std::vector<std::vector<VertexId>>;
  // Value: (subtree rank, emit index within subtree, axis assignment) — kept
  // minimal so each face set is represented by its sequentially-first
  // partition regardless of thread scheduling.
  std::map<Key, std::tuple<std::uint64_t, std::uint64_t, std::vector<std::int8_t>>> census;
  std::uint64_t enumerated = 0;

  auto consume = [&g](std::map<Key, std::tuple<std::uint64_t, std::uint64_t,
                                               std::vector<std::int8_t>>>& into,
                      std::uint64_t rank, std::uint64_t idx,
                      const std::vector<std::int8_t>& axis) {
    MatchingPartition p = to_partition(axis);
    if (!test_partition(g, p)) return;
    Key key = cycles_from_partition(g, p).faces.canonical();
    auto it = into.find(key);
    if (it == into.end())
      into.emplace(std::move(key), std::make_tuple(rank, idx, axis));
    else if (std::make_pair(rank, idx) <
             std::make_pair(std::get<0>(it->second), std::get<1>(it->second)))
      it->second = std::make_tuple(rank, idx, axis);
  };

  if (opts.threads > 1) {
    auto prefixes = collect_prefixes(g, sm, opts.threads);
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::mutex merge_mu;
    auto work = [&] {
      std::map<Key, std::tuple<std::uint64_t, std::uint64_t, std::vector<std::int8_t>>> local;
      std::uint64_t local_total = 0;
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        Enumerator en(g, sm);
        en.forced = &prefixes[i];
        std::uint64_t idx = 0;
        en.sink = [&](const std::vector<std::int8_t>& axis) {
          consume(local, i, idx++, axis);
          return true;
        };
        en.walk(0, 0);
        local_total += en.emitted;
      }
      total.fetch_add(local_total);
      std::lock_guard<std::mutex> lock(merge_mu);
      for (auto& [key, val] : local) {
        auto it = census.find(key);
        if (it == census.end())
          census.emplace(key, std::move(val));
        else if (std::make_pair(std::get<0>(val), std::get<1>(val)) <
                 std::make_pair(std::get<0>(it->second), std::get<1>(it->second)))
          it->second = std::move(val);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    enumerated = total.load();
  } else {
    Enumerator en(g, sm);
    std::uint64_t idx = 0;
    en.sink = [&](const std::vector<std::int8_t>& axis) {
      consume(census, 0, idx++, axis);
      return true;
    };
    en.walk(0, 0);
    enumerated = en.emitted;
  }

  Census out;
  out.partitions_enumerated = enumerated;
  out.split_vertices = sm.total_splits;
  for (auto& [key, val] : census) {
    MatchingPartition p = to_partition(std::get<2>(val));
    auto surface = test_partition(g, p);
    assert(surface);
    out.entries.push_back(CensusEntry{std::move(p), std::move(*surface)});
  }
  return out;
}

std::variant<ColoredSurface, RecognitionFailure> planar_recognize(const CubicGraph& g) {
  auto emb = planar_embedding(g);
  if (!emb) throw NotPlanar();
  if (!g.connected()) return RecognitionFailure{"disconnected", ""};
  ConnectivityCheck conn = is_three_connected(g);
  if (!conn.three_connected) {
    std::string detail = conn.cut_vertex
                             ? "cut vertex " + std::to_string(*conn.cut_vertex)
                             : "cut pair " + std::to_string(conn.cut_pair->first) + "," +
                                   std::to_string(conn.cut_pair->second);
    return RecognitionFailure{"not-3-connected", detail};
  }
  auto bip = is_bipartite(g);
  if (!bip.side) {
    std::string detail = "odd cycle of length " + std::to_string(bip.odd_cycle.size());
    return RecognitionFailure{"not-bipartite", detail};
  }
  FaceSet fs(g, faces_from_rotation(g, emb->rotation));
  auto res = check_xyz_surface(g, fs);
  if (!std::holds_alternative<ColoredSurface>(res))
    throw SurfaceError("planar face set of a 3-connected bipartite cubic graph failed validation");
  return std::get<ColoredSurface>(std::move(res));
}

}  // namespace xyz
