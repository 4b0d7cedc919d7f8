// Thin data-in/data-out bindings: graphs are (n, edge list) pairs, faces are
// vertex-cycle lists, and results come back as plain dicts, so the Python
// side never holds C++ object lifetimes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xyz/embed.hpp"
#include "xyz/families.hpp"
#include "xyz/graph.hpp"
#include "xyz/recognize.hpp"
#include "xyz/surface.hpp"

namespace py = pybind11;
using namespace xyz;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;
using FaceList = std::vector<std::vector<int>>;

CubicGraph make_graph(int n, const EdgeList& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  try {
    return CubicGraph(n, std::move(es));
  } catch (const GraphError& e) {
    throw py::value_error(e.what());
  }
}

FaceSet make_faces(const CubicGraph& g, const FaceList& faces) {
  std::vector<std::vector<VertexId>> fs(faces.begin(), faces.end());
  try {
    return FaceSet(g, std::move(fs));
  } catch (const SurfaceError& e) {
    throw py::value_error(e.what());
  }
}

py::dict graph_dict(const CubicGraph& g) {
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  py::dict out;
  out["n"] = g.vertex_count();
  out["edges"] = edges;
  return out;
}

py::dict surface_dict(const ColoredSurface& s) {
  std::vector<std::string> colors;
  for (Axis a : s.colors()) colors.emplace_back(axis_name(a));
  std::vector<std::array<std::int64_t, 3>> coords;
  for (const Coord& c : coordinates_from_surface(s)) coords.push_back(c);
  py::dict out;
  out["faces"] = s.faces().faces();
  out["colors"] = colors;
  out["coordinates"] = coords;
  return out;
}

py::dict recognize_py(int n, const EdgeList& edges, bool planar_fast, int threads) {
  CubicGraph g = make_graph(n, edges);
  RecognizeOptions opts;
  opts.planar_fast = planar_fast;
  opts.threads = threads;
  auto res = recognize_xyz(g, opts);
  py::dict out;
  if (const auto* r = std::get_if<Recognition>(&res)) {
    out["accepted"] = true;
    py::dict s = surface_dict(r->surface);
    out["faces"] = s["faces"];
    out["colors"] = s["colors"];
    out["coordinates"] = s["coordinates"];
  } else {
    const auto& f = std::get<RecognitionFailure>(res);
    out["accepted"] = false;
    out["reason"] = f.reason;
    if (!f.detail.empty()) out["detail"] = f.detail;
  }
  return out;
}

py::dict recognize_all_py(int n, const EdgeList& edges, int threads) {
  CubicGraph g = make_graph(n, edges);
  RecognizeOptions opts;
  opts.threads = threads;
  auto res = recognize_all(g, opts);
  py::dict out;
  if (const auto* census = std::get_if<Census>(&res)) {
    py::list surfaces;
    for (const CensusEntry& e : census->entries) surfaces.append(surface_dict(e.surface));
    out["accepted"] = census->entries.size() > 0;
    out["count"] = census->entries.size();
    out["partitions_enumerated"] = census->partitions_enumerated;
    out["surfaces"] = surfaces;
  } else {
    const auto& f = std::get<RecognitionFailure>(res);
    out["accepted"] = false;
    out["count"] = 0;
    out["reason"] = f.reason;
  }
  return out;
}

const char* rejection_name(SurfaceRejection::Reason r) {
  switch (r) {
    case SurfaceRejection::Reason::NotManifold: return "not-manifold";
    case SurfaceRejection::Reason::NotPolyhedral: return "not-polyhedral";
    case SurfaceRejection::Reason::OddFace: return "odd-face";
    case SurfaceRejection::Reason::ShortFace: return "short-face";
    case SurfaceRejection::Reason::NotThreeColorable: return "not-three-colorable";
  }
  return "unknown";
}

py::dict check_surface_py(int n, const EdgeList& edges, const FaceList& faces) {
  CubicGraph g = make_graph(n, edges);
  FaceSet fs = make_faces(g, faces);
  auto res = check_xyz_surface(g, fs);
  py::dict out;
  if (const auto* s = std::get_if<ColoredSurface>(&res)) {
    out["ok"] = true;
    std::vector<std::string> colors;
    for (Axis a : s->colors()) colors.emplace_back(axis_name(a));
    out["colors"] = colors;
  } else {
    const auto& rej = std::get<SurfaceRejection>(res);
    out["ok"] = false;
    out["reason"] = rejection_name(rej.reason);
    if (!rej.detail.empty()) out["detail"] = rej.detail;
  }
  return out;
}

py::dict classify_py(int n, const EdgeList& edges, const FaceList& faces) {
  CubicGraph g = make_graph(n, edges);
  FaceSet fs = make_faces(g, faces);
  TopologyClass t = classify_topology(g, fs);
  py::dict out;
  out["euler_characteristic"] = t.euler_characteristic;
  out["orientable"] = t.orientable;
  if (t.orientable)
    out["genus"] = t.genus;
  else
    out["crosscap"] = t.crosscap;
  return out;
}

py::dict builtin_py(const std::string& name) {
  try {
    return graph_dict(builtin(name));
  } catch (const UnknownName& e) {
    throw py::value_error(e.what());
  }
}

py::dict prism_py(int m) { return graph_dict(prism(m)); }

py::dict ccc_py(int k) {
  GeneratedMap m = ccc(k);
  py::dict out = graph_dict(m.graph);
  out["faces"] = m.faces.faces();
  return out;
}

py::dict grid_mod_py(int k) {
  GridEmbedding ge = grid_mod(k);
  py::dict out = graph_dict(ge.graph);
  std::vector<std::array<std::int64_t, 3>> coords(ge.coords.begin(), ge.coords.end());
  out["coordinates"] = coords;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Recognition and drawing of cubic graphs on 3D integer grid lines";
  m.def("recognize", &recognize_py, py::arg("n"), py::arg("edges"),
        py::arg("planar_fast") = true, py::arg("threads") = 1,
        "Search for a grid drawing; returns a dict with accepted/reason/coordinates.");
  m.def("recognize_all", &recognize_all_py, py::arg("n"), py::arg("edges"),
        py::arg("threads") = 1, "Enumerate every accepted face set of the graph.");
  m.def("check_surface", &check_surface_py, py::arg("n"), py::arg("edges"), py::arg("faces"),
        "Validate a declared face set (manifold, polyhedral, even faces, 3-colorable).");
  m.def("classify", &classify_py, py::arg("n"), py::arg("edges"), py::arg("faces"),
        "Topological type of a face set: Euler characteristic, orientability, genus.");
  m.def("builtin", &builtin_py, py::arg("name"), "Named example graph as {'n', 'edges'}.");
  m.def("builtin_names", &builtin_names, "Names accepted by builtin().");
  m.def("prism", &prism_py, py::arg("m"), "The m-gonal prism graph.");
  m.def("ccc", &ccc_py, py::arg("k"), "Cube-connected cycles of order k, with its face set.");
  m.def("grid_mod", &grid_mod_py, py::arg("k"),
        "Modular grid drawing on Z_k^3: graph plus explicit coordinates.");
}
