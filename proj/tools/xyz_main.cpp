// Command-line front end: one binary, one subcommand per operation, JSON in
// and out.  Exit codes: 0 success, 1 negative verdict, 2 usage or malformed
// input, 3 internal error.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xyz/covers.hpp"
#include "xyz/embed.hpp"
#include "xyz/families.hpp"
#include "xyz/graph.hpp"
#include "xyz/jsonio.hpp"
#include "xyz/recognize.hpp"
#include "xyz/reduction.hpp"
#include "xyz/surface.hpp"

namespace {

using nlohmann::json;
using namespace xyz;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path) {
  if (!out_path.empty()) write_text_file(out_path, text);
  std::cout << text;
}

int threads_default() {
  const char* s = std::getenv("XYZ_THREADS");
  if (!s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1 || v > 256) return 1;
  return static_cast<int>(v);
}

int print_rejection(const std::string& reason, const std::string& detail,
                    const json& extra = json::object()) {
  json j = extra;
  j["format"] = "xyz.rejection/1";
  j["accepted"] = false;
  j["reason"] = reason;
  if (!detail.empty()) j["detail"] = detail;
  std::cout << dump(j);
  return 1;
}

const char* rejection_name(SurfaceRejection::Reason r) {
  switch (r) {
    case SurfaceRejection::Reason::NotManifold: return "not-manifold";
    case SurfaceRejection::Reason::NotPolyhedral: return "not-polyhedral";
    case SurfaceRejection::Reason::OddFace: return "odd-face";
    case SurfaceRejection::Reason::ShortFace: return "short-face";
    case SurfaceRejection::Reason::NotThreeColorable: return "not-three-colorable";
  }
  return "rejected";
}

// Color the parsed map, honoring declared colors when the document has them.
std::variant<ColoredSurface, SurfaceRejection> color_map(const MapDocument& md) {
  if (md.colors) return check_xyz_surface_with_coloring(md.graph, md.faces, *md.colors);
  return check_xyz_surface(md.graph, md.faces);
}

int cmd_recognize(const std::string& path, bool all, bool planar_fast, int threads,
                  const std::string& out_path) {
  CubicGraph g = parse_graph(read_text_file(path));
  RecognizeOptions opts;
  opts.planar_fast = planar_fast;
  opts.threads = threads;
  if (!all) {
    auto res = recognize_xyz(g, opts);
    if (const auto* fail = std::get_if<RecognitionFailure>(&res))
      return print_rejection(fail->reason, fail->detail);
    emit(write_surface(std::get<Recognition>(res).surface), out_path);
    return 0;
  }
  auto res = recognize_all(g, opts);
  if (const auto* fail = std::get_if<RecognitionFailure>(&res))
    return print_rejection(fail->reason, fail->detail);
  const Census& census = std::get<Census>(res);
  json j;
  j["format"] = "xyz.census/1";
  j["count"] = census.entries.size();
  j["partitions_enumerated"] = census.partitions_enumerated;
  j["split_vertices"] = census.split_vertices;
  json surfaces = json::array();
  for (const CensusEntry& e : census.entries)
    surfaces.push_back(json::parse(write_surface(e.surface)));
  j["surfaces"] = std::move(surfaces);
  emit(dump(j), out_path);
  return 0;
}

int cmd_check_surface(const std::string& path) {
  MapDocument md = parse_map(read_text_file(path));
  auto res = color_map(md);
  if (const auto* rej = std::get_if<SurfaceRejection>(&res))
    return print_rejection(rejection_name(rej->reason), rej->detail);
  std::cout << write_surface(std::get<ColoredSurface>(res));
  return 0;
}

// Shared front half of embed/metrics/svg: color the map, then lay it out.
std::variant<Embedding3D, int> layout(const std::string& path, const std::string& override_path,
                                      CubicGraph& g_out) {
  MapDocument md = parse_map(read_text_file(path));
  auto res = color_map(md);
  if (const auto* rej = std::get_if<SurfaceRejection>(&res))
    return print_rejection(rejection_name(rej->reason), rej->detail);
  const ColoredSurface& s = std::get<ColoredSurface>(res);
  Embedding3D coords;
  if (override_path.empty()) {
    coords = coordinates_from_surface(s);
  } else {
    CoordOverride over = parse_override(read_text_file(override_path));
    coords = coordinates_from_surface(s, over);
  }
  g_out = md.graph;
  return coords;
}

int cmd_embed(const std::string& path, const std::string& override_path,
              const std::string& out_path) {
  CubicGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto res = layout(path, override_path, g);
  if (const int* code = std::get_if<int>(&res)) return *code;
  emit(write_embedding(std::get<Embedding3D>(res)), out_path);
  return 0;
}

int cmd_metrics(const std::string& path, const std::string& override_path) {
  CubicGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto res = layout(path, override_path, g);
  if (const int* code = std::get_if<int>(&res)) return *code;
  DrawingMetrics m = drawing_metrics(g, std::get<Embedding3D>(res));
  json j;
  j["format"] = "xyz.metrics/1";
  j["n_xy"] = m.n_xy;
  j["n_yz"] = m.n_yz;
  j["n_xz"] = m.n_xz;
  j["volume"] = m.volume;
  j["crossings"] = m.crossings;
  std::cout << dump(j);
  return 0;
}

int cmd_svg(const std::string& path, const std::string& override_path,
            const std::string& out_path) {
  CubicGraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto res = layout(path, override_path, g);
  if (const int* code = std::get_if<int>(&res)) return *code;
  emit(export_svg(g, std::get<Embedding3D>(res)), out_path);
  return 0;
}

int param_at(const std::vector<int>& params, size_t i, const char* family) {
  if (params.size() <= i)
    throw MalformedDocument(std::string(family) + ": missing integer parameter " +
                            std::to_string(i + 1));
  return params[i];
}

void no_params(const std::vector<int>& params, const std::string& family) {
  if (!params.empty())
    throw MalformedDocument(family + ": this generator takes no parameters");
}

int cmd_generate(const std::string& family, const std::vector<int>& params, bool with_faces,
                 const std::string& out_path) {
  auto emit_graph = [&](const CubicGraph& g) {
    emit(write_graph(g), out_path);
    return 0;
  };
  auto emit_map = [&](const CubicGraph& g, const FaceSet& fs,
                      const std::optional<std::vector<Axis>>& colors) {
    if (!with_faces) return emit_graph(g);
    if (colors)
      emit(write_surface(ColoredSurface(g, fs, *colors)), out_path);
    else
      emit(write_map(g, fs), out_path);
    return 0;
  };

  if (family == "ccc") {
    GeneratedMap m = ccc(param_at(params, 0, "ccc"));
    return emit_map(m.graph, m.faces, m.colors);
  }
  if (family == "grid-mod") {
    GridEmbedding ge = grid_mod(param_at(params, 0, "grid-mod"));
    if (!with_faces) return emit_graph(ge.graph);
    PartitionCycles pc = faces_from_embedding(ge.graph, ge.coords);
    return emit_map(ge.graph, pc.faces, pc.colors);
  }
  if (family == "hex-torus") {
    GeneratedMap m =
        hex_rhombus_torus(param_at(params, 0, "hex-torus"), param_at(params, 1, "hex-torus"));
    return emit_map(m.graph, m.faces, m.colors);
  }
  if (family == "prism") {
    CubicGraph g = prism(param_at(params, 0, "prism"));
    if (!with_faces) return emit_graph(g);
    auto res = planar_recognize(g);
    if (const auto* fail = std::get_if<RecognitionFailure>(&res))
      return print_rejection(fail->reason, fail->detail);
    emit(write_surface(std::get<ColoredSurface>(res)), out_path);
    return 0;
  }
  if (family == "ambiguous-torus") {
    AmbiguousTorus at = ambiguous_torus(param_at(params, 0, "ambiguous-torus"));
    return emit_map(at.graph, at.faces, at.colors);
  }
  no_params(params, family);
  if (with_faces) {
    BuiltinMap bm = builtin_map(family);  // throws UnknownName for graph-only builtins
    emit(write_map(bm.graph, bm.faces), out_path);
    return 0;
  }
  return emit_graph(builtin(family));
}

json cover_json(const CoverResult& cover, const char* mode) {
  json j;
  j["format"] = "xyz.cover/1";
  j["mode"] = mode;
  if (cover.colors)
    j["cover"] =
        json::parse(write_surface(ColoredSurface(cover.graph, cover.faces, *cover.colors)));
  else
    j["cover"] = json::parse(write_map(cover.graph, cover.faces));
  j["projection"] = cover.projection;
  j["ply"] = cover.ply;
  j["components"] = cover.components;
  return j;
}

int cmd_cover(const std::string& path, const std::string& mode, int k, std::uint64_t seed,
              int cap, int retries, const std::string& out_path) {
  MapDocument md = parse_map(read_text_file(path));
  CoverOptions opts;
  if (cap > 0) opts.edge_cap = cap;
  if (retries > 0) opts.retry_budget = retries;
  try {
    if (mode == "sixfold") {
      CoverResult c = sixfold_cover(md.graph, md.faces);
      emit(dump(cover_json(c, "sixfold")), out_path);
      return 0;
    }
    if (mode == "full") {
      CoverResult c = even_polyhedral_cover(md.graph, md.faces, opts);
      emit(dump(cover_json(c, "full")), out_path);
      return 0;
    }
    if (k < 1) throw MalformedDocument("cover: --mode random needs --k at least 1");
    ReducedCover rc = reduced_cover(md.graph, md.faces, k, seed, opts);
    if (!rc.cover) {
      json extra;
      extra["seed"] = rc.seed;
      extra["attempts"] = rc.attempts;
      return print_rejection("no-even-polyhedral-cover",
                             "random search exhausted its retry budget", extra);
    }
    json j = cover_json(*rc.cover, "random");
    j["k"] = k;
    j["seed"] = rc.seed;
    j["attempts"] = rc.attempts;
    emit(dump(j), out_path);
    return 0;
  } catch (const PreconditionViolated& e) {
    return print_rejection("precondition-violated", e.what());
  }
}

int cmd_classify(const std::string& path) {
  MapDocument md = parse_map(read_text_file(path));
  json j;
  try {
    TopologyClass tc = classify_topology(md.graph, md.faces);
    j["format"] = "xyz.topology/1";
    j["euler_characteristic"] = tc.euler_characteristic;
    j["orientable"] = tc.orientable;
    if (tc.orientable)
      j["genus"] = tc.genus;
    else
      j["crosscap"] = tc.crosscap;
  } catch (const SurfaceError& e) {
    return print_rejection("not-classifiable", e.what());
  }
  try {
    j["cover_case"] = classify_cover_case(md.graph, md.faces);
  } catch (const PreconditionViolated& e) {
    j["cover_case_error"] = e.what();
  }
  std::cout << dump(j);
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& out_path,
               const std::string& report) {
  json doc = json::parse(read_text_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer() || !doc.contains("edges") || !doc["edges"].is_array())
    throw MalformedDocument("reduce: input needs integer \"n\" and array \"edges\"");
  SimpleGraphInput h;
  h.n = doc["n"].get<int>();
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw MalformedDocument("reduce: each edge must be a pair of integers");
    h.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }

  bool want_sizes = false, want_genus = false;
  for (size_t start = 0; start <= report.size() && !report.empty();) {
    size_t comma = report.find(',', start);
    size_t end = comma == std::string::npos ? report.size() : comma;
    std::string item = report.substr(start, end - start);
    if (item == "sizes")
      want_sizes = true;
    else if (item == "genus-claim")
      want_genus = true;
    else
      throw MalformedDocument("reduce: unknown report item \"" + item + "\"");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!want_sizes && !want_genus) want_sizes = want_genus = true;

  Reduction r = reduce_3coloring(h);
  write_text_file(out_path, write_graph(r.graph));
  json j;
  j["format"] = "xyz.reduction/1";
  j["h_vertices"] = r.h_vertices;
  j["h_edges"] = r.h_edges;
  j["output"] = out_path;
  if (want_sizes) {
    j["vertex_gadget_size"] = r.vertex_gadget_size;
    j["edge_gadget_size"] = r.edge_gadget_size;
    j["total_size"] = r.total_size;
  }
  if (want_genus) j["genus_claim"] = r.genus_claim;
  std::cout << dump(j);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"xyz graphs: recognition, surfaces, drawings, covers, and reductions"};
  app.set_version_flag("--version", "xyz 1.0.0");
  app.require_subcommand(1);
  int code = 0;

  std::string in_path, out_path, override_path, report = "sizes,genus-claim";
  std::string family, mode;
  std::vector<int> params;
  bool all = false, planar_fast = true, with_faces = false;
  int threads = threads_default(), k = 0, cap = 0, retries = 0;
  std::uint64_t seed = 0;

  CLI::App* rec = app.add_subcommand("recognize", "Decide whether a cubic graph is an xyz graph");
  rec->add_option("graph", in_path, "graph JSON file")->required();
  rec->add_flag("--all", all, "enumerate every surface instead of the first");
  rec->add_flag("--planar-fast,!--no-planar-fast", planar_fast,
                "use the planar shortcut when the input is planar (default on)");
  rec->add_option("--threads", threads, "worker threads (default: XYZ_THREADS or 1)");
  rec->add_option("-o,--output", out_path, "also write the result to this file");
  rec->callback([&] { code = cmd_recognize(in_path, all, planar_fast, threads, out_path); });

  CLI::App* chk = app.add_subcommand("check-surface", "Validate a map as an xyz surface");
  chk->add_option("map", in_path, "map JSON file")->required();
  chk->callback([&] { code = cmd_check_surface(in_path); });

  CLI::App* emb = app.add_subcommand("embed", "Compute grid coordinates from a surface");
  emb->add_option("map", in_path, "map JSON file")->required();
  emb->add_option("--override", override_path, "face-coordinate override JSON");
  emb->add_option("-o,--output", out_path, "also write the result to this file");
  emb->callback([&] { code = cmd_embed(in_path, override_path, out_path); });

  CLI::App* met = app.add_subcommand("metrics", "Extents, volume, and crossings of the drawing");
  met->add_option("map", in_path, "map JSON file")->required();
  met->add_option("--override", override_path, "face-coordinate override JSON");
  met->callback([&] { code = cmd_metrics(in_path, override_path); });

  CLI::App* svg = app.add_subcommand("svg", "Render the drawing as SVG");
  svg->add_option("map", in_path, "map JSON file")->required();
  svg->add_option("--override", override_path, "face-coordinate override JSON");
  svg->add_option("-o,--output", out_path, "also write the SVG to this file");
  svg->callback([&] { code = cmd_svg(in_path, override_path, out_path); });

  CLI::App* gen = app.add_subcommand("generate", "Emit a named graph or family member");
  gen->add_option("family", family,
                  "ccc N | grid-mod K | hex-torus P Q | prism M | ambiguous-torus K | "
                  "a builtin name")
      ->required();
  gen->add_option("params", params, "integer parameters for the family");
  gen->add_flag("--with-faces", with_faces, "emit a map (faces included) when available");
  gen->add_option("-o,--output", out_path, "also write the result to this file");
  gen->callback([&] { code = cmd_generate(family, params, with_faces, out_path); });

  CLI::App* cov = app.add_subcommand("cover", "Build covering maps");
  cov->add_option("map", in_path, "map JSON file")->required();
  cov->add_option("--mode", mode, "sixfold | full | random")
      ->required()
      ->check(CLI::IsMember({"sixfold", "full", "random"}));
  cov->add_option("--k", k, "voltage bits for --mode random");
  cov->add_option("--seed", seed, "random label seed (default 0)");
  cov->add_option("--cap", cap, "edge-count cap for --mode full");
  cov->add_option("--retries", retries, "resampling budget for --mode random");
  cov->add_option("-o,--output", out_path, "also write the result to this file");
  cov->callback([&] { code = cmd_cover(in_path, mode, k, seed, cap, retries, out_path); });

  CLI::App* red = app.add_subcommand("reduce", "3-colorability to xyz-recognition reduction");
  red->add_option("graph", in_path, "simple graph JSON file")->required();
  red->add_option("-o,--output", out_path, "output graph JSON file")->required();
  red->add_option("--report", report, "comma list from {sizes, genus-claim}");
  red->callback([&] { code = cmd_reduce(in_path, out_path, report); });

  CLI::App* cls = app.add_subcommand("classify", "Topological type and cover case of a map");
  cls->add_option("map", in_path, "map JSON file")->required();
  cls->callback([&] { code = cmd_classify(in_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MalformedDocument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateVector& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotCubic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SelfLoop& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParallelEdge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SurfaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
