#include "xyz/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace xyz {

using nlohmann::json;

namespace {

json parse_document(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw MalformedDocument(std::string(what) + ": not valid JSON");
  if (!doc.is_object()) throw MalformedDocument(std::string(what) + ": not a JSON object");
  if (doc.contains("format")) {
    const json& f = doc["format"];
    if (!f.is_string() || f.get<std::string>().rfind("xyz.", 0) != 0)
      throw MalformedDocument(std::string(what) + ": unrecognized format tag");
  }
  return doc;
}

std::pair<VertexId, std::vector<Edge>> graph_fields(const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw MalformedDocument("graph: missing integer field \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw MalformedDocument("graph: missing array field \"edges\"");
  VertexId n = doc["n"].get<VertexId>();
  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw MalformedDocument("graph: each edge must be a pair of integers");
    edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>()});
  }
  return {n, std::move(edges)};
}

json graph_json(const CubicGraph& g) {
  json doc;
  doc["format"] = "xyz.graph/1";
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  doc["edges"] = std::move(edges);
  return doc;
}

json faces_json(const FaceSet& fs) {
  json faces = json::array();
  for (int f = 0; f < fs.face_count(); ++f) {
    json cyc = json::array();
    for (VertexId v : fs.face(f)) cyc.push_back(v);
    faces.push_back(std::move(cyc));
  }
  return faces;
}

}  // namespace

CubicGraph parse_graph(const std::string& text) {
  auto [n, edges] = graph_fields(parse_document(text, "graph"));
  return CubicGraph(n, edges);
}

std::string write_graph(const CubicGraph& g) { return graph_json(g).dump(2) + "\n"; }

MapDocument parse_map(const std::string& text) {
  json doc = parse_document(text, "map");
  auto [n, edges] = graph_fields(doc);
  CubicGraph g(n, edges);
  if (!doc.contains("faces") || !doc["faces"].is_array())
    throw MalformedDocument("map: missing array field \"faces\"");
  std::vector<std::vector<VertexId>> faces;
  for (const json& f : doc["faces"]) {
    if (!f.is_array()) throw MalformedDocument("map: each face must be a vertex array");
    std::vector<VertexId> cyc;
    for (const json& v : f) {
      if (!v.is_number_integer()) throw MalformedDocument("map: face vertices must be integers");
      cyc.push_back(v.get<VertexId>());
    }
    faces.push_back(std::move(cyc));
  }
  FaceSet fs(g, std::move(faces));
  std::optional<std::vector<Axis>> colors;
  if (doc.contains("colors")) {
    if (!doc["colors"].is_array() || doc["colors"].size() != static_cast<size_t>(fs.face_count()))
      throw MalformedDocument("surface: \"colors\" must list one axis per face");
    std::vector<Axis> cs;
    for (const json& c : doc["colors"]) {
      auto a = c.is_string() ? axis_from_name(c.get<std::string>()) : std::nullopt;
      if (!a) throw MalformedDocument("surface: colors must be \"x\", \"y\", or \"z\"");
      cs.push_back(*a);
    }
    colors = std::move(cs);
  }
  return MapDocument{std::move(g), std::move(fs), std::move(colors)};
}

std::string write_map(const CubicGraph& g, const FaceSet& fs) {
  json doc = graph_json(g);
  doc["format"] = "xyz.map/1";
  doc["faces"] = faces_json(fs);
  return doc.dump(2) + "\n";
}

std::string write_surface(const ColoredSurface& s) {
  json doc = graph_json(s.graph());
  doc["format"] = "xyz.surface/1";
  doc["faces"] = faces_json(s.faces());
  json colors = json::array();
  for (int f = 0; f < s.faces().face_count(); ++f) colors.push_back(axis_name(s.color(f)));
  doc["colors"] = std::move(colors);
  return doc.dump(2) + "\n";
}

Embedding3D parse_embedding(const std::string& text, VertexId expect_n) {
  json doc = parse_document(text, "embedding");
  if (!doc.contains("coords") || !doc["coords"].is_array())
    throw MalformedDocument("embedding: missing array field \"coords\"");
  if (doc["coords"].size() != static_cast<size_t>(expect_n))
    throw MalformedDocument("embedding: expected " + std::to_string(expect_n) +
                            " coordinate triples, got " + std::to_string(doc["coords"].size()));
  Embedding3D emb;
  emb.reserve(doc["coords"].size());
  for (const json& c : doc["coords"]) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() ||
        !c[1].is_number_integer() || !c[2].is_number_integer())
      throw MalformedDocument("embedding: coords must be integer triples");
    emb.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>(), c[2].get<std::int64_t>()});
  }
  return emb;
}

std::string write_embedding(const Embedding3D& emb) {
  json doc;
  doc["format"] = "xyz.embedding/1";
  json coords = json::array();
  for (const Coord& c : emb) coords.push_back(json::array({c[0], c[1], c[2]}));
  doc["coords"] = std::move(coords);
  return doc.dump(2) + "\n";
}

CoordOverride parse_override(const std::string& text) {
  json doc = parse_document(text, "override");
  if (!doc.contains("face_coords") || !doc["face_coords"].is_object())
    throw MalformedDocument("override: missing object field \"face_coords\"");
  const json& fc = doc["face_coords"];
  CoordOverride out;
  auto read_axis = [&](const char* key, std::vector<std::int64_t>& into) {
    if (!fc.contains(key) || !fc[key].is_array())
      throw MalformedDocument(std::string("override: face_coords needs array \"") + key + "\"");
    for (const json& v : fc[key]) {
      if (!v.is_number_integer())
        throw MalformedDocument("override: coordinates must be integers");
      into.push_back(v.get<std::int64_t>());
    }
  };
  read_axis("x", out.x);
  read_axis("y", out.y);
  read_axis("z", out.z);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedDocument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedDocument("cannot write file: " + path);
  out << content;
}

}  // namespace xyz
