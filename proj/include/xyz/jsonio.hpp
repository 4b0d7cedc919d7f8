#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xyz/embed.hpp"
#include "xyz/graph.hpp"
#include "xyz/surface.hpp"

namespace xyz {

// Documents carry a "format" tag ("xyz.graph/1", "xyz.map/1", "xyz.surface/1",
// "xyz.embedding/1").  Parsers accept documents without the tag and documents
// whose shape is a superset (a surface document parses fine as a graph).
// All writers emit keys in sorted order, so output is byte-stable.

CubicGraph parse_graph(const std::string& text);
std::string write_graph(const CubicGraph& g);

struct MapDocument {
  CubicGraph graph;
  FaceSet faces;
  std::optional<std::vector<Axis>> colors;
};

MapDocument parse_map(const std::string& text);
std::string write_map(const CubicGraph& g, const FaceSet& fs);
std::string write_surface(const ColoredSurface& s);

Embedding3D parse_embedding(const std::string& text, VertexId expect_n);
std::string write_embedding(const Embedding3D& emb);

CoordOverride parse_override(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace xyz
