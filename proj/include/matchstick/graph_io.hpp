#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchstick/planegraph.hpp"

namespace matchstick {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// On-disk graph description. When `lattice` is present it overrides
// `vertices`, so exact constructions survive serialization untouched.
struct GraphFile {
  std::vector<std::pair<double, double>> vertices;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<LatticePoint>> lattice;
  std::optional<double> tolerance;
};

GraphFile load_graph_file(const std::string& path);       // throws ParseError
std::string graph_file_to_json(const GraphFile& gf);      // stable field order
void save_graph_file(const GraphFile& gf, const std::string& path);

EmbeddedGraph to_embedded(const GraphFile& gf);           // throws ParseError
GraphFile lattice_graph_file(const std::vector<LatticePoint>& points,
                             const std::vector<std::pair<int, int>>& edges);

// SVG 1.1 drawing: unit segments with stroke width 0.05, viewport padded by
// 0.6 units, y axis flipped for screen coordinates; optionally the touching
// circles of radius 1/2 around each vertex.
std::string render_svg(const EmbeddedGraph& g, bool pennies = false);
void write_text_file(const std::string& text, const std::string& path);

}  // namespace matchstick
