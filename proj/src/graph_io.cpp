#include "matchstick/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace matchstick {

using nlohmann::ordered_json;

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }

  GraphFile gf;
  try {
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices"))
        gf.vertices.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    for (const auto& e : j.at("edges"))
      gf.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("lattice")) {
      std::vector<LatticePoint> lat;
      for (const auto& p : j.at("lattice"))
        lat.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
      gf.lattice = std::move(lat);
    }
    if (j.contains("tolerance")) gf.tolerance = j.at("tolerance").get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph file: ") + ex.what());
  }

  if (!gf.lattice && gf.vertices.empty())
    throw ParseError("graph file needs \"vertices\" or \"lattice\"");
  if (gf.lattice && !gf.vertices.empty() &&
      gf.lattice->size() != gf.vertices.size())
    throw ParseError("\"lattice\" and \"vertices\" lengths differ");
  return gf;
}

std::string graph_file_to_json(const GraphFile& gf) {
  ordered_json j;
  if (gf.lattice) {
    ordered_json lat = ordered_json::array();
    for (const LatticePoint p : *gf.lattice) lat.push_back({p.a, p.b});
    j["lattice"] = std::move(lat);
  } else {
    ordered_json vs = ordered_json::array();
    for (const auto& [x, y] : gf.vertices) vs.push_back({x, y});
    j["vertices"] = std::move(vs);
  }
  ordered_json es = ordered_json::array();
  for (const auto& [a, b] : gf.edges) es.push_back({a, b});
  j["edges"] = std::move(es);
  if (gf.tolerance) j["tolerance"] = *gf.tolerance;
  return j.dump(2) + "\n";
}

void save_graph_file(const GraphFile& gf, const std::string& path) {
  write_text_file(graph_file_to_json(gf), path);
}

EmbeddedGraph to_embedded(const GraphFile& gf) {
  EmbeddedGraph g;
  if (gf.lattice) {
    for (const LatticePoint p : *gf.lattice) g.vertices.push_back(lattice_to_cartesian(p));
  } else {
    for (const auto& [x, y] : gf.vertices) g.vertices.push_back({x, y, std::nullopt});
  }
  g.edges = gf.edges;
  try {
    check_structure(g);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  return g;
}

GraphFile lattice_graph_file(const std::vector<LatticePoint>& points,
                             const std::vector<std::pair<int, int>>& edges) {
  GraphFile gf;
  gf.lattice = points;
  gf.edges = edges;
  return gf;
}

namespace {

void append_num(std::string& out, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // normalize -0
  out += buf;
}

}  // namespace

std::string render_svg(const EmbeddedGraph& g, bool pennies) {
  constexpr double kPad = 0.6;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& v : g.vertices) {
    if (first) {
      min_x = max_x = v.x;
      min_y = max_y = v.y;
      first = false;
    }
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }

  // screen y = -plane y
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  append_num(s, min_x - kPad);
  s += " ";
  append_num(s, -max_y - kPad);
  s += " ";
  append_num(s, max_x - min_x + 2 * kPad);
  s += " ";
  append_num(s, max_y - min_y + 2 * kPad);
  s += "\">\n";

  if (pennies)
    for (const auto& v : g.vertices) {
      s += "  <circle cx=\"";
      append_num(s, v.x);
      s += "\" cy=\"";
      append_num(s, -v.y);
      s += "\" r=\"0.5\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.02\"/>\n";
    }

  for (const auto& [a, b] : g.edges) {
    s += "  <line x1=\"";
    append_num(s, g.vertices[a].x);
    s += "\" y1=\"";
    append_num(s, -g.vertices[a].y);
    s += "\" x2=\"";
    append_num(s, g.vertices[b].x);
    s += "\" y2=\"";
    append_num(s, -g.vertices[b].y);
    s += "\" stroke=\"black\" stroke-width=\"0.05\" stroke-linecap=\"round\"/>\n";
  }

  for (const auto& v : g.vertices) {
    s += "  <circle cx=\"";
    append_num(s, v.x);
    s += "\" cy=\"";
    append_num(s, -v.y);
    s += "\" r=\"0.04\" fill=\"black\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace matchstick
