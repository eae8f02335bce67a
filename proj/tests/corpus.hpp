#pragma once

#include <random>
#include <vector>

#include "matchstick/construct.hpp"
#include "matchstick/planegraph.hpp"

// Shared fixtures and generators for the unit and acceptance suites.
namespace corpus {

using matchstick::EmbeddedGraph;
using matchstick::LatticePoint;
using matchstick::MatchstickGraph;

MatchstickGraph unit_triangle();
MatchstickGraph rhombus();        // two triangles sharing an edge
MatchstickGraph hexagon_cycle();  // plain 6-cycle, one hexagonal face
MatchstickGraph wheel7();         // hexagon with center, 7 vertices 12 edges
MatchstickGraph bowtie();         // two triangles sharing one vertex
MatchstickGraph path3();          // two collinear edges

EmbeddedGraph square_with_diagonals();  // invalid: crossing non-unit diagonals

// Connected induced penny subgraph grown by random adjacent steps.
std::vector<LatticePoint> random_connected_points(std::mt19937& rng, int target);
MatchstickGraph random_connected_graph(std::mt19937& rng, int target);

// Edge-glued blob of unit triangles; induced penny graph on its vertices.
// Nearly always 2-connected.
MatchstickGraph random_triangle_blob(std::mt19937& rng, int triangles);

}  // namespace corpus
