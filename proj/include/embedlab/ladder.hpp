#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "embedlab/metric.hpp"
#include "embedlab/vec.hpp"

namespace embedlab {

// Weighted planar graph on ~11 sqrt(n) vertices whose shortest-path metric
// has aspect ratio Theta(n): a K4 with every edge subdivided into r = sqrt(n)
// unit edges, a pendant path of r unit edges at each branch vertex, and the
// bottom edge doubled into a ladder whose second rail runs parallel and is
// tied to the first by rungs of weight n^(-1/2) at every subdivision point.
//
// Vertex order: branch v0 (center), v1, v2 (bottom corners), v3 (top);
// then subdivision internals per K4 edge; then pendant paths; then the
// second rail b_0..b_r.  A planar straight-line drawing is stored and
// checked: no two edges without a shared endpoint cross.
struct PlanarLadderSpace {
    std::size_t n = 0;
    std::size_t r = 0;            // sqrt(n)
    double rung_weight = 0.0;     // n^(-1/2), exact weight of every rung
    std::array<std::size_t, 4> branch{};   // indices of v0..v3
    std::vector<std::size_t> rail_a;       // bottom subdivision, v1 .. v2
    std::vector<std::size_t> rail_b;       // b_0 .. b_r
    // pendant[v][j-1] = j-th vertex of the path hanging off branch vertex v
    std::array<std::vector<std::size_t>, 4> pendant;
    std::vector<P2> drawing;               // one position per vertex
    std::vector<WeightedEdge> edges;
    FiniteMetric metric;                   // shortest-path closure
};

// Builds the graph and its metric.  Errors: BadSize unless n is a perfect
// square with sqrt(n) >= 4.
PlanarLadderSpace planar_ladder_space(std::size_t n);

}  // namespace embedlab
