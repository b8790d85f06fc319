#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "embedlab/k33.hpp"
#include "embedlab/ladder.hpp"
#include "embedlab/metric.hpp"
#include "embedlab/polyline.hpp"

namespace embedlab {

// All emitters return a complete SVG document with a fixed element order and
// 6-decimal coordinates, so identical inputs give identical bytes.  The
// viewBox is the drawing's bounding box padded by 5% per side; the y axis is
// flipped at emission time so geometry reads with y growing upward.

// Closed curves with their interiors shaded (nested interiors shade darker
// by overlay) and the nesting order annotated 1..n outermost-first at each
// curve's first vertex.  pitch <= 0 selects the default disjointness margin.
std::string svg_curves_and_holes(const std::vector<ClosedPolyline>& curves,
                                 double pitch = 0.0);

// Planar point cloud, optionally with polyline chains drawn through listed
// point indices: closed chains (layer curves) and open chains (paths).
std::string svg_embedding2d(const EuclideanEmbedding& e,
                            const std::vector<std::vector<std::size_t>>& closed_chains = {},
                            const std::vector<std::vector<std::size_t>>& open_chains = {});

// The K33 drawing: edge anchor segments, sample points colored by role
// (strip p, strip q, web), and the collapsed strip marked.
std::string svg_k33_drawing(const K33Space& s);

// The ladder graph drawing: unit edges solid, rungs doubled, vertices as
// dots.
std::string svg_ladder_graph(const PlanarLadderSpace& s);

}  // namespace embedlab
