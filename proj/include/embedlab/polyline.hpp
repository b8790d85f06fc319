#pragma once

#include <cstddef>
#include <vector>

#include "embedlab/errors.hpp"
#include "embedlab/sphere_net.hpp"
#include "embedlab/vec.hpp"

namespace embedlab {

// Closed curve in the plane given by its vertex cycle (the closing edge
// last -> first is implicit).  At least three vertices, no consecutive
// duplicates; repeated non-adjacent vertices are allowed (the curve may
// self-intersect).
struct ClosedPolyline {
    std::vector<P2> vertices;

    double diameter() const;
};

ClosedPolyline make_closed_polyline(std::vector<P2> vertices);

struct PlExtension {
    ClosedPolyline curve;
    // Max per-edge ratio |image chord| / |domain chord|.  For a discrete map
    // that is L-Lipschitz on the net this never exceeds L, and linear
    // interpolation within an edge cannot exceed the edge's own ratio.
    double pl_lipschitz = 0.0;
};

// Piecewise-linear extension of a map defined on a circle net: images are
// connected by segments in the net's circular order.  The net must be
// 2-dimensional with one image per net point.
PlExtension pl_extension(const SphereNet& net, const std::vector<P2>& images);

// Even-odd containment test by ray crossing with the half-open vertex rule
// (a vertex exactly on the ray counts for exactly one of its two edges),
// which resolves vertex-through-ray ties deterministically.
bool point_in_polygon(P2 p, const std::vector<P2>& polygon);

}  // namespace embedlab
