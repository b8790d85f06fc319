#pragma once

#include <cstddef>
#include <vector>

#include "embedlab/polyline.hpp"
#include "embedlab/vec.hpp"

namespace embedlab {

struct Hole {
    std::size_t cell_count = 0;
    double inradius_estimate = 0.0;  // max distance-transform value over the hole, +-2h
    P2 representative_point{0.0, 0.0};  // center of the hole's deepest cell
};

// Bounded complement components of a closed curve, found on a grid of pitch
// h.  Component 0 is the unbounded one; holes are listed in scan order.
struct HoleReport {
    double grid_pitch = 0.0;
    std::vector<Hole> holes;
    std::size_t unbounded_component_id = 0;
};

// Rasterizes the curve (a cell is boundary when its center lies within the
// cell circumradius of some segment, a superset of the cells the curve
// touches), flood-fills the complement from outside the bounding box with
// 4-connectivity, and measures each bounded component with an exact
// Euclidean distance transform to the boundary cells.  h <= 0 selects the
// default diameter/512.  Errors: DegenerateCurve when the curve fits inside
// one cell, InvalidArgument when h > diameter/16, TooLarge when the grid
// would exceed the cell budget.
HoleReport compute_holes(const ClosedPolyline& curve, double h = 0.0);

// Flood-fill side of the containment cross-check: +1 when p's cell lies in
// a bounded complement component, -1 when in the unbounded one, 0 when p
// falls on a boundary cell.  Uses the same grid as compute_holes.
int flood_contains(const ClosedPolyline& curve, double h, P2 p);

}  // namespace embedlab
