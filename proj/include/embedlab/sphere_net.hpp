#pragma once

#include <cstddef>
#include <vector>

#include "embedlab/errors.hpp"

namespace embedlab {

// Finite eps-dense net on the sphere of radius R in R^d (d = 2 or 3):
// every sphere point is within Euclidean distance eps of some net point.
struct SphereNet {
    std::size_t dim = 2;  // ambient dimension; the sphere is S^{dim-1}
    double radius = 1.0;
    double epsilon = 1.0;
    std::vector<double> points;  // row-major, size count*dim, all on the sphere

    std::size_t count() const { return dim == 0 ? 0 : points.size() / dim; }
    const double* point(std::size_t i) const { return points.data() + i * dim; }
};

// Builds the net.
//   d = 2: ceil(2*pi*R/eps) equally spaced points; the arc gap is <= eps, so
//          the chord gap is too.
//   d = 3: latitude-longitude grid with per-direction arc pitch <= eps, rings
//          listed south to north and points within a ring by longitude, so
//          the order is lexicographic in the angles.  Any sphere point is
//          within eps/2 of a ring along a meridian and within eps/2 of a net
//          point along that ring; the two moves are orthogonal, so the
//          geodesic gap is at most eps/sqrt(2) < eps.
// Cardinality is bounded by c_net * (R/eps)^(d-1) with c_net = 40 (the d = 3
// grid realizes roughly 4*pi*(R/eps)^2 + pi*R/eps).
// Errors: UnsupportedDimension unless d in {2, 3}; DegenerateParameters for
// nonpositive radius/eps or eps > 2R.
SphereNet epsilon_dense_sphere(std::size_t d, double radius, double eps);

}  // namespace embedlab
