#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "embedlab/metric.hpp"
#include "embedlab/vec.hpp"

namespace embedlab {

// Role of a point in the K33 construction: strip points carry the special
// rectangle-configuration distances, web points are ordinary edge samples.
enum class StripRole { None, P, Q };

// Metric built on a drawing of K_{3,3}: n sample points distributed over the
// nine edges, with Euclidean drawing distances everywhere except between the
// two strip runs p_1..p_m and q_1..q_m, whose cross distances are taken from
// a rectangle configuration of height w = c1 sqrt(eps) / k (p_i at (i s, w),
// q_j at (j s, 0), spacing s = 1/n).
//
// Drawing layout (published constants, all scale-free in n):
//   - strip: p_i = (i s, h0), q_j = (j s, 0) with h0 = min(s, w) / 2; both
//     runs are parallel horizontal segments.  Collapsing the strip to height
//     h0 < w keeps every drawing p-q distance at most the rectangle
//     distance, which makes the hybrid metric satisfy the triangle
//     inequality, forces identity-drawing distortion >= w / h0 >= w / s,
//     and leaves the sample polylines crossing-free.
//   - web: vertex columns at strip_center + {-0.24, 0, +0.24}; a-row at
//     y = 0.45, b-row at y = 0.30 (vertices are drawing anchors only, not
//     metric points).  The n - 2m ordinary samples sit in runs of spacing s
//     centered at 75% of the way from a to b on each of the seven ordinary
//     edges.
struct K33Space {
    std::size_t n = 0;
    std::size_t k = 0;
    double eps = 0.0;
    double c1 = 0.25;
    double w = 0.0;   // rectangle height, c1 * sqrt(eps) / k
    double s = 0.0;   // sample spacing, 1/n
    double h0 = 0.0;  // collapsed strip height in the drawing
    std::size_t m = 0;

    std::vector<P2> drawing;                 // one position per metric point
    std::vector<std::size_t> edge_of;        // K33 edge id 0..8 per point
    std::vector<std::size_t> rank_on_edge;   // position along the edge
    std::vector<StripRole> role;             // strip membership per point
    std::vector<std::size_t> strip_index;    // 1..m for strip points, else 0
    std::array<P2, 3> a_vertex, b_vertex;    // drawing anchors
    FiniteMetric metric;
};

// Endpoints (a index, b index) of K33 edge ids 0..8; ids 0 and 1 are the
// strip edges (a0, b0) and (a1, b1).
std::pair<std::size_t, std::size_t> k33_edge_ends(std::size_t edge_id);

// Builds the space.  Preconditions (error ParameterRangeViolation):
// 1/sqrt(eps) <= k <= sqrt(eps) * n, floor(n/6) >= 4, and w <= 0.05 so the
// strip fits the fixed drawing frame.  The metric is validated before
// return.
K33Space k33_space(std::size_t n, std::size_t k, double eps, double c1 = 0.25);

// The drawing itself read as an embedding (dim 2, points in metric order).
EuclideanEmbedding identity_drawing_embedding(const K33Space& s);

// Near-isometric plane embedding of a subset of at most k points, rows in
// subset order.  Requires a gap: a nonempty run of strip indices hit by no
// subset point, through which the strip can open.  Present p points lift to
// height +w/2 and q points drop to -w/2 about the strip midline so all
// rectangle distances are realized exactly; every other point keeps its
// drawing position.  Errors: ParameterRangeViolation when |subset| > k,
// NoGapFound when every strip index is occupied.
EuclideanEmbedding k33_subspace_embedding(const K33Space& s,
                                          const std::vector<std::size_t>& subset);

// Distortion lower bound from crossings: joins consecutive images along
// each K33 edge by segments; for every proper crossing between polylines of
// vertex-disjoint edges, on segments (x, y) and (x', y'), records
// rho(x,x') / (rho(x,y) + rho(x',y')) and returns the maximum over
// crossings (0 when none).  Sound for any embedding e of all points: after
// normalizing e to noncontracting,
// rho(x,x') <= |e(x)-e(x')| <= |e(x)-e(y)| + |e(x')-e(y')|
//           <= D (rho(x,y) + rho(x',y')).
// Invariant under uniform scaling of e.  Errors: IncompleteEmbedding
// unless e covers every point, UnsupportedDimension unless e is planar.
double crossing_certificate(const K33Space& s, const EuclideanEmbedding& e);

}  // namespace embedlab
