#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "embedlab/holes.hpp"
#include "embedlab/polyline.hpp"
#include "embedlab/sphere_net.hpp"
#include "embedlab/vec.hpp"

namespace embedlab {

struct SlackReport {
    bool pass = false;
    double worst_slack = 0.0;  // min over sampled pairs of |g(x)-g(y)| - |x-y|
    double allowance = 0.0;    // chord-error budget of the piecewise-linear curve
    double theta_a = 0.0;      // parameters of the worst pair on the domain circle
    double theta_b = 0.0;
};

// Near-noncontraction check for the PL extension of a circle-net map:
// samples point pairs uniformly on the parameter circle (seeded) and tests
// |g(x) - g(y)| >= |x - y| - delta, where x, y are the domain circle points
// and g interpolates the images along the net order.  Passing tolerates the
// PL chord error: worst slack >= -delta - allowance with
// allowance = (1 + L) * sagitta, L the per-edge image/domain chord ratio and
// sagitta = R(1 - cos(pi/m)) the circle-to-polygon gap.
SlackReport slack_check(const SphereNet& net, const std::vector<P2>& images, double delta,
                        std::size_t samples, std::uint64_t seed);

struct NarrowHolesReport {
    bool pass = false;
    double threshold = 0.0;  // 4 * D * delta + 2h
    std::size_t big_holes = 0;
    HoleReport holes;
};

// Passes when at most one complement component is wide: inradius at least
// 4 * d_lip * delta + 2h.  Callers certify (d_lip, delta) via slack_check
// and the measured Lipschitz constant.
NarrowHolesReport narrow_holes_check(const ClosedPolyline& curve, double d_lip, double delta,
                                     double h = 0.0);

// Total nesting order of pairwise disjoint closed curves, outermost first.
// Containment is decided by the even-odd winding test of one representative
// vertex per curve against every other curve; the relation must be total
// and transitive (error NotTotallyOrdered).  Disjointness margin: minimum
// pairwise vertex-set distance must exceed 2h (error CurvesIntersect).
std::vector<std::size_t> nesting_order(const std::vector<ClosedPolyline>& curves, double h);

}  // namespace embedlab
