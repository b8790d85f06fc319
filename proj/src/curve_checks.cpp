#include "embedlab/curve_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "embedlab/errors.hpp"
#include "embedlab/gridhash.hpp"
#include "embedlab/rng.hpp"

namespace embedlab {

namespace {

// Point of the PL curve at parameter angle theta: linear interpolation
// between the images of the two net points whose arcs bracket theta.
P2 pl_at(const std::vector<P2>& images, double theta) {
    const std::size_t m = images.size();
    double turns = theta / (2.0 * std::numbers::pi);
    turns -= std::floor(turns);
    double u = turns * static_cast<double>(m);
    std::size_t i = std::min(static_cast<std::size_t>(u), m - 1);
    double t = u - static_cast<double>(i);
    const P2& a = images[i];
    const P2& b = images[(i + 1) % m];
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace

SlackReport slack_check(const SphereNet& net, const std::vector<P2>& images, double delta,
                        std::size_t samples, std::uint64_t seed) {
    if (net.dim != 2) fail(ErrorCode::UnsupportedDimension, "slack check runs on circle nets");
    if (images.size() != net.count())
        fail(ErrorCode::InvalidArgument, "one image per net point required");
    if (delta < 0.0) fail(ErrorCode::InvalidArgument, "delta must be nonnegative");

    const double r = net.radius;
    const std::size_t m = net.count();
    PlExtension ext = pl_extension(net, images);

    SlackReport rep;
    rep.allowance =
        (1.0 + ext.pl_lipschitz) * r * (1.0 - std::cos(std::numbers::pi / static_cast<double>(m)));
    rep.worst_slack = std::numeric_limits<double>::infinity();

    Rng rng = Rng::stream(seed, "slack", 0);
    for (std::size_t s = 0; s < samples; ++s) {
        double ta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        double tb = rng.uniform(0.0, 2.0 * std::numbers::pi);
        P2 xa{r * std::cos(ta), r * std::sin(ta)};
        P2 xb{r * std::cos(tb), r * std::sin(tb)};
        double slack = dist(pl_at(images, ta), pl_at(images, tb)) - dist(xa, xb);
        if (slack < rep.worst_slack) {
            rep.worst_slack = slack;
            rep.theta_a = ta;
            rep.theta_b = tb;
        }
    }
    rep.pass = rep.worst_slack >= -delta - rep.allowance;
    return rep;
}

NarrowHolesReport narrow_holes_check(const ClosedPolyline& curve, double d_lip, double delta,
                                     double h) {
    NarrowHolesReport rep;
    rep.holes = compute_holes(curve, h);
    rep.threshold = 4.0 * d_lip * delta + 2.0 * rep.holes.grid_pitch;
    for (const Hole& hole : rep.holes.holes)
        if (hole.inradius_estimate >= rep.threshold) rep.big_holes += 1;
    rep.pass = rep.big_holes <= 1;
    return rep;
}

std::vector<std::size_t> nesting_order(const std::vector<ClosedPolyline>& curves, double h) {
    const std::size_t n = curves.size();
    if (n == 0) return {};

    std::vector<std::vector<double>> flat(n);
    for (std::size_t i = 0; i < n; ++i) {
        flat[i].reserve(2 * curves[i].vertices.size());
        for (const P2& v : curves[i].vertices) {
            flat[i].push_back(v.x);
            flat[i].push_back(v.y);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (set_min_distance(flat[i], flat[j], 2) <= 2.0 * h)
                fail(ErrorCode::CurvesIntersect,
                     "curves closer than the 2h disjointness margin");

    // contains[i][j]: curve j's representative vertex lies inside curve i.
    std::vector<std::vector<char>> contains(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                contains[i][j] = point_in_polygon(curves[j].vertices.front(), curves[i].vertices);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (contains[i][j] == contains[j][i])
                fail(ErrorCode::NotTotallyOrdered,
                     "curve pair is unordered by containment");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (i != j && j != k && i != k && contains[i][j] && contains[j][k] &&
                    !contains[i][k])
                    fail(ErrorCode::NotTotallyOrdered, "containment is not transitive");

    // In a total transitive order the containment counts are all distinct.
    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && contains[i][j]) count[i] += 1;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return count[a] > count[b]; });
    for (std::size_t r = 0; r < n; ++r)
        if (count[order[r]] != n - 1 - r)
            fail(ErrorCode::NotTotallyOrdered, "containment counts are not a chain");
    return order;
}

}  // namespace embedlab
