#include "embedlab/extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "embedlab/errors.hpp"
#include "embedlab/gridhash.hpp"
#include "embedlab/polyline.hpp"

namespace embedlab {

namespace {

// Index of the lexicographically smallest (x1, x2) vertex of a flat point set.
std::size_t min_x1_vertex(const std::vector<double>& pts, std::size_t dim) {
    std::size_t best = 0;
    for (std::size_t i = 1, n = pts.size() / dim; i < n; ++i) {
        double x = pts[i * dim], bx = pts[best * dim];
        if (x < bx) {
            best = i;
        } else if (x == bx && dim >= 2 && pts[i * dim + 1] < pts[best * dim + 1]) {
            best = i;
        }
    }
    return best;
}

std::vector<P2> as_polygon(const std::vector<double>& pts) {
    std::vector<P2> poly(pts.size() / 2);
    for (std::size_t i = 0; i < poly.size(); ++i) poly[i] = {pts[2 * i], pts[2 * i + 1]};
    return poly;
}

}  // namespace

OuterVerdict nesting_comparator(const std::vector<double>& layer_a,
                                const std::vector<double>& layer_b, std::size_t dim) {
    if (dim < 2) fail(ErrorCode::UnsupportedDimension, "nesting comparator needs dim >= 2");
    if (layer_a.size() < dim || layer_b.size() < dim)
        fail(ErrorCode::TooFewPoints, "empty layer in nesting comparator");

    std::size_t ia = min_x1_vertex(layer_a, dim);
    std::size_t ib = min_x1_vertex(layer_b, dim);
    double ax = layer_a[ia * dim], bx = layer_b[ib * dim];
    double ay = dim >= 2 ? layer_a[ia * dim + 1] : 0.0;
    double by = dim >= 2 ? layer_b[ib * dim + 1] : 0.0;
    // Union minimum lives in the layer with the smaller key; exact ties go to
    // the first layer.
    OuterVerdict verdict = OuterVerdict::AOuter;
    if (bx < ax || (bx == ax && by < ay)) verdict = OuterVerdict::BOuter;

    if (dim == 2) {
        std::vector<P2> pa = as_polygon(layer_a);
        std::vector<P2> pb = as_polygon(layer_b);
        const std::vector<P2>& outer = verdict == OuterVerdict::AOuter ? pa : pb;
        const std::vector<P2>& inner = verdict == OuterVerdict::AOuter ? pb : pa;
        // The inner curve must sit inside the outer one and not conversely;
        // one representative vertex per curve decides both directions.
        bool inner_inside = point_in_polygon(inner.front(), outer);
        bool outer_inside = point_in_polygon(outer.front(), inner);
        if (!inner_inside || outer_inside)
            fail(ErrorCode::NotNested,
                 "layer containment contradicts the minimum-x1 comparator");
    }
    return verdict;
}

ExtractResult extract_line_embedding(const EuclideanEmbedding& g, const ProductSpace& p,
                                     double d_max_hint) {
    const std::size_t n = p.base().size();
    const std::size_t m = p.net().count();
    const std::size_t dim = g.dim;
    if (g.size() != p.size())
        fail(ErrorCode::InvalidArgument, "embedding size does not match the product space");
    if (dim != p.net().dim)
        fail(ErrorCode::InvalidArgument, "embedding dimension does not match the net");

    ExtractResult out;
    out.gap_error_bound = 2.0 * d_max_hint * p.net().epsilon;
    if (n == 1) {
        out.line.positions = {0.0};
        out.nesting.order = {0};
        out.contraction_scale = 1.0;
        return out;
    }

    // Slice the flat embedding into per-base-point layers.
    std::vector<std::vector<double>> layers(n);
    for (std::size_t a = 0; a < n; ++a) {
        layers[a].resize(m * dim);
        for (std::size_t v = 0; v < m; ++v) {
            std::size_t src = p.pair_index(a, v) * dim;
            for (std::size_t k = 0; k < dim; ++k) layers[a][v * dim + k] = g.coords[src + k];
        }
    }

    // Normalize g to noncontracting: scale by the measured contraction
    // alpha = max rho / |g_i - g_j|.  Scanning all pairs is quadratic in the
    // product size, so large products use a fixed deterministic pair family:
    // every base pair at strided shared net points (the radial ratio), plus
    // strided neighbor and near-antipodal pairs within each layer.
    double alpha = 0.0;
    auto img_dist = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            double d = g.coords[i * dim + k] - g.coords[j * dim + k];
            s += d * d;
        }
        return std::sqrt(s);
    };
    auto eat_pair = [&](std::size_t i, std::size_t j) {
        double rho = p.dist(i, j);
        double dg = img_dist(i, j);
        if (dg <= 0.0)
            fail(ErrorCode::NonInjectiveImage, "coincident image points in extraction");
        alpha = std::max(alpha, rho / dg);
    };
    if (p.size() <= 4096) {
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) eat_pair(i, j);
    } else {
        std::size_t samples = std::min<std::size_t>(m, 4096);
        for (std::size_t s = 0; s < samples; ++s) {
            std::size_t v = s * m / samples;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b)
                    eat_pair(p.pair_index(a, v), p.pair_index(b, v));
                eat_pair(p.pair_index(a, v), p.pair_index(a, (v + 1) % m));
                eat_pair(p.pair_index(a, v), p.pair_index(a, (v + m / 2) % m));
            }
        }
    }
    out.contraction_scale = alpha;

    // Outermost first: a strictly enclosing curve owns the minimum-x1 point
    // of the union, so sorting per-layer minimum keys ascending is the
    // comparator's total order.  Adjacent pairs are then re-verified, which
    // for dim 2 runs the containment cross-check.
    std::vector<std::size_t> order(n);
    for (std::size_t a = 0; a < n; ++a) order[a] = a;
    std::vector<std::pair<double, double>> keys(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t i = min_x1_vertex(layers[a], dim);
        keys[a] = {layers[a][i * dim], dim >= 2 ? layers[a][i * dim + 1] : 0.0};
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (std::size_t r = 0; r + 1 < n; ++r) {
        OuterVerdict v = nesting_comparator(layers[order[r]], layers[order[r + 1]], dim);
        if (v != OuterVerdict::AOuter)
            fail(ErrorCode::NotNested, "layer order is not consistent under the comparator");
    }
    out.nesting.order = order;

    // delta_i = distance between consecutive image layers as finite sets.
    // Positions accumulate from the innermost layer outward: the innermost
    // gets 0, each step outward adds its gap, so a round trip through
    // forward_embedding reproduces the source ordering (larger value =
    // farther out), not its reverse.  All at the normalized scale.
    out.nesting.gaps.resize(n - 1);
    out.line.positions.assign(n, 0.0);
    for (std::size_t r = 0; r + 1 < n; ++r)
        out.nesting.gaps[r] =
            alpha * set_min_distance(layers[order[r]], layers[order[r + 1]], dim);
    double acc = 0.0;
    for (std::size_t r = n - 1; r-- > 0;) {
        acc += out.nesting.gaps[r];
        out.line.positions[order[r]] = acc;
    }
    return out;
}

}  // namespace embedlab
