#pragma once

#include <cstddef>
#include <vector>

#include "embedlab/line.hpp"
#include "embedlab/metric.hpp"
#include "embedlab/product.hpp"

namespace embedlab {

enum class OuterVerdict { AOuter, BOuter };

// Decides which of two layer point sets is the outer one: the set owning the
// point of minimum x1 over the union (ties broken by x2, then by giving the
// verdict to A).  In the plane the verdict is cross-checked by winding-number
// containment of one representative vertex per curve, reading each layer as
// a closed polyline in its stored vertex order; a contradiction raises
// NotNested.  Layers of three or more dimensions skip the polygon check.
OuterVerdict nesting_comparator(const std::vector<double>& layer_a,
                                const std::vector<double>& layer_b, std::size_t dim);

// Nesting structure of the image layers: base-point indices outermost first
// plus the measured gap between consecutive layers.
struct NestingOrder {
    std::vector<std::size_t> order;
    std::vector<double> gaps;
};

struct ExtractResult {
    LineEmbedding line;       // positions per base point, innermost layer at 0
    NestingOrder nesting;
    double contraction_scale = 1.0;  // factor applied to make g noncontracting
    double gap_error_bound = 0.0;    // finite-net gap approximation error, 2*D_max*eps
};

// Recovers a line embedding of the base space from an embedding g of the
// product: slices g into layers, orders them by the nesting comparator,
// measures consecutive layer distances delta_i, and accumulates
// f(a_i) = sum_{j<i} delta_j.  g is first rescaled to noncontracting by the
// measured contraction; for products too large to scan all pairs the
// contraction is measured on the deterministic family of same-net-point and
// within-layer pairs.  Errors: NotNested when the comparator cross-check
// fails.
ExtractResult extract_line_embedding(const EuclideanEmbedding& g, const ProductSpace& p,
                                     double d_max_hint = 1.0);

}  // namespace embedlab
