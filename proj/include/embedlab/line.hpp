#pragma once

#include <cstddef>
#include <vector>

#include "embedlab/metric.hpp"

namespace embedlab {

// Embedding into the real line.  positions[i] is the image of point i of the
// source metric; the induced ordering is positions sorted ascending.
// Canonical form: min position = 0, all positions distinct.
struct LineEmbedding {
    std::vector<double> positions;

    // Point indices sorted by position (ascending).
    std::vector<std::size_t> ordering() const;

    // Shifts so that the minimum position is 0.
    void normalize();
};

struct OrderFeasibility {
    bool feasible = false;
    std::vector<double> positions;  // witness with min = 0 when feasible
};

// Decides whether positions x exist that realize the given ordering with
//   rho(a,b) <= |x_a - x_b| <= D * rho(a,b)  for all pairs.
// The constraints form a difference system; feasibility is negative-cycle
// detection (Bellman-Ford) on the constraint graph, and shortest-path
// potentials give a witness.  Feasibility is monotone in D.
OrderFeasibility order_feasibility(const FiniteMetric& m,
                                   const std::vector<std::size_t>& ordering, double d_budget);

struct LineOpt {
    LineEmbedding embedding;
    std::vector<std::size_t> ordering;
    double distortion = 1.0;
};

// Exact minimum-distortion line embedding by exhaustive search over the
// n!/2 orderings (reversals skipped), with the minimal feasible D per
// ordering found by bisection on [1, n*aspect_ratio] to relative tolerance
// 1e-6.  Ties between orderings resolve to the first in enumeration order.
// Errors: TooLarge for n > 10, TooFewPoints for n < 2.
LineOpt optimal_line_embedding_bruteforce(const FiniteMetric& m);

}  // namespace embedlab
