#include "embedlab/line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace embedlab {

std::vector<std::size_t> LineEmbedding::ordering() const {
    std::vector<std::size_t> idx(positions.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [this](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });
    return idx;
}

void LineEmbedding::normalize() {
    if (positions.empty()) return;
    double lo = *std::min_element(positions.begin(), positions.end());
    for (double& p : positions) p -= lo;
}

OrderFeasibility order_feasibility(const FiniteMetric& m,
                                   const std::vector<std::size_t>& ordering, double d_budget) {
    const std::size_t n = m.size();
    if (ordering.size() != n)
        fail(ErrorCode::InvalidArgument, "ordering must be a permutation of the points");
    if (d_budget < 1.0) return {};

    // Difference constraints on positions y_r of the r-th point in the
    // ordering: for r < s,  rho <= y_s - y_r <= D*rho.  Encoded as edges
    // u -> v of weight c meaning y_v <= y_u + c, feasibility by Bellman-Ford
    // from a virtual source connected to every node with weight 0.
    std::vector<double> y(n, 0.0);
    bool changed = true;
    std::size_t round = 0;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = r + 1; s < n; ++s) {
                double rho = m.at(ordering[r], ordering[s]);
                double up = d_budget * rho;  // y_s <= y_r + up
                double lo = rho;             // y_r <= y_s - lo
                if (y[s] > y[r] + up) {
                    y[s] = y[r] + up;
                    changed = true;
                }
                if (y[r] > y[s] - lo) {
                    y[r] = y[s] - lo;
                    changed = true;
                }
            }
        if (++round > n + 2) return {};  // negative cycle: infeasible
    }

    OrderFeasibility out;
    out.feasible = true;
    out.positions.assign(n, 0.0);
    double lo = *std::min_element(y.begin(), y.end());
    for (std::size_t r = 0; r < n; ++r) out.positions[ordering[r]] = y[r] - lo;
    return out;
}

LineOpt optimal_line_embedding_bruteforce(const FiniteMetric& m) {
    const std::size_t n = m.size();
    if (n < 2) fail(ErrorCode::TooFewPoints, "line optimum needs at least two points");
    if (n > 10) fail(ErrorCode::TooLarge, "exhaustive search is limited to n <= 10");

    const double hi0 = static_cast<double>(n) * aspect_ratio(m);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    LineOpt best;
    best.distortion = std::numeric_limits<double>::infinity();
    do {
        if (perm.front() > perm.back()) continue;  // reversal duplicates
        // Skip orderings that cannot beat the incumbent.
        if (best.distortion < std::numeric_limits<double>::infinity() &&
            !order_feasibility(m, perm, best.distortion).feasible)
            continue;
        double lo = 1.0, hi = hi0;
        if (!order_feasibility(m, perm, hi).feasible) continue;
        for (int it = 0; it < 60 && (hi - lo) > 1e-6 * hi; ++it) {
            double mid = 0.5 * (lo + hi);
            if (order_feasibility(m, perm, mid).feasible)
                hi = mid;
            else
                lo = mid;
        }
        if (hi < best.distortion) {
            auto wit = order_feasibility(m, perm, hi);
            best.distortion = hi;
            best.ordering = perm;
            best.embedding.positions = wit.positions;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    best.embedding.normalize();
    return best;
}

}  // namespace embedlab
