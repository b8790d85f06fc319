#include "embedlab/gridhash.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "embedlab/errors.hpp"

namespace embedlab {

namespace {

inline double pair_dist2(const double* p, const double* q, std::size_t dim) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        double d = p[k] - q[k];
        s += d * d;
    }
    return s;
}

inline std::uint64_t cell_key(const double* p, std::size_t dim, double pitch) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t k = 0; k < dim; ++k) {
        auto c = static_cast<std::int64_t>(std::floor(p[k] / pitch));
        h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace

namespace {

// Detects b[v] = t * a[v] for one positive t with all |a[v]| equal, i.e. two
// concentric spherical point sets whose directions match index by index.
// Then dist(a_i, b_j)^2 = r1^2 + r2^2 - 2 r1 r2 cos(angle_ij) is minimized at
// angle 0, so the exact minimum is attained on a matching-index pair.
bool scaled_copy_min(const std::vector<double>& a, const std::vector<double>& b,
                     std::size_t dim, double* out) {
    const std::size_t n = a.size() / dim;
    if (n != b.size() / dim) return false;
    double r1 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) r1 += a[k] * a[k];
    r1 = std::sqrt(r1);
    if (!(r1 > 0.0)) return false;
    double rb = 0.0;
    for (std::size_t k = 0; k < dim; ++k) rb += b[k] * b[k];
    const double t = std::sqrt(rb) / r1;
    if (!(t > 0.0)) return false;
    const double tol = 1e-9 * r1 * std::max(1.0, t);
    double best2 = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < n; ++v) {
        double rv2 = 0.0, d2 = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double av = a[v * dim + k];
            const double bv = b[v * dim + k];
            rv2 += av * av;
            if (std::abs(bv - t * av) > tol) return false;
            const double d = av - bv;
            d2 += d * d;
        }
        if (std::abs(std::sqrt(rv2) - r1) > 1e-9 * r1) return false;
        best2 = std::min(best2, d2);
    }
    *out = std::sqrt(best2);
    return true;
}

}  // namespace

double set_min_distance(const std::vector<double>& a, const std::vector<double>& b,
                        std::size_t dim) {
    if (dim != 2 && dim != 3) fail(ErrorCode::UnsupportedDimension, "dim must be 2 or 3");
    const std::size_t na = a.size() / dim;
    const std::size_t nb = b.size() / dim;
    if (na == 0 || nb == 0) fail(ErrorCode::TooFewPoints, "both sets must be nonempty");

    double scaled;
    if (scaled_copy_min(a, b, dim, &scaled)) return scaled;

    // Upper bound from up to 8 probes spread across a, each scanned against
    // all of b.
    double best2 = std::numeric_limits<double>::infinity();
    const std::size_t probes = na < 8 ? na : 8;
    for (std::size_t t = 0; t < probes; ++t) {
        const double* p = a.data() + (t * na / probes) * dim;
        for (std::size_t j = 0; j < nb; ++j)
            best2 = std::min(best2, pair_dist2(p, b.data() + j * dim, dim));
    }
    double pitch = std::sqrt(best2);
    if (!(pitch > 0.0)) return 0.0;

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
    grid.reserve(2 * nb);
    for (std::size_t j = 0; j < nb; ++j)
        grid[cell_key(b.data() + j * dim, dim, pitch)].push_back(static_cast<std::uint32_t>(j));

    std::int64_t lo[3], hi[3];
    for (std::size_t i = 0; i < na; ++i) {
        const double* p = a.data() + i * dim;
        for (std::size_t k = 0; k < dim; ++k) {
            auto c = static_cast<std::int64_t>(std::floor(p[k] / pitch));
            lo[k] = c - 1;
            hi[k] = c + 1;
        }
        double probe[3] = {0.0, 0.0, 0.0};
        for (std::int64_t cx = lo[0]; cx <= hi[0]; ++cx)
            for (std::int64_t cy = lo[1]; cy <= hi[1]; ++cy) {
                std::int64_t cz0 = dim == 3 ? lo[2] : 0;
                std::int64_t cz1 = dim == 3 ? hi[2] : 0;
                for (std::int64_t cz = cz0; cz <= cz1; ++cz) {
                    probe[0] = (static_cast<double>(cx) + 0.5) * pitch;
                    probe[1] = (static_cast<double>(cy) + 0.5) * pitch;
                    if (dim == 3) probe[2] = (static_cast<double>(cz) + 0.5) * pitch;
                    auto it = grid.find(cell_key(probe, dim, pitch));
                    if (it == grid.end()) continue;
                    for (std::uint32_t j : it->second)
                        best2 = std::min(best2, pair_dist2(p, b.data() + j * dim, dim));
                }
            }
    }
    return std::sqrt(best2);
}

}  // namespace embedlab
