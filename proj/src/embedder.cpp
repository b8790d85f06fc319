#include "embedlab/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "embedlab/errors.hpp"
#include "embedlab/rng.hpp"

namespace embedlab {
namespace {

std::size_t ceil_log2(std::size_t n) {
    std::size_t q = 0;
    for (std::size_t v = 1; v < n; v <<= 1) ++q;
    return std::max<std::size_t>(q, 1);
}

double row_distance(const std::vector<double>& c, std::size_t dim,
                    std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        const double d = c[i * dim + a] - c[j * dim + a];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace

EuclideanEmbedding bourgain_embed(const FiniteMetric& m, const BourgainConfig& cfg) {
    const std::size_t n = m.size();
    if (n < 2) fail(ErrorCode::TooFewPoints, "need at least two points");
    const std::size_t q = ceil_log2(n);
    const std::size_t reps = cfg.repetitions == 0 ? 2 * q : cfg.repetitions;

    EuclideanEmbedding out;
    out.dim = q * reps;
    out.coords.assign(n * out.dim, 0.0);
    std::vector<std::size_t> subset;
    for (std::size_t t = 1; t <= q; ++t) {
        const double prob = std::ldexp(1.0, -static_cast<int>(t));
        for (std::size_t l = 0; l < reps; ++l) {
            const std::size_t coord = (t - 1) * reps + l;
            Rng rng = Rng::stream(cfg.seed, "bourgain", coord);
            subset.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (rng.next_bool(prob)) subset.push_back(i);
            if (subset.empty()) continue;  // distance to empty set is 0
            for (std::size_t x = 0; x < n; ++x) {
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t s : subset) best = std::min(best, m.at(x, s));
                out.coords[x * out.dim + coord] = best;
            }
        }
    }
    return out;
}

EuclideanEmbedding random_project(const FiniteMetric& source,
                                  const EuclideanEmbedding& e,
                                  const ProjectionConfig& cfg) {
    if (cfg.d == 0 || cfg.trials == 0)
        fail(ErrorCode::InvalidArgument, "d and trials must be positive");
    if (cfg.d > e.dim)
        fail(ErrorCode::DimensionExceedsAmbient,
             "target dimension exceeds the ambient dimension");
    const std::size_t n = e.size();
    if (source.size() != n)
        fail(ErrorCode::InvalidArgument, "source size does not match embedding");

    EuclideanEmbedding out;
    out.dim = cfg.d;
    if (n <= 1) {  // zero vector image; distortion is 1 by convention
        out.coords.assign(n * cfg.d, 0.0);
        return out;
    }

    const std::size_t ambient = e.dim;
    double best_distortion = std::numeric_limits<double>::infinity();
    std::vector<double> best_coords;
    double best_alpha = 1.0;
    std::vector<double> mat(cfg.d * ambient);

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = Rng::stream(cfg.seed, "project", trial);
        const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.d));
        for (double& v : mat) v = rng.next_normal();
        if (cfg.mode == ProjectionMode::Gaussian) {
            for (double& v : mat) v *= scale;
        } else {
            // Modified Gram-Schmidt on the rows; d <= ambient keeps them
            // independent almost surely.
            for (std::size_t r = 0; r < cfg.d; ++r) {
                double* row = &mat[r * ambient];
                for (std::size_t p = 0; p < r; ++p) {
                    const double* prev = &mat[p * ambient];
                    double dot = 0.0;
                    for (std::size_t c = 0; c < ambient; ++c) dot += row[c] * prev[c];
                    for (std::size_t c = 0; c < ambient; ++c) row[c] -= dot * prev[c];
                }
                double norm = 0.0;
                for (std::size_t c = 0; c < ambient; ++c) norm += row[c] * row[c];
                norm = std::sqrt(norm);
                if (norm < 1e-12)
                    fail(ErrorCode::InvalidArgument, "degenerate projection matrix");
                for (std::size_t c = 0; c < ambient; ++c) row[c] /= norm;
            }
        }

        std::vector<double> img(n * cfg.d, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < cfg.d; ++r) {
                double acc = 0.0;
                const double* row = &mat[r * ambient];
                const double* src = &e.coords[i * ambient];
                for (std::size_t c = 0; c < ambient; ++c) acc += row[c] * src[c];
                img[i * cfg.d + r] = acc;
            }

        double distortion = std::numeric_limits<double>::infinity();
        double alpha = 1.0;
        try {
            EuclideanEmbedding cand{cfg.d, img};
            const DistortionReport rep = distortion_of_map(source, cand);
            distortion = rep.distortion;
            alpha = rep.alpha;
        } catch (const Error& err) {
            if (err.code() != ErrorCode::NonInjectiveImage) throw;
        }
        if (distortion < best_distortion) {
            best_distortion = distortion;
            best_coords = std::move(img);
            best_alpha = alpha;
        }
    }
    if (!(best_distortion < std::numeric_limits<double>::infinity()))
        fail(ErrorCode::NonInjectiveImage, "every projection trial collapsed a pair");

    // Noncontracting normalization: alpha * rho <= image, so dividing by
    // alpha puts every image distance at or above its source distance.
    for (double& v : best_coords) v /= best_alpha;
    out.coords = std::move(best_coords);
    return out;
}

EuclideanEmbedding refine_local_search(const FiniteMetric& m,
                                       const EuclideanEmbedding& init,
                                       std::size_t iters, std::uint64_t seed) {
    const std::size_t n = m.size();
    if (init.size() != n)
        fail(ErrorCode::InvalidArgument, "init does not cover the metric");
    if (n < 2 || iters == 0) return init;
    const std::size_t dim = init.dim;
    if (dim == 0) fail(ErrorCode::InvalidArgument, "init has dimension 0");

    std::vector<double> coords = init.coords;
    std::vector<double> img(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = row_distance(coords, dim, i, j);
            img[i * n + j] = img[j * n + i] = d;
        }

    // True distortion (infinity when a pair collapses); tracked on every
    // accepted move for the keep-best rule.
    auto true_distortion = [&]() {
        double expansion = 0.0, contraction = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double rho = m.at(i, j);
                const double d = img[i * n + j];
                if (d <= 0.0) return std::numeric_limits<double>::infinity();
                expansion = std::max(expansion, d / rho);
                contraction = std::max(contraction, rho / d);
            }
        return expansion * contraction;
    };

    double best_distortion = true_distortion();
    std::vector<double> best_coords = coords;
    if (!(best_distortion < std::numeric_limits<double>::infinity()))
        fail(ErrorCode::NonInjectiveImage, "init collapses a pair");

    double diameter = 0.0;
    for (const double d : img) diameter = std::max(diameter, d);

    // Surrogate state for the current temperature beta and reference scale
    // gamma:  sum_exp = sum (r/gamma)^beta, sum_con = sum (gamma/r)^beta
    // over pairs, r = image/source ratio.  Cost = log sum_exp + log sum_con;
    // as beta rises this tends to beta * log(distortion) + const.
    double beta = 0.0, gamma = 1.0, sum_exp = 0.0, sum_con = 0.0;
    auto rebuild = [&]() {
        double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double r = img[i * n + j] / m.at(i, j);
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
            }
        gamma = std::sqrt(rmin * rmax);
        sum_exp = sum_con = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double r = img[i * n + j] / (m.at(i, j) * gamma);
                sum_exp += std::pow(r, beta);
                sum_con += std::pow(r, -beta);
            }
    };

    Rng rng = Rng::stream(seed, "refine", 0);
    std::vector<double> new_row(n, 0.0);
    int phase = -1;
    for (std::size_t t = 0; t < iters; ++t) {
        const int p = static_cast<int>((8 * t) / iters);
        if (p != phase) {
            phase = p;
            beta = std::min(64.0, 4.0 * std::pow(1.8, p));
            rebuild();
        }
        const double frac = static_cast<double>(t) / static_cast<double>(iters);
        const double step = 0.2 * diameter * std::pow(1e-3, frac);

        const std::size_t i = rng.next_below(n);
        const std::size_t axis = rng.next_below(dim);
        const double delta = step * rng.uniform(-1.0, 1.0);

        double d_exp = 0.0, d_con = 0.0;
        bool collapsed = false;
        const double old_coord = coords[i * dim + axis];
        coords[i * dim + axis] = old_coord + delta;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double nd = row_distance(coords, dim, i, j);
            if (nd <= 0.0) {
                collapsed = true;
                break;
            }
            new_row[j] = nd;
            const double rho_g = m.at(i, j) * gamma;
            d_exp += std::pow(nd / rho_g, beta) - std::pow(img[i * n + j] / rho_g, beta);
            d_con += std::pow(rho_g / nd, beta) - std::pow(rho_g / img[i * n + j], beta);
        }
        const bool accept = !collapsed &&
                            std::log(sum_exp + d_exp) + std::log(sum_con + d_con) <
                                std::log(sum_exp) + std::log(sum_con) - 1e-15;
        if (!accept) {
            coords[i * dim + axis] = old_coord;
            continue;
        }
        sum_exp += d_exp;
        sum_con += d_con;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            img[i * n + j] = img[j * n + i] = new_row[j];
        }
        const double dist = true_distortion();
        if (dist < best_distortion) {
            best_distortion = dist;
            best_coords = coords;
        }
    }
    return EuclideanEmbedding{dim, std::move(best_coords)};
}

EmbedResult embed_rd(const FiniteMetric& m, std::size_t d,
                     const std::vector<std::uint64_t>& seeds) {
    if (d == 0) fail(ErrorCode::InvalidArgument, "d must be positive");
    if (seeds.empty()) fail(ErrorCode::InvalidArgument, "need at least one seed");
    const std::size_t n = m.size();

    EmbedResult out;
    out.report.n = n;
    out.report.d = d;
    out.report.seeds = seeds;
    const double ln = std::log(static_cast<double>(n));
    out.report.bound = std::pow(static_cast<double>(n),
                                2.0 / static_cast<double>(d)) *
                       std::pow(ln, 1.5);

    double best = std::numeric_limits<double>::infinity();
    for (const std::uint64_t seed : seeds) {
        EuclideanEmbedding high = bourgain_embed(m, BourgainConfig{0, seed});
        if (high.dim < d) {  // pad with zero coordinates up to d
            EuclideanEmbedding padded;
            padded.dim = d;
            padded.coords.assign(n * d, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t a = 0; a < high.dim; ++a)
                    padded.coords[i * d + a] = high.coords[i * high.dim + a];
            high = std::move(padded);
        }
        ProjectionConfig pc;
        pc.d = d;
        pc.seed = seed;
        EuclideanEmbedding flat = random_project(m, high, pc);
        EuclideanEmbedding refined = refine_local_search(m, flat, 5000, seed);
        const double dist = distortion_of_map(m, refined).distortion;
        if (dist < best) {
            best = dist;
            out.embedding = std::move(refined);
        }
    }
    out.report.distortion = best;
    out.report.c_achieved = best / out.report.bound;
    return out;
}

}  // namespace embedlab
