#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "embedlab/metric.hpp"

namespace embedlab {

// Distance-to-random-subset embedding into R^(q*L): q = ceil(log2 n) scales,
// L repetitions per scale (default 2 q when repetitions == 0).
struct BourgainConfig {
    std::size_t repetitions = 0;
    std::uint64_t seed = 0;
};

// Coordinate (t, l), t = 1..q, l = 0..L-1, of point x is rho(x, S_{t,l})
// where S_{t,l} contains each point independently with probability 2^(-t)
// (distance to an empty set is 0).  Every coordinate is 1-Lipschitz.
// Requires n >= 2 (TooFewPoints).
EuclideanEmbedding bourgain_embed(const FiniteMetric& m, const BourgainConfig& cfg);

enum class ProjectionMode {
    Gaussian,      // independent N(0,1) entries scaled by 1/sqrt(d)
    Orthonormal,   // rows orthonormalized; an isometry when d == ambient
};

struct ProjectionConfig {
    std::size_t d = 2;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    ProjectionMode mode = ProjectionMode::Gaussian;
};

// Seeded linear maps R^ambient -> R^d; keeps the trial whose image has the
// least distortion against source (earliest trial on ties, so the best over
// a prefix of trials is non-increasing in the trial count).  The returned
// coordinates are rescaled to the noncontracting normalization; distortion
// itself is scale-invariant, so the comparison is unaffected.  A one-point
// input maps to the zero vector (distortion 1 by convention).  Errors:
// DimensionExceedsAmbient when d > e.dim, InvalidArgument for d or trials 0.
EuclideanEmbedding random_project(const FiniteMetric& source,
                                  const EuclideanEmbedding& e,
                                  const ProjectionConfig& cfg);

// Derivative-free local search: proposes seeded single-coordinate moves with
// a geometrically decaying step and accepts those that lower a smooth
// surrogate of log-distortion, namely
//   (1/beta) (log sum_pairs (|f(x)-f(y)| / rho)^beta
//           + log sum_pairs (rho / |f(x)-f(y)|)^beta),
// with the temperature beta rising through a fixed schedule so the surrogate
// approaches log(expansion) + log(contraction).  Tracks the true distortion
// of every accepted iterate and returns the best one seen, including init,
// so output distortion never exceeds init's.
EuclideanEmbedding refine_local_search(const FiniteMetric& m,
                                       const EuclideanEmbedding& init,
                                       std::size_t iters, std::uint64_t seed);

struct EmbedReport {
    std::size_t n = 0;
    std::size_t d = 0;
    double distortion = 1.0;
    double bound = 0.0;       // n^(2/d) * (ln n)^(3/2)
    double c_achieved = 0.0;  // distortion / bound
    std::vector<std::uint64_t> seeds;
};

struct EmbedResult {
    EuclideanEmbedding embedding;
    EmbedReport report;
};

// Full pipeline per seed (Bourgain, then projection to R^d, then local
// search), keeping the least-distortion seed.  Deterministic given
// (m, d, seeds).  When the intermediate dimension is below d the Bourgain
// image is padded with zero coordinates.  Errors: InvalidArgument for d = 0
// or an empty seed list; TooFewPoints propagated for n < 2.
EmbedResult embed_rd(const FiniteMetric& m, std::size_t d,
                     const std::vector<std::uint64_t>& seeds);

}  // namespace embedlab
