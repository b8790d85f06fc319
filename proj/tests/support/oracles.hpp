#pragma once

#include <cstddef>

#include "embedlab/metric.hpp"

namespace testsupport {

// Independent re-computation of the distortion report, structured differently
// from the library (two separate passes over the pairs, ratios accumulated in
// long double).  Used as the agreement oracle.
struct OracleDistortion {
    double distortion = 1.0;
    double expansion = 1.0;
    double contraction = 1.0;
    double alpha = 1.0;
};

OracleDistortion oracle_distortion(const embedlab::FiniteMetric& m,
                                   const embedlab::EuclideanEmbedding& e);

// Grid-placement oracle for the optimal line distortion of a small metric
// (n <= 5): for every ordering, gap vectors are searched on a hierarchical
// multiplicative grid refined around the best beam candidates.  Converges
// well below 1e-4 on desk instances.
double oracle_best_line_distortion(const embedlab::FiniteMetric& m);

}  // namespace testsupport
