#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "embedlab/line.hpp"
#include "embedlab/metric.hpp"
#include "embedlab/sphere_net.hpp"

namespace embedlab {

// Parameters for the sphere-product construction: given the base space X and
// a distortion budget, they fix the sphere radius and net density.
struct ReductionParams {
    double c = 100.0;       // master constant, >= 64
    double d_max = 1.0;     // distortion budget for line embeddings of X
    double delta = 1.0;     // aspect ratio of X
    std::size_t dim = 2;    // ambient dimension
    double radius = 0.0;    // R = c * d_max * delta
    double epsilon = 0.0;   // eps = 1 / (c * d_max)
    std::size_t predicted_net_points = 0;
};

// Computes R = C*D_max*Delta and eps = 1/(C*D_max) and predicts the net size
// (ceil(2*pi*R/eps) for d = 2, about 4*pi*(R/eps)^2 for d = 3).  The base
// metric must have minimum distance 1 (error UnnormalizedInput) and C >= 64
// (error DegenerateParameters).
ReductionParams reduction_parameters(const FiniteMetric& x, double d_max, std::size_t dim,
                                     double c = 100.0);

// L2 product of a base metric with a sphere net:
//   rho((a,v), (a',v')) = sqrt(rho_X(a,a')^2 + |v - v'|^2).
// Point (a, v) has index base_index * net.count() + net_index and label
// "a#v" with v the net point index.  The dense matrix is only materialized
// on demand; desk products with millions of points are used through the
// distance oracle.
class ProductSpace {
  public:
    ProductSpace(FiniteMetric base, SphereNet net);

    const FiniteMetric& base() const { return base_; }
    const SphereNet& net() const { return net_; }
    std::size_t size() const { return base_.size() * net_.count(); }

    std::size_t pair_index(std::size_t base_idx, std::size_t net_idx) const {
        return base_idx * net_.count() + net_idx;
    }
    std::size_t base_of(std::size_t pair_idx) const { return pair_idx / net_.count(); }
    std::size_t net_of(std::size_t pair_idx) const { return pair_idx % net_.count(); }

    double dist(std::size_t i, std::size_t j) const;
    std::string label_of(std::size_t pair_idx) const;

    // Dense FiniteMetric over all pairs.  Guarded: errors with TooLarge when
    // size() exceeds max_points (the matrix grows quadratically).
    FiniteMetric materialize(std::size_t max_points = 4096) const;

  private:
    FiniteMetric base_;
    SphereNet net_;
};

ProductSpace product_space(const FiniteMetric& x, const SphereNet& v);

// Maps (a, v) to (R + f(a)) * v / R, placing layer a on the concentric
// sphere of radius R + f(a).  Requires min f = 0 (error NegativeLineValue)
// and one position per base point.
EuclideanEmbedding forward_embedding(const LineEmbedding& f, const ProductSpace& p);

}  // namespace embedlab
