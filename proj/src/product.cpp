#include "embedlab/product.hpp"

#include <algorithm>
#include <cmath>

namespace embedlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ReductionParams reduction_parameters(const FiniteMetric& x, double d_max, std::size_t dim,
                                     double c) {
    if (c < 64.0) fail(ErrorCode::DegenerateParameters, "master constant must be >= 64");
    if (d_max < 1.0) fail(ErrorCode::DegenerateParameters, "distortion budget must be >= 1");
    if (dim != 2 && dim != 3) fail(ErrorCode::UnsupportedDimension, "product supports d = 2 or 3");
    if (x.size() < 2) fail(ErrorCode::TooFewPoints, "base space needs at least two points");

    double min_d = x.at(0, 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) min_d = std::min(min_d, x.at(i, j));
    if (std::abs(min_d - 1.0) > 1e-9)
        fail(ErrorCode::UnnormalizedInput, "base metric must have minimum distance 1");

    ReductionParams p;
    p.c = c;
    p.d_max = d_max;
    p.delta = aspect_ratio(x);
    p.dim = dim;
    p.radius = c * d_max * p.delta;
    p.epsilon = 1.0 / (c * d_max);
    double ratio = p.radius / p.epsilon;
    p.predicted_net_points =
        dim == 2 ? static_cast<std::size_t>(std::ceil(2.0 * kPi * ratio))
                 : static_cast<std::size_t>(std::ceil(4.0 * kPi * ratio * ratio + kPi * ratio));
    return p;
}

ProductSpace::ProductSpace(FiniteMetric base, SphereNet net)
    : base_(std::move(base)), net_(std::move(net)) {
    if (base_.size() == 0 || net_.count() == 0)
        fail(ErrorCode::TooFewPoints, "product needs a nonempty base and net");
}

double ProductSpace::dist(std::size_t i, std::size_t j) const {
    std::size_t ai = base_of(i), vi = net_of(i);
    std::size_t aj = base_of(j), vj = net_of(j);
    double rho = (ai == aj) ? 0.0 : base_.at(ai, aj);
    double v2 = 0.0;
    const double* pi = net_.point(vi);
    const double* pj = net_.point(vj);
    for (std::size_t k = 0; k < net_.dim; ++k) {
        double d = pi[k] - pj[k];
        v2 += d * d;
    }
    return std::sqrt(rho * rho + v2);
}

std::string ProductSpace::label_of(std::size_t pair_idx) const {
    return base_.labels()[base_of(pair_idx)] + "#" + std::to_string(net_of(pair_idx));
}

FiniteMetric ProductSpace::materialize(std::size_t max_points) const {
    const std::size_t n = size();
    if (n > max_points)
        fail(ErrorCode::TooLarge, "product has " + std::to_string(n) +
                                      " points; dense matrix capped at " +
                                      std::to_string(max_points));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = label_of(i);
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = dist(i, j);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return FiniteMetric(std::move(labels), std::move(d));
}

ProductSpace product_space(const FiniteMetric& x, const SphereNet& v) {
    auto check = validate_metric(x);
    if (!check.ok) fail(check.code, "base metric invalid: " + check.message);
    return ProductSpace(x, v);
}

EuclideanEmbedding forward_embedding(const LineEmbedding& f, const ProductSpace& p) {
    const std::size_t nb = p.base().size();
    if (f.positions.size() != nb)
        fail(ErrorCode::InvalidArgument, "one line position per base point required");
    double lo = *std::min_element(f.positions.begin(), f.positions.end());
    if (std::abs(lo) > 1e-9 * (1.0 + std::abs(lo)))
        fail(ErrorCode::NegativeLineValue, "line embedding must be normalized to min 0");

    const SphereNet& net = p.net();
    const double r = net.radius;
    EuclideanEmbedding e;
    e.dim = net.dim;
    e.coords.resize(p.size() * net.dim);
    for (std::size_t a = 0; a < nb; ++a) {
        double scale = (r + f.positions[a]) / r;
        for (std::size_t v = 0; v < net.count(); ++v) {
            const double* pv = net.point(v);
            double* out = e.coords.data() + p.pair_index(a, v) * net.dim;
            for (std::size_t k = 0; k < net.dim; ++k) out[k] = scale * pv[k];
        }
    }
    return e;
}

}  // namespace embedlab
