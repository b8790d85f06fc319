#include "support/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "embedlab/curve_checks.hpp"
#include "embedlab/errors.hpp"
#include "embedlab/rng.hpp"

namespace testsupport {

using namespace embedlab;

FiniteMetric random_metric(std::size_t n, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "metric", n);
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i * n + j] = d[j * n + i] = rng.uniform(1.0, 2.2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    double mn = d[1];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) mn = std::min(mn, d[i * n + j]);
    for (double& v : d) v /= mn;
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    return FiniteMetric(std::move(labels), std::move(d));
}

BetweennessInstance random_instance(std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "instance", 0);
    const std::size_t n = 3 + rng.next_below(3);
    const std::size_t count = rng.next_below(4);
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t i = 1 + rng.next_below(n);
        std::size_t j = i;
        while (j == i) j = 1 + rng.next_below(n);
        std::size_t k = i;
        while (k == i || k == j) k = 1 + rng.next_below(n);
        triples.push_back({i, j, k});
    }
    return make_instance(n, TripleSemantics::Betweenness, std::move(triples));
}

std::vector<P2> perturbed_circle_images(const SphereNet& net, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "plmap", 0);
    double weight[4], phase[4], total_weight = 0.0;
    for (int k = 0; k < 4; ++k) {
        weight[k] = 0.05 + rng.next_double();
        total_weight += weight[k];
        phase[k] = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    }
    const double total = rng.uniform(0.005, 0.035);
    double amp[4];
    for (int k = 0; k < 4; ++k) amp[k] = total * weight[k] / total_weight;

    std::vector<P2> images;
    images.reserve(net.count());
    for (std::size_t i = 0; i < net.count(); ++i) {
        const double theta = std::atan2(net.point(i)[1], net.point(i)[0]);
        double r = 1.0;
        for (int k = 0; k < 4; ++k) r += amp[k] * std::cos((k + 1) * theta + phase[k]);
        images.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return images;
}

EuclideanEmbedding random_embedding(std::size_t n, std::size_t dim, std::uint64_t seed,
                                    double scale) {
    Rng rng = Rng::stream(seed, "emb", n * dim);
    EuclideanEmbedding e;
    e.dim = dim;
    e.coords.resize(n * dim);
    for (double& v : e.coords) v = rng.uniform(0.0, scale);
    return e;
}

FiniteMetric equilateral_triangle(double side) {
    std::vector<double> d = {0, side, side, side, 0, side, side, side, 0};
    return FiniteMetric({"a", "b", "c"}, std::move(d));
}

FiniteMetric path_metric_013() {
    std::vector<double> d = {0, 1, 3, 1, 0, 2, 3, 2, 0};
    return FiniteMetric({"a", "b", "c"}, std::move(d));
}

FiniteMetric four_cycle() {
    const std::size_t n = 4;
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = i > j ? i - j : j - i;
            d[i * n + j] = static_cast<double>(std::min(k, n - k));
        }
    return FiniteMetric({"v1", "v2", "v3", "v4"}, std::move(d));
}

FiniteMetric uniform_metric(std::size_t n, double dist) {
    std::vector<double> d(n * n, dist);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "u" + std::to_string(i);
    return FiniteMetric(std::move(labels), std::move(d));
}

ClosedPolyline circle_polyline(P2 center, double radius, std::size_t segments) {
    std::vector<P2> pts;
    pts.reserve(segments);
    for (std::size_t i = 0; i < segments; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                         static_cast<double>(segments);
        pts.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
    }
    return make_closed_polyline(std::move(pts));
}

double line_map_distortion(const FiniteMetric& m, const LineEmbedding& f) {
    double expansion = 0.0, contraction = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const double img = std::abs(f.positions[i] - f.positions[j]);
            assert(img > 0.0);
            expansion = std::max(expansion, img / m.at(i, j));
            contraction = std::max(contraction, m.at(i, j) / img);
        }
    return expansion * contraction;
}

RoundTrip run_product_roundtrip(const FiniteMetric& m, double c, std::size_t dim) {
    LineOpt opt = optimal_line_embedding_bruteforce(m);
    LineEmbedding f = opt.embedding;
    f.normalize();
    const ReductionParams params =
        reduction_parameters(m, std::max(1.0, opt.distortion), dim, c);
    const SphereNet net = epsilon_dense_sphere(dim, params.radius, params.epsilon);
    ProductSpace p = product_space(m, net);
    EuclideanEmbedding g = forward_embedding(f, p);
    ExtractResult ex = extract_line_embedding(g, p, std::max(1.0, opt.distortion));
    const double ed = line_map_distortion(m, ex.line);
    return RoundTrip(std::move(opt), std::move(p), std::move(g), std::move(ex), ed);
}

std::vector<ClosedPolyline> layer_curves(const EuclideanEmbedding& g, const ProductSpace& p) {
    const std::size_t nb = p.base().size();
    const std::size_t nv = p.net().count();
    std::vector<ClosedPolyline> curves;
    curves.reserve(nb);
    for (std::size_t a = 0; a < nb; ++a) {
        std::vector<P2> pts;
        pts.reserve(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            const std::size_t idx = p.pair_index(a, v);
            pts.push_back({g.coords[idx * 2], g.coords[idx * 2 + 1]});
        }
        curves.push_back(make_closed_polyline(std::move(pts)));
    }
    return curves;
}

std::vector<std::size_t> recovered_layer_order(const EuclideanEmbedding& e,
                                               const Section5Space& s) {
    const std::size_t n = s.instance.n;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_layer(n);
    for (std::size_t i = 0; i < s.provenance.size(); ++i) {
        const Section5Point& pt = s.provenance[i];
        if (!pt.is_path) by_layer[pt.layer - 1].push_back({pt.net_index, i});
    }
    std::vector<ClosedPolyline> curves;
    curves.reserve(n);
    for (auto& layer : by_layer) {
        std::sort(layer.begin(), layer.end());
        std::vector<P2> pts;
        pts.reserve(layer.size());
        for (const auto& [net_idx, i] : layer)
            pts.push_back({e.coords[i * 2], e.coords[i * 2 + 1]});
        curves.push_back(make_closed_polyline(std::move(pts)));
    }
    const std::vector<std::size_t> order = nesting_order(curves, 0.0);
    std::vector<std::size_t> elements;
    elements.reserve(order.size());
    for (const std::size_t idx : order) elements.push_back(idx + 1);
    return elements;
}

bool same_or_reverse(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a == b) return true;
    std::vector<std::size_t> rev(b.rbegin(), b.rend());
    return a == rev;
}

}  // namespace testsupport
