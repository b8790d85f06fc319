#include "embedlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "embedlab/vec.hpp"

namespace embedlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorCode::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
        case ErrorCode::TriangleViolation: return "TriangleViolation";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::NonInjectiveImage: return "NonInjectiveImage";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::DegenerateParameters: return "DegenerateParameters";
        case ErrorCode::UnnormalizedInput: return "UnnormalizedInput";
        case ErrorCode::NegativeLineValue: return "NegativeLineValue";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::DegenerateCurve: return "DegenerateCurve";
        case ErrorCode::CurvesIntersect: return "CurvesIntersect";
        case ErrorCode::NotTotallyOrdered: return "NotTotallyOrdered";
        case ErrorCode::WrongSemantics: return "WrongSemantics";
        case ErrorCode::LociTooCrowded: return "LociTooCrowded";
        case ErrorCode::InconsistentOrdering: return "InconsistentOrdering";
        case ErrorCode::ParameterRangeViolation: return "ParameterRangeViolation";
        case ErrorCode::NoGapFound: return "NoGapFound";
        case ErrorCode::IncompleteEmbedding: return "IncompleteEmbedding";
        case ErrorCode::DimensionExceedsAmbient: return "DimensionExceedsAmbient";
        case ErrorCode::BadSize: return "BadSize";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

FiniteMetric::FiniteMetric(std::vector<std::string> labels, std::vector<double> dist_row_major)
    : labels_(std::move(labels)), dist_(std::move(dist_row_major)) {
    if (dist_.size() != labels_.size() * labels_.size())
        fail(ErrorCode::InvalidArgument, "distance matrix is not n-by-n for the label count");
}

std::size_t FiniteMetric::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    fail(ErrorCode::InvalidArgument, "unknown label: " + label);
}

ValidationResult validate_metric(const FiniteMetric& m) {
    const std::size_t n = m.size();
    double max_entry = 0.0;
    for (double v : m.data()) max_entry = std::max(max_entry, std::abs(v));
    const double tol = 1e-9 * std::max(max_entry, 1.0);

    ValidationResult r;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(m.at(i, i)) > tol) {
            r = {false, ErrorCode::NonzeroDiagonal, i, i, i,
                 "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0"};
            return r;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m.at(i, j) - m.at(j, i)) > tol) {
                r = {false, ErrorCode::AsymmetricMatrix, i, j, j,
                     "d(i,j) != d(j,i) at i=" + std::to_string(i) + " j=" + std::to_string(j)};
                return r;
            }
            if (m.at(i, j) <= tol) {
                r = {false, ErrorCode::NonpositiveOffDiagonal, i, j, j,
                     "d(i,j) <= 0 at i=" + std::to_string(i) + " j=" + std::to_string(j)};
                return r;
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (m.at(i, k) > m.at(i, j) + m.at(j, k) + tol) {
                    r = {false, ErrorCode::TriangleViolation, i, j, k,
                         "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(.," +
                             std::to_string(j) + ") + d(" + std::to_string(j) + ",.)"};
                    return r;
                }
            }
        }
    return r;
}

double aspect_ratio(const FiniteMetric& m) {
    const std::size_t n = m.size();
    if (n < 2) fail(ErrorCode::TooFewPoints, "aspect ratio needs at least two points");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = m.at(i, j);
            hi = std::max(hi, v);
            if (v > 0.0) lo = std::min(lo, v);
        }
    if (!(lo < std::numeric_limits<double>::infinity()))
        fail(ErrorCode::DegenerateParameters, "no nonzero distance found");
    return hi / lo;
}

DistortionReport distortion_of_map(std::size_t n,
                                   const std::function<double(std::size_t, std::size_t)>& dist,
                                   const EuclideanEmbedding& e) {
    if (e.size() != n)
        fail(ErrorCode::InvalidArgument, "embedding point count does not match the metric");
    DistortionReport rep;
    if (n < 2) return rep;

    double img_diam = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            img_diam = std::max(img_diam, row_dist(e.coords, e.dim, i, j));

    double expansion = 0.0;
    double contraction = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double rho = dist(i, j);
            double img = row_dist(e.coords, e.dim, i, j);
            if (img <= 1e-12 * img_diam)
                fail(ErrorCode::NonInjectiveImage,
                     "image points " + std::to_string(i) + " and " + std::to_string(j) +
                         " nearly coincide");
            expansion = std::max(expansion, img / rho);
            contraction = std::max(contraction, rho / img);
        }
    rep.expansion = expansion;
    rep.contraction = contraction;
    rep.distortion = expansion * contraction;
    rep.alpha = 1.0 / contraction;
    return rep;
}

DistortionReport distortion_of_map(const FiniteMetric& m, const EuclideanEmbedding& e) {
    return distortion_of_map(
        m.size(), [&m](std::size_t i, std::size_t j) { return m.at(i, j); }, e);
}

FiniteMetric shortest_path_closure(const std::vector<std::string>& nodes,
                                   const std::vector<WeightedEdge>& edges,
                                   const FiniteMetric* base) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    auto intern = [&](const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        index.emplace(s, labels.size());
        labels.push_back(s);
        return labels.size() - 1;
    };
    if (base != nullptr)
        for (const auto& l : base->labels()) intern(l);
    for (const auto& l : nodes) intern(l);

    const std::size_t n = labels.size();
    if (n < 2) fail(ErrorCode::TooFewPoints, "closure needs at least two nodes");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
    if (base != nullptr) {
        const std::size_t nb = base->size();
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                if (i != j) d[i * n + j] = base->at(i, j);
    }
    for (const auto& ed : edges) {
        if (!(ed.w > 0.0))
            fail(ErrorCode::NonpositiveOffDiagonal, "edge weight must be positive: " + ed.a + "-" + ed.b);
        std::size_t a = intern(ed.a);
        std::size_t b = intern(ed.b);
        if (a == b) continue;
        d[a * n + b] = std::min(d[a * n + b], ed.w);
        d[b * n + a] = std::min(d[b * n + a], ed.w);
    }

    // Floyd-Warshall, repeated until no entry changes.  A second pass is
    // normally a no-op; iterating to the floating-point fixpoint guarantees
    // idempotence of the closure.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < n; ++k) {
            const double* dk = d.data() + k * n;
            for (std::size_t i = 0; i < n; ++i) {
                double dik = d[i * n + k];
                if (dik == inf) continue;
                double* di = d.data() + i * n;
                for (std::size_t j = 0; j < n; ++j) {
                    double cand = dik + dk[j];
                    if (cand < di[j]) {
                        di[j] = cand;
                        changed = true;
                    }
                }
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d[i * n + j] == inf)
                fail(ErrorCode::DisconnectedGraph,
                     "no path between " + labels[i] + " and " + labels[j]);

    // Symmetrize exactly; relaxation order can leave ulp-level asymmetry.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = std::min(d[i * n + j], d[j * n + i]);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    return FiniteMetric(std::move(labels), std::move(d));
}

FiniteMetric restrict_metric(const FiniteMetric& m, const std::vector<std::size_t>& indices) {
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (std::size_t idx : indices) labels.push_back(m.labels()[idx]);
    std::vector<double> d(indices.size() * indices.size(), 0.0);
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
            d[a * indices.size() + b] = m.at(indices[a], indices[b]);
    return FiniteMetric(std::move(labels), std::move(d));
}

}  // namespace embedlab
