#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "embedlab/errors.hpp"

namespace embedlab {

// Finite metric space: labelled points plus a dense symmetric distance
// matrix.  Construction checks shape only; metric axioms are checked
// separately by validate_metric so that callers can inspect near-misses.
class FiniteMetric {
  public:
    FiniteMetric() = default;
    FiniteMetric(std::vector<std::string> labels, std::vector<double> dist_row_major);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& data() const { return dist_; }

    double at(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        dist_[i * labels_.size() + j] = v;
        dist_[j * labels_.size() + i] = v;
    }

    std::size_t index_of(const std::string& label) const;  // throws InvalidArgument if absent

  private:
    std::vector<std::string> labels_;
    std::vector<double> dist_;  // row-major, size n*n
};

struct ValidationResult {
    bool ok = true;
    ErrorCode code = ErrorCode::InvalidArgument;  // meaningful only when !ok
    std::size_t i = 0, j = 0, k = 0;              // witnessing indices
    std::string message;
};

// Checks symmetry, zero diagonal, positive off-diagonal entries and the
// triangle inequality, in that order, with additive tolerance
// 1e-9 * (largest entry).  Returns the first violated axiom with witnesses.
ValidationResult validate_metric(const FiniteMetric& m);

// max distance / min nonzero distance; requires at least two points.
double aspect_ratio(const FiniteMetric& m);

// Points in R^d, row-major.  The source metric is passed explicitly to the
// operations that need it; the struct itself is plain data.
struct EuclideanEmbedding {
    std::size_t dim = 0;
    std::vector<double> coords;  // size n*dim

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
};

struct DistortionReport {
    double distortion = 1.0;
    double expansion = 1.0;    // max image/source ratio
    double contraction = 1.0;  // max source/image ratio
    double alpha = 1.0;        // witnessing scale: alpha * rho <= image distance
};

// Distortion of the map m -> e (paired by index).  The measure is
// scale-invariant: distortion = expansion * contraction over all pairs.
// Spaces with fewer than two points report 1 by convention.  Errors with
// NonInjectiveImage if two image points are closer than 1e-12 times the
// image diameter.
DistortionReport distortion_of_map(const FiniteMetric& m, const EuclideanEmbedding& e);

// Same report for a distance oracle instead of a materialized matrix; used
// for product spaces too large to store densely.  pairs = n*(n-1)/2 values
// are pulled from dist(i, j) for i < j.
DistortionReport distortion_of_map(std::size_t n,
                                   const std::function<double(std::size_t, std::size_t)>& dist,
                                   const EuclideanEmbedding& e);

struct WeightedEdge {
    std::string a;
    std::string b;
    double w = 0.0;
};

// All-pairs shortest-path closure of the graph formed by the base metric
// (read as a complete weighted graph; may be null for pure graph input) plus
// the listed nodes and edges.  Labels present in both are identified.  The
// result is relaxed to a floating-point fixpoint so that re-running the
// closure on its own output is the identity.  Errors: DisconnectedGraph,
// NonpositiveOffDiagonal for edge weights <= 0.
FiniteMetric shortest_path_closure(const std::vector<std::string>& nodes,
                                   const std::vector<WeightedEdge>& edges,
                                   const FiniteMetric* base = nullptr);

// Restriction of m to the given point indices (order preserved).
FiniteMetric restrict_metric(const FiniteMetric& m, const std::vector<std::size_t>& indices);

}  // namespace embedlab
