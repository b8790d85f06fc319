#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace embedlab {

// Planar point used throughout the 2-d topology code.
struct P2 {
    double x = 0.0;
    double y = 0.0;
};

inline P2 operator+(P2 a, P2 b) { return {a.x + b.x, a.y + b.y}; }
inline P2 operator-(P2 a, P2 b) { return {a.x - b.x, a.y - b.y}; }
inline P2 operator*(double s, P2 a) { return {s * a.x, s * a.y}; }
inline double dot(P2 a, P2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(P2 a, P2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(P2 a) { return std::hypot(a.x, a.y); }
inline double dist(P2 a, P2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Squared Euclidean distance between two rows of a flat coordinate array.
inline double row_dist2(const std::vector<double>& coords, std::size_t dim, std::size_t i,
                        std::size_t j) {
    double s = 0.0;
    const double* a = coords.data() + i * dim;
    const double* b = coords.data() + j * dim;
    for (std::size_t k = 0; k < dim; ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

inline double row_dist(const std::vector<double>& coords, std::size_t dim, std::size_t i,
                       std::size_t j) {
    return std::sqrt(row_dist2(coords, dim, i, j));
}

}  // namespace embedlab
