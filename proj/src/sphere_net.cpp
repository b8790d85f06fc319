#include "embedlab/sphere_net.hpp"

#include <cmath>

namespace embedlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SphereNet epsilon_dense_sphere(std::size_t d, double radius, double eps) {
    if (d != 2 && d != 3)
        fail(ErrorCode::UnsupportedDimension, "sphere net supports d = 2 or 3");
    if (!(radius > 0.0) || !(eps > 0.0))
        fail(ErrorCode::DegenerateParameters, "radius and eps must be positive");
    if (eps > 2.0 * radius)
        fail(ErrorCode::DegenerateParameters, "eps exceeds the sphere diameter");

    SphereNet net;
    net.dim = d;
    net.radius = radius;
    net.epsilon = eps;

    if (d == 2) {
        auto m = static_cast<std::size_t>(std::ceil(2.0 * kPi * radius / eps));
        if (m < 3) m = 3;
        net.points.reserve(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(m);
            net.points.push_back(radius * std::cos(a));
            net.points.push_back(radius * std::sin(a));
        }
        return net;
    }

    // Latitude rings at angular pitch <= eps/R, each sampled so the in-ring
    // arc spacing is <= eps.
    auto n_lat = static_cast<std::size_t>(std::ceil(kPi * radius / eps));
    if (n_lat < 2) n_lat = 2;
    for (std::size_t i = 0; i < n_lat; ++i) {
        double phi = -0.5 * kPi + (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(n_lat);
        double c = std::cos(phi);
        auto n_lon = static_cast<std::size_t>(std::ceil(2.0 * kPi * radius * c / eps));
        if (n_lon < 1) n_lon = 1;
        for (std::size_t j = 0; j < n_lon; ++j) {
            double lam = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_lon);
            net.points.push_back(radius * c * std::cos(lam));
            net.points.push_back(radius * c * std::sin(lam));
            net.points.push_back(radius * std::sin(phi));
        }
    }
    return net;
}

}  // namespace embedlab
