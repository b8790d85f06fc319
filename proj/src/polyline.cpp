#include "embedlab/polyline.hpp"

#include <algorithm>
#include <cmath>

namespace embedlab {

double ClosedPolyline::diameter() const {
    double lox = vertices[0].x, hix = lox, loy = vertices[0].y, hiy = loy;
    for (const P2& v : vertices) {
        lox = std::min(lox, v.x);
        hix = std::max(hix, v.x);
        loy = std::min(loy, v.y);
        hiy = std::max(hiy, v.y);
    }
    return std::hypot(hix - lox, hiy - loy);
}

ClosedPolyline make_closed_polyline(std::vector<P2> vertices) {
    if (vertices.size() < 3)
        fail(ErrorCode::DegenerateCurve, "closed polyline needs at least three vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const P2& a = vertices[i];
        const P2& b = vertices[(i + 1) % vertices.size()];
        if (a.x == b.x && a.y == b.y)
            fail(ErrorCode::DegenerateCurve,
                 "consecutive duplicate vertex at " + std::to_string(i));
    }
    return ClosedPolyline{std::move(vertices)};
}

PlExtension pl_extension(const SphereNet& net, const std::vector<P2>& images) {
    if (net.dim != 2)
        fail(ErrorCode::UnsupportedDimension, "PL extension over a circle net only");
    if (images.size() != net.count())
        fail(ErrorCode::InvalidArgument, "one image per net point required");

    PlExtension out;
    out.curve = make_closed_polyline(images);
    const std::size_t m = net.count();
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m;
        P2 a{net.point(i)[0], net.point(i)[1]};
        P2 b{net.point(j)[0], net.point(j)[1]};
        double dom = dist(a, b);
        double img = dist(images[i], images[j]);
        out.pl_lipschitz = std::max(out.pl_lipschitz, img / dom);
    }
    return out;
}

bool point_in_polygon(P2 p, const std::vector<P2>& polygon) {
    bool inside = false;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const P2& a = polygon[j];
        const P2& b = polygon[i];
        // Half-open in y: edge counts if exactly one endpoint is strictly
        // above the horizontal ray through p.
        if ((b.y > p.y) != (a.y > p.y)) {
            double x_cross = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

}  // namespace embedlab
