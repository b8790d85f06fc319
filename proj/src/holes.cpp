#include "embedlab/holes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <utility>

#include "embedlab/errors.hpp"

namespace embedlab {

namespace {

constexpr double kFar = 1e20;  // finite stand-in for infinity in the transform

double point_segment_dist(P2 p, P2 a, P2 b) {
    P2 ab = b - a;
    double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    P2 q{a.x + t * ab.x, a.y + t * ab.y};
    return dist(p, q);
}

// Occupancy grid with a 2-cell margin all around the curve bounding box, so
// the outside flood fill can reach every side.
struct Grid {
    double h = 0.0;
    double x0 = 0.0, y0 = 0.0;  // center of cell (0, 0)
    std::size_t nx = 0, ny = 0;
    std::vector<char> boundary;           // nx * ny
    std::vector<std::int32_t> component;  // -1 boundary, 0 unbounded, > 0 hole id

    std::size_t at(std::size_t ix, std::size_t iy) const { return iy * nx + ix; }
    P2 center(std::size_t ix, std::size_t iy) const {
        return {x0 + static_cast<double>(ix) * h, y0 + static_cast<double>(iy) * h};
    }
};

Grid rasterize(const ClosedPolyline& curve, double h) {
    double lox = curve.vertices[0].x, hix = lox;
    double loy = curve.vertices[0].y, hiy = loy;
    for (const P2& v : curve.vertices) {
        lox = std::min(lox, v.x);
        hix = std::max(hix, v.x);
        loy = std::min(loy, v.y);
        hiy = std::max(hiy, v.y);
    }
    if (hix - lox <= h && hiy - loy <= h)
        fail(ErrorCode::DegenerateCurve, "curve fits inside a single grid cell");

    Grid g;
    g.h = h;
    g.x0 = lox - 2.0 * h;
    g.y0 = loy - 2.0 * h;
    g.nx = static_cast<std::size_t>(std::ceil((hix - lox) / h)) + 5;
    g.ny = static_cast<std::size_t>(std::ceil((hiy - loy) / h)) + 5;
    if (g.nx * g.ny > 16u * 1024u * 1024u)
        fail(ErrorCode::TooLarge, "hole grid exceeds the cell budget; increase h");
    g.boundary.assign(g.nx * g.ny, 0);

    const double reach = h / std::sqrt(2.0);  // cell circumradius
    const std::size_t n = curve.vertices.size();
    for (std::size_t s = 0; s < n; ++s) {
        P2 a = curve.vertices[s];
        P2 b = curve.vertices[(s + 1) % n];
        double slox = std::min(a.x, b.x) - reach, shix = std::max(a.x, b.x) + reach;
        double sloy = std::min(a.y, b.y) - reach, shiy = std::max(a.y, b.y) + reach;
        auto clamp_ix = [&](double x) {
            double c = std::floor((x - g.x0) / h + 0.5);
            return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(g.nx - 1)));
        };
        auto clamp_iy = [&](double y) {
            double c = std::floor((y - g.y0) / h + 0.5);
            return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(g.ny - 1)));
        };
        std::size_t ix0 = clamp_ix(slox), ix1 = clamp_ix(shix);
        std::size_t iy0 = clamp_iy(sloy), iy1 = clamp_iy(shiy);
        for (std::size_t iy = iy0; iy <= iy1; ++iy)
            for (std::size_t ix = ix0; ix <= ix1; ++ix)
                if (!g.boundary[g.at(ix, iy)] &&
                    point_segment_dist(g.center(ix, iy), a, b) <= reach)
                    g.boundary[g.at(ix, iy)] = 1;
    }
    return g;
}

// Labels complement components: BFS from the margin corner (always outside)
// gives component 0, every remaining free region gets the next id.
void label_components(Grid& g) {
    g.component.assign(g.nx * g.ny, -1);
    std::int32_t next_id = 0;
    std::vector<std::size_t> stack;
    auto flood = [&](std::size_t seed, std::int32_t id) {
        stack.clear();
        stack.push_back(seed);
        g.component[seed] = id;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            std::size_t ix = cur % g.nx, iy = cur / g.nx;
            auto push = [&](std::size_t jx, std::size_t jy) {
                std::size_t c = g.at(jx, jy);
                if (!g.boundary[c] && g.component[c] == -1) {
                    g.component[c] = id;
                    stack.push_back(c);
                }
            };
            if (ix > 0) push(ix - 1, iy);
            if (ix + 1 < g.nx) push(ix + 1, iy);
            if (iy > 0) push(ix, iy - 1);
            if (iy + 1 < g.ny) push(ix, iy + 1);
        }
    };
    flood(g.at(0, 0), next_id++);
    for (std::size_t c = 0; c < g.nx * g.ny; ++c)
        if (!g.boundary[c] && g.component[c] == -1) flood(c, next_id++);
}

// One-dimensional squared-distance transform (lower envelope of parabolas).
void dt1d(const std::vector<double>& f, std::vector<double>& out, std::vector<int>& v,
          std::vector<double>& z) {
    const int n = static_cast<int>(f.size());
    int k = 0;
    v[0] = 0;
    z[0] = -kFar;
    z[1] = kFar;
    for (int q = 1; q < n; ++q) {
        double s;
        for (;;) {
            int p = v[k];
            s = (f[q] + static_cast<double>(q) * q - f[p] - static_cast<double>(p) * p) /
                (2.0 * (q - p));
            if (s > z[k]) break;
            --k;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kFar;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        double d = q - v[k];
        out[q] = d * d + f[v[k]];
    }
}

// Exact squared Euclidean distance (cell units) to the nearest boundary cell.
std::vector<double> distance_transform(const Grid& g) {
    std::vector<double> d(g.nx * g.ny);
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = g.boundary[c] ? 0.0 : kFar;

    std::size_t len = std::max(g.nx, g.ny);
    std::vector<double> f(len), out(len), z(len + 1);
    std::vector<int> v(len);
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
        f.resize(g.ny);
        out.resize(g.ny);
        for (std::size_t iy = 0; iy < g.ny; ++iy) f[iy] = d[g.at(ix, iy)];
        dt1d(f, out, v, z);
        for (std::size_t iy = 0; iy < g.ny; ++iy) d[g.at(ix, iy)] = out[iy];
    }
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        f.resize(g.nx);
        out.resize(g.nx);
        for (std::size_t ix = 0; ix < g.nx; ++ix) f[ix] = d[g.at(ix, iy)];
        dt1d(f, out, v, z);
        for (std::size_t ix = 0; ix < g.nx; ++ix) d[g.at(ix, iy)] = out[ix];
    }
    return d;
}

double effective_pitch(const ClosedPolyline& curve, double h) {
    double diam = curve.diameter();
    if (h <= 0.0) h = diam / 512.0;
    if (h > diam / 16.0)
        fail(ErrorCode::InvalidArgument, "grid pitch coarser than diameter/16");
    return h;
}

}  // namespace

HoleReport compute_holes(const ClosedPolyline& curve, double h) {
    h = effective_pitch(curve, h);
    Grid g = rasterize(curve, h);
    label_components(g);
    std::vector<double> d2 = distance_transform(g);

    std::int32_t max_id = 0;
    for (std::int32_t id : g.component) max_id = std::max(max_id, id);

    HoleReport report;
    report.grid_pitch = h;
    report.unbounded_component_id = 0;
    report.holes.resize(static_cast<std::size_t>(max_id));  // ids 1..max_id
    std::vector<double> best(static_cast<std::size_t>(max_id) + 1, -1.0);
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            std::int32_t id = g.component[g.at(ix, iy)];
            if (id <= 0) continue;
            Hole& hole = report.holes[static_cast<std::size_t>(id - 1)];
            hole.cell_count += 1;
            double val = d2[g.at(ix, iy)];
            if (val > best[static_cast<std::size_t>(id)]) {
                best[static_cast<std::size_t>(id)] = val;
                hole.inradius_estimate = std::sqrt(val) * h;
                hole.representative_point = g.center(ix, iy);
            }
        }
    }
    return report;
}

int flood_contains(const ClosedPolyline& curve, double h, P2 p) {
    h = effective_pitch(curve, h);
    Grid g = rasterize(curve, h);
    label_components(g);
    double fx = std::floor((p.x - g.x0) / h + 0.5);
    double fy = std::floor((p.y - g.y0) / h + 0.5);
    if (fx < 0.0 || fy < 0.0 || fx >= static_cast<double>(g.nx) ||
        fy >= static_cast<double>(g.ny))
        return -1;  // beyond the padded box: outside
    std::size_t c = g.at(static_cast<std::size_t>(fx), static_cast<std::size_t>(fy));
    if (g.boundary[c]) return 0;
    return g.component[c] == 0 ? -1 : 1;
}

}  // namespace embedlab
