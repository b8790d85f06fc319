#include "embedlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "embedlab/curve_checks.hpp"
#include "embedlab/errors.hpp"

namespace embedlab {
namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Bounding box plus the emission transform (y flipped about the box center
// so the document reads with y growing upward).
struct Frame {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;

    void grow(P2 p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    static Frame of(const std::vector<P2>& pts) {
        Frame f;
        if (pts.empty()) return f;
        f.xmin = f.xmax = pts[0].x;
        f.ymin = f.ymax = pts[0].y;
        for (const P2& p : pts) f.grow(p);
        return f;
    }
    double extent() const { return std::max(xmax - xmin, ymax - ymin); }
    double flip(double y) const { return ymin + ymax - y; }

    std::string header() const {
        const double pad = 0.05 * std::max(extent(), 1e-9);
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
        out += num(xmin - pad) + " " + num(ymin - pad) + " " +
               num(xmax - xmin + 2 * pad) + " " + num(ymax - ymin + 2 * pad) +
               "\">\n";
        return out;
    }
};

std::string path_data(const Frame& f, const std::vector<P2>& pts, bool closed) {
    std::string d = "M " + num(pts[0].x) + " " + num(f.flip(pts[0].y));
    for (std::size_t i = 1; i < pts.size(); ++i)
        d += " L " + num(pts[i].x) + " " + num(f.flip(pts[i].y));
    if (closed) d += " Z";
    return d;
}

}  // namespace

std::string svg_curves_and_holes(const std::vector<ClosedPolyline>& curves,
                                 double pitch) {
    std::vector<P2> all;
    for (const auto& c : curves)
        all.insert(all.end(), c.vertices.begin(), c.vertices.end());
    const Frame f = Frame::of(all);
    std::string out = f.header();

    const std::string sw = num(std::max(f.extent(), 1e-9) / 400.0);
    for (const auto& c : curves)
        out += "  <path d=\"" + path_data(f, c.vertices, true) +
               "\" fill=\"#4a90d9\" fill-opacity=\"0.12\" stroke=\"#1f3b5c\" "
               "stroke-width=\"" + sw + "\"/>\n";

    if (!curves.empty()) {
        const std::vector<std::size_t> order =
            nesting_order(curves, pitch > 0.0 ? pitch : 0.0);
        const std::string fs = num(std::max(f.extent(), 1e-9) / 25.0);
        for (std::size_t r = 0; r < order.size(); ++r) {
            const P2 at = curves[order[r]].vertices.front();
            out += "  <text x=\"" + num(at.x) + "\" y=\"" + num(f.flip(at.y)) +
                   "\" font-size=\"" + fs + "\" fill=\"#7a1f1f\">" +
                   std::to_string(r + 1) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string svg_embedding2d(const EuclideanEmbedding& e,
                            const std::vector<std::vector<std::size_t>>& closed_chains,
                            const std::vector<std::vector<std::size_t>>& open_chains) {
    if (e.dim != 2)
        fail(ErrorCode::UnsupportedDimension, "embedding2d render needs dim 2");
    const std::size_t n = e.size();
    std::vector<P2> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = {e.coords[2 * i], e.coords[2 * i + 1]};
    const Frame f = Frame::of(pts);
    std::string out = f.header();
    const double ext = std::max(f.extent(), 1e-9);
    const std::string sw = num(ext / 400.0);

    auto chain = [&](const std::vector<std::size_t>& idx, bool closed,
                     const char* color) {
        std::vector<P2> line;
        for (const std::size_t i : idx) {
            if (i >= n) fail(ErrorCode::InvalidArgument, "chain index out of range");
            line.push_back(pts[i]);
        }
        if (line.size() < 2) return;
        out += "  <path d=\"" + path_data(f, line, closed) + "\" fill=\"none\" "
               "stroke=\"" + std::string(color) + "\" stroke-width=\"" + sw +
               "\"/>\n";
    };
    for (const auto& c : closed_chains) chain(c, true, "#1f3b5c");
    for (const auto& c : open_chains) chain(c, false, "#b3541e");

    const std::string r = num(ext / 200.0);
    for (const P2& p : pts)
        out += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(f.flip(p.y)) +
               "\" r=\"" + r + "\" fill=\"#222222\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string svg_k33_drawing(const K33Space& s) {
    std::vector<P2> all = s.drawing;
    for (const P2& p : s.a_vertex) all.push_back(p);
    for (const P2& p : s.b_vertex) all.push_back(p);
    const Frame f = Frame::of(all);
    std::string out = f.header();
    const double ext = std::max(f.extent(), 1e-9);
    const std::string sw = num(ext / 600.0);

    // One polyline per K33 edge: anchor, samples in rank order, anchor.
    for (std::size_t edge = 0; edge < 9; ++edge) {
        const auto ends = k33_edge_ends(edge);
        std::vector<P2> line{s.a_vertex[ends.first]};
        std::vector<std::pair<std::size_t, std::size_t>> ranked;
        for (std::size_t i = 0; i < s.n; ++i)
            if (s.edge_of[i] == edge) ranked.push_back({s.rank_on_edge[i], i});
        std::sort(ranked.begin(), ranked.end());
        for (const auto& [rank, i] : ranked) line.push_back(s.drawing[i]);
        line.push_back(s.b_vertex[ends.second]);
        out += "  <path d=\"" + path_data(f, line, false) +
               "\" fill=\"none\" stroke=\"#9aa5b1\" stroke-width=\"" + sw +
               "\"/>\n";
    }

    // Collapsed strip marked by a dashed box.
    const double x0 = s.s, x1 = static_cast<double>(s.m) * s.s;
    out += "  <path d=\"" +
           path_data(f, {{x0, 0.0}, {x1, 0.0}, {x1, s.h0}, {x0, s.h0}}, true) +
           "\" fill=\"none\" stroke=\"#7a1f1f\" stroke-width=\"" + sw +
           "\" stroke-dasharray=\"" + num(ext / 100.0) + "\"/>\n";

    const std::string r = num(ext / 250.0);
    for (std::size_t i = 0; i < s.n; ++i) {
        const char* color = s.role[i] == StripRole::P   ? "#1f5cb3"
                            : s.role[i] == StripRole::Q ? "#b31f1f"
                                                        : "#444444";
        out += "  <circle cx=\"" + num(s.drawing[i].x) + "\" cy=\"" +
               num(f.flip(s.drawing[i].y)) + "\" r=\"" + r + "\" fill=\"" +
               color + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string svg_ladder_graph(const PlanarLadderSpace& s) {
    const Frame f = Frame::of(s.drawing);
    std::string out = f.header();
    const double ext = std::max(f.extent(), 1e-9);
    const std::string sw = num(ext / 500.0);

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < s.metric.size(); ++i)
        index[s.metric.labels()[i]] = i;

    for (const WeightedEdge& e : s.edges) {
        const P2 a = s.drawing[index.at(e.a)];
        const P2 b = s.drawing[index.at(e.b)];
        if (e.w == s.rung_weight && s.rung_weight != 1.0) {
            // Rungs drawn as double lines, offset perpendicular to the
            // segment.
            P2 d = b - a;
            const double len = std::max(norm(d), 1e-12);
            const P2 off = (ext / 300.0) * P2{-d.y / len, d.x / len};
            for (const double sgn : {1.0, -1.0}) {
                const P2 u = a + sgn * off, v = b + sgn * off;
                out += "  <path d=\"" + path_data(f, {u, v}, false) +
                       "\" fill=\"none\" stroke=\"#b3541e\" stroke-width=\"" +
                       sw + "\"/>\n";
            }
        } else {
            out += "  <path d=\"" + path_data(f, {a, b}, false) +
                   "\" fill=\"none\" stroke=\"#1f3b5c\" stroke-width=\"" + sw +
                   "\"/>\n";
        }
    }

    const std::string r_small = num(ext / 350.0), r_big = num(ext / 150.0);
    for (std::size_t i = 0; i < s.drawing.size(); ++i) {
        const bool is_branch = std::find(s.branch.begin(), s.branch.end(), i) !=
                               s.branch.end();
        out += "  <circle cx=\"" + num(s.drawing[i].x) + "\" cy=\"" +
               num(f.flip(s.drawing[i].y)) + "\" r=\"" +
               (is_branch ? r_big : r_small) + "\" fill=\"#222222\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace embedlab
