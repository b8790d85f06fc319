#include "embedlab/ladder.hpp"

#include <cmath>
#include <string>

#include "embedlab/errors.hpp"

namespace embedlab {
namespace {

bool properly_cross(P2 a, P2 b, P2 c, P2 d) {
    auto o = [](P2 p, P2 q, P2 t) { return cross(q - p, t - p); };
    return o(a, b, c) * o(a, b, d) < 0.0 && o(c, d, a) * o(c, d, b) < 0.0;
}

}  // namespace

PlanarLadderSpace planar_ladder_space(std::size_t n) {
    const std::size_t r =
        static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (r * r != n || r < 4)
        fail(ErrorCode::BadSize, "n must be a perfect square with sqrt(n) >= 4");

    PlanarLadderSpace out;
    out.n = n;
    out.r = r;
    out.rung_weight = 1.0 / static_cast<double>(r);
    const double rd = static_cast<double>(r);

    std::vector<std::string> labels;
    auto add_vertex = [&](const std::string& label, P2 pos) {
        labels.push_back(label);
        out.drawing.push_back(pos);
        return labels.size() - 1;
    };

    // Branch vertices: v0 center, v1/v2 bottom corners, v3 apex.
    const P2 vpos[4] = {{rd / 2.0, 0.35 * rd},
                        {0.0, 0.0},
                        {rd, 0.0},
                        {rd / 2.0, 0.9 * rd}};
    for (std::size_t v = 0; v < 4; ++v)
        out.branch[v] = add_vertex("v" + std::to_string(v), vpos[v]);

    auto unit_edge = [&](std::size_t i, std::size_t j) {
        out.edges.push_back({labels[i], labels[j], 1.0});
    };

    // K4 edges, each subdivided into r unit edges.  Edge 3 = (v1, v2) is the
    // bottom rail; its vertex chain is recorded for the ladder.
    const std::size_t k4[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t e = 0; e < 6; ++e) {
        const std::size_t u = out.branch[k4[e][0]], v = out.branch[k4[e][1]];
        std::size_t prev = u;
        if (e == 3) out.rail_a.push_back(u);
        for (std::size_t i = 1; i < r; ++i) {
            const double f = static_cast<double>(i) / rd;
            const P2 pos = out.drawing[u] + f * (out.drawing[v] - out.drawing[u]);
            const std::size_t mid = add_vertex(
                "s" + std::to_string(e) + "#" + std::to_string(i), pos);
            unit_edge(prev, mid);
            if (e == 3) out.rail_a.push_back(mid);
            prev = mid;
        }
        unit_edge(prev, v);
        if (e == 3) out.rail_a.push_back(v);
    }

    // Pendant paths of r unit edges.  v1 and v2 run outward along the bottom,
    // v3 straight up, and v0's path zigzags down inside the face (v0 v1 v2);
    // a subspace with a rung gap lets that path reroute to the outer face.
    for (std::size_t v = 0; v < 4; ++v) {
        std::size_t prev = out.branch[v];
        for (std::size_t j = 1; j <= r; ++j) {
            const double jd = static_cast<double>(j);
            P2 pos;
            if (v == 0)
                pos = {rd / 2.0 + (j % 2 ? 0.2 : -0.2),
                       0.35 * rd - jd * 0.3 * rd / (rd + 1.0)};
            else if (v == 1)
                pos = {-0.4 * jd, -0.1 * jd};
            else if (v == 2)
                pos = {rd + 0.4 * jd, -0.1 * jd};
            else
                pos = {rd / 2.0, 0.9 * rd + 0.4 * jd};
            const std::size_t t = add_vertex(
                "t" + std::to_string(v) + "#" + std::to_string(j), pos);
            unit_edge(prev, t);
            out.pendant[v].push_back(t);
            prev = t;
        }
    }

    // Second rail b_0..b_r drawn just below the bottom rail, unit edges along
    // it, and a rung of weight 1/r from every bottom subdivision point.
    for (std::size_t i = 0; i <= r; ++i) {
        const std::size_t b =
            add_vertex("b" + std::to_string(i), {static_cast<double>(i), -0.25});
        out.rail_b.push_back(b);
        if (i > 0) unit_edge(out.rail_b[i - 1], b);
        out.edges.push_back({labels[out.rail_a[i]], labels[b], out.rung_weight});
    }

    // The drawing certifies planarity: straight segments of edges that share
    // no endpoint must not cross.
    auto ends = [&](const WeightedEdge& e) {
        std::size_t a = labels.size(), b = labels.size();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == e.a) a = i;
            if (labels[i] == e.b) b = i;
        }
        return std::pair<std::size_t, std::size_t>(a, b);
    };
    std::vector<std::pair<std::size_t, std::size_t>> seg;
    seg.reserve(out.edges.size());
    for (const WeightedEdge& e : out.edges) seg.push_back(ends(e));
    for (std::size_t i = 0; i < seg.size(); ++i)
        for (std::size_t j = i + 1; j < seg.size(); ++j) {
            const auto [a, b] = seg[i];
            const auto [c, d] = seg[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (properly_cross(out.drawing[a], out.drawing[b], out.drawing[c],
                               out.drawing[d]))
                fail(ErrorCode::InvalidArgument,
                     "stored drawing is not planar: edges " + std::to_string(i) +
                         " and " + std::to_string(j) + " cross");
        }

    out.metric = shortest_path_closure(labels, out.edges);
    if (out.metric.size() != labels.size())
        fail(ErrorCode::InvalidArgument, "closure changed the vertex set");
    return out;
}

}  // namespace embedlab
