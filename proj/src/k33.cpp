#include "embedlab/k33.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "embedlab/errors.hpp"

namespace embedlab {
namespace {

constexpr double kColumnStep = 0.24;
constexpr double kARowY = 0.45;
constexpr double kBRowY = 0.30;
constexpr double kRunCenterFrac = 0.75;  // runs sit 75% of the way toward b

// Ordinary edges in fixed order; ids 2..8 index into this table.
constexpr std::size_t kOrdinary[7][2] = {
    {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};

double rect_dist(double s, double w, std::size_t i, std::size_t j) {
    const double dx = (static_cast<double>(i) - static_cast<double>(j)) * s;
    return std::sqrt(dx * dx + w * w);
}

}  // namespace

std::pair<std::size_t, std::size_t> k33_edge_ends(std::size_t edge_id) {
    if (edge_id == 0) return {0, 0};
    if (edge_id == 1) return {1, 1};
    if (edge_id <= 8)
        return {kOrdinary[edge_id - 2][0], kOrdinary[edge_id - 2][1]};
    fail(ErrorCode::InvalidArgument, "k33 edge id out of range");
}

K33Space k33_space(std::size_t n, std::size_t k, double eps, double c1) {
    if (!(eps > 0.0) || c1 <= 0.0)
        fail(ErrorCode::ParameterRangeViolation, "eps and c1 must be positive");
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    if (k == 0 || kd * kd * eps < 1.0 || kd * kd > eps * nd * nd)
        fail(ErrorCode::ParameterRangeViolation,
             "need 1/sqrt(eps) <= k <= sqrt(eps) * n");

    K33Space out;
    out.n = n;
    out.k = k;
    out.eps = eps;
    out.c1 = c1;
    out.w = c1 * std::sqrt(eps) / kd;
    out.s = 1.0 / nd;
    out.m = n / 6;
    out.h0 = std::min(out.s, out.w) / 2.0;
    if (out.m < 4)
        fail(ErrorCode::ParameterRangeViolation, "need floor(n/6) >= 4");
    if (out.w > 0.05)
        fail(ErrorCode::ParameterRangeViolation,
             "strip height w exceeds the drawing frame; raise k or lower eps");

    const double center = (static_cast<double>(out.m) + 1.0) * out.s / 2.0;
    const double cols[3] = {center - kColumnStep, center, center + kColumnStep};
    for (std::size_t i = 0; i < 3; ++i) {
        out.a_vertex[i] = {cols[i], kARowY};
        out.b_vertex[i] = {cols[i], kBRowY};
    }

    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= out.m; ++i) {
        labels.push_back("p" + std::to_string(i));
        out.drawing.push_back({static_cast<double>(i) * out.s, out.h0});
        out.edge_of.push_back(0);
        out.rank_on_edge.push_back(i - 1);
        out.role.push_back(StripRole::P);
        out.strip_index.push_back(i);
    }
    for (std::size_t j = 1; j <= out.m; ++j) {
        labels.push_back("q" + std::to_string(j));
        out.drawing.push_back({static_cast<double>(j) * out.s, 0.0});
        out.edge_of.push_back(1);
        out.rank_on_edge.push_back(j - 1);
        out.role.push_back(StripRole::Q);
        out.strip_index.push_back(j);
    }

    // Spread the remaining samples over the seven ordinary edges, larger
    // counts first, as runs of spacing s centered on the 75% point.
    const std::size_t ordinary = n - 2 * out.m;
    for (std::size_t t = 0; t < 7; ++t) {
        std::size_t count = ordinary / 7 + (t < ordinary % 7 ? 1 : 0);
        const auto ends = k33_edge_ends(t + 2);
        const P2 a = out.a_vertex[ends.first];
        const P2 b = out.b_vertex[ends.second];
        const double len = dist(a, b);
        for (std::size_t r = 0; r < count; ++r) {
            const double offset = (static_cast<double>(r) -
                                   (static_cast<double>(count) - 1.0) / 2.0) *
                                  out.s / len;
            const double f = kRunCenterFrac + offset;
            labels.push_back("e" + std::to_string(t + 2) + "#" +
                             std::to_string(r));
            out.drawing.push_back(a + f * (b - a));
            out.edge_of.push_back(t + 2);
            out.rank_on_edge.push_back(r);
            out.role.push_back(StripRole::None);
            out.strip_index.push_back(0);
        }
    }

    out.metric = FiniteMetric(labels, std::vector<double>(n * n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d;
            const bool pq = (out.role[i] == StripRole::P &&
                             out.role[j] == StripRole::Q) ||
                            (out.role[i] == StripRole::Q &&
                             out.role[j] == StripRole::P);
            if (pq)
                d = rect_dist(out.s, out.w, out.strip_index[i],
                              out.strip_index[j]);
            else
                d = dist(out.drawing[i], out.drawing[j]);
            out.metric.set(i, j, d);
        }

    const ValidationResult v = validate_metric(out.metric);
    if (!v.ok)
        fail(ErrorCode::InvalidArgument,
             "k33 hybrid distances are not a metric: " + v.message);
    return out;
}

EuclideanEmbedding identity_drawing_embedding(const K33Space& s) {
    EuclideanEmbedding e;
    e.dim = 2;
    e.coords.reserve(2 * s.n);
    for (const P2& p : s.drawing) {
        e.coords.push_back(p.x);
        e.coords.push_back(p.y);
    }
    return e;
}

EuclideanEmbedding k33_subspace_embedding(const K33Space& s,
                                          const std::vector<std::size_t>& subset) {
    if (subset.size() > s.k)
        fail(ErrorCode::ParameterRangeViolation,
             "subset larger than k points");
    std::vector<std::size_t> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.back() >= s.n)
        fail(ErrorCode::InvalidArgument, "subset index out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::InvalidArgument, "subset has repeated indices");

    std::vector<bool> occupied(s.m + 1, false);
    for (std::size_t idx : subset)
        if (s.role[idx] != StripRole::None) occupied[s.strip_index[idx]] = true;

    std::size_t best_len = 0, run_len = 0;
    for (std::size_t i = 1; i <= s.m; ++i) {
        run_len = occupied[i] ? 0 : run_len + 1;
        best_len = std::max(best_len, run_len);
    }
    if (best_len == 0)
        fail(ErrorCode::NoGapFound, "every strip index is occupied");

    // Open the strip about its midline: p up to +w/2, q down to -w/2, so all
    // rectangle distances are realized exactly; web points keep the drawing.
    const double mid = s.h0 / 2.0;
    EuclideanEmbedding out;
    out.dim = 2;
    out.coords.reserve(2 * subset.size());
    for (std::size_t idx : subset) {
        P2 pos = s.drawing[idx];
        if (s.role[idx] == StripRole::P)
            pos = {static_cast<double>(s.strip_index[idx]) * s.s, mid + s.w / 2.0};
        else if (s.role[idx] == StripRole::Q)
            pos = {static_cast<double>(s.strip_index[idx]) * s.s, mid - s.w / 2.0};
        out.coords.push_back(pos.x);
        out.coords.push_back(pos.y);
    }
    return out;
}

double crossing_certificate(const K33Space& s, const EuclideanEmbedding& e) {
    if (e.size() != s.metric.size())
        fail(ErrorCode::IncompleteEmbedding,
             "certificate needs an image for every point");
    if (e.dim != 2)
        fail(ErrorCode::UnsupportedDimension,
             "crossing certificate is planar only");

    std::vector<std::vector<std::size_t>> on_edge(9);
    for (std::size_t i = 0; i < s.n; ++i) on_edge[s.edge_of[i]].push_back(i);
    for (auto& pts : on_edge)
        std::sort(pts.begin(), pts.end(), [&](std::size_t a, std::size_t b) {
            return s.rank_on_edge[a] < s.rank_on_edge[b];
        });

    auto at = [&](std::size_t i) -> P2 {
        return {e.coords[2 * i], e.coords[2 * i + 1]};
    };
    auto orient = [](P2 a, P2 b, P2 c) { return cross(b - a, c - a); };

    double best = 0.0;
    for (std::size_t ea = 0; ea < 9; ++ea)
        for (std::size_t eb = ea + 1; eb < 9; ++eb) {
            const auto ta = k33_edge_ends(ea);
            const auto tb = k33_edge_ends(eb);
            if (ta.first == tb.first || ta.second == tb.second) continue;
            for (std::size_t ia = 0; ia + 1 < on_edge[ea].size(); ++ia)
                for (std::size_t ib = 0; ib + 1 < on_edge[eb].size(); ++ib) {
                    const std::size_t x = on_edge[ea][ia], y = on_edge[ea][ia + 1];
                    const std::size_t xp = on_edge[eb][ib], yp = on_edge[eb][ib + 1];
                    const P2 A = at(x), B = at(y), C = at(xp), D = at(yp);
                    // Proper crossing: endpoints strictly on opposite sides,
                    // both ways; touching or collinear overlaps don't count.
                    if (orient(A, B, C) * orient(A, B, D) >= 0.0) continue;
                    if (orient(C, D, A) * orient(C, D, B) >= 0.0) continue;
                    const double denom = s.metric.at(x, y) + s.metric.at(xp, yp);
                    best = std::max(best, s.metric.at(x, xp) / denom);
                }
        }
    return best;
}

}  // namespace embedlab
