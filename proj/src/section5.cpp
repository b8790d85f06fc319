#include "embedlab/section5.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "embedlab/errors.hpp"

namespace embedlab {

namespace {

double net_point_dist(const SphereNet& net, std::size_t a, std::size_t b) {
    const double* pa = net.point(a);
    const double* pb = net.point(b);
    double s = 0.0;
    for (std::size_t k = 0; k < net.dim; ++k) {
        double d = pa[k] - pb[k];
        s += d * d;
    }
    return std::sqrt(s);
}

// Greedy farthest-point traversal: start at net point 0, then repeatedly
// take the net point maximizing the distance to the nearest chosen locus.
std::vector<std::size_t> greedy_loci(const SphereNet& net, std::size_t count) {
    std::vector<std::size_t> chosen;
    if (count == 0) return chosen;
    const std::size_t m = net.count();
    std::vector<double> nearest(m, std::numeric_limits<double>::infinity());
    chosen.push_back(0);
    while (chosen.size() < count) {
        for (std::size_t v = 0; v < m; ++v)
            nearest[v] = std::min(nearest[v], net_point_dist(net, v, chosen.back()));
        std::size_t best = 0;
        for (std::size_t v = 1; v < m; ++v)
            if (nearest[v] > nearest[best]) best = v;
        chosen.push_back(best);
    }
    return chosen;
}

std::string layer_label(std::size_t elem, std::size_t net_index) {
    return "L" + std::to_string(elem) + "#" + std::to_string(net_index);
}

std::string path_label(std::size_t path_id, std::size_t step) {
    return "P" + std::to_string(path_id) + "#" + std::to_string(step);
}

}  // namespace

Section5Space section5_space(const BetweennessInstance& t, double d_lip, std::size_t dim,
                             double radius_override, double epsilon_override,
                             double separation_override) {
    if (t.semantics != TripleSemantics::NonBetweenness)
        fail(ErrorCode::WrongSemantics, "reduction consumes non-betweenness instances");
    if (dim != 2 && dim != 3)
        fail(ErrorCode::UnsupportedDimension, "reduction space supports dim 2 or 3");
    if (t.n < 1) fail(ErrorCode::TooFewPoints, "instance has no elements");
    if (!(d_lip >= 1.0)) fail(ErrorCode::DegenerateParameters, "distortion budget must be >= 1");

    const double n_real = static_cast<double>(t.n);
    double eps = epsilon_override > 0.0 ? epsilon_override : 1.0 / (64.0 * d_lip);
    double radius = radius_override > 0.0 ? radius_override : 64.0 * n_real * d_lip;
    double separation =
        separation_override > 0.0 ? separation_override : 8.0 * (1.0 + d_lip * eps) * d_lip;

    Section5Space s;
    s.instance = t;
    s.net = epsilon_dense_sphere(dim, radius, eps);
    s.d_lip = d_lip;
    s.separation = separation;
    s.t_steps = static_cast<std::size_t>(std::floor(1.0 / eps));
    if (s.t_steps < 1) s.t_steps = 1;

    const std::size_t m = s.net.count();
    if (t.n * m > 40000)
        fail(ErrorCode::TooLarge, "reduction space exceeds the dense-metric budget");

    // One greedy locus per group of triples sharing an unordered element
    // set; group members attach at consecutive net points from the locus.
    std::map<std::array<std::size_t, 3>, std::vector<std::size_t>> groups;
    for (std::size_t idx = 0; idx < t.triples.size(); ++idx) {
        std::array<std::size_t, 3> key = t.triples[idx];
        std::sort(key.begin(), key.end());
        groups[key].push_back(idx);
    }
    std::vector<std::size_t> centers = greedy_loci(s.net, groups.size());
    for (std::size_t a = 0; a < centers.size(); ++a)
        for (std::size_t b = a + 1; b < centers.size(); ++b)
            if (net_point_dist(s.net, centers[a], centers[b]) < separation)
                fail(ErrorCode::LociTooCrowded,
                     "loci closer than the required separation " + std::to_string(separation));
    s.loci.assign(t.triples.size(), 0);
    std::size_t group_no = 0;
    for (const auto& [key, members] : groups) {
        for (std::size_t r = 0; r < members.size(); ++r)
            s.loci[members[r]] = (centers[group_no] + r) % m;
        ++group_no;
    }

    // Puncture: drop (layer, u) when the layer is outside some triple whose
    // locus is within distance 1 of u.
    std::vector<std::vector<char>> removed(t.n + 1, std::vector<char>(m, 0));
    for (std::size_t idx = 0; idx < t.triples.size(); ++idx) {
        const auto& [i, j, k] = t.triples[idx];
        for (std::size_t elem = 1; elem <= t.n; ++elem) {
            if (elem == i || elem == j || elem == k) continue;
            for (std::size_t u = 0; u < m; ++u)
                if (net_point_dist(s.net, u, s.loci[idx]) <= 1.0) removed[elem][u] = 1;
        }
    }

    std::vector<std::string> labels;
    std::vector<Section5Point> prov;
    for (std::size_t elem = 1; elem <= t.n; ++elem)
        for (std::size_t u = 0; u < m; ++u)
            if (!removed[elem][u]) {
                labels.push_back(layer_label(elem, u));
                prov.push_back({false, elem, u, 0, 0});
            }

    // Surviving base distances |u - u'| + [different layer].
    const std::size_t nb = labels.size();
    std::vector<double> base(nb * nb, 0.0);
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = a + 1; b < nb; ++b) {
            double d = net_point_dist(s.net, prov[a].net_index, prov[b].net_index);
            if (prov[a].layer != prov[b].layer) d += 1.0;
            base[a * nb + b] = d;
            base[b * nb + a] = d;
        }
    FiniteMetric base_metric(labels, std::move(base));

    // Connecting paths: t edges of weight 1/t from (j, locus) to (k, locus).
    std::vector<std::string> nodes = labels;
    std::vector<WeightedEdge> edges;
    const double step_w = 1.0 / static_cast<double>(s.t_steps);
    for (std::size_t idx = 0; idx < t.triples.size(); ++idx) {
        const auto& [i, j, k] = t.triples[idx];
        (void)i;
        std::string prev = layer_label(j, s.loci[idx]);
        for (std::size_t step = 1; step < s.t_steps; ++step) {
            std::string cur = path_label(idx, step);
            nodes.push_back(cur);
            prov.push_back({true, 0, s.loci[idx], idx, step});
            edges.push_back({prev, cur, step_w});
            prev = cur;
        }
        edges.push_back({prev, layer_label(k, s.loci[idx]), step_w});
    }

    s.space = shortest_path_closure(nodes, edges, &base_metric);
    if (s.space.size() != prov.size())
        fail(ErrorCode::InvalidArgument,
             "path endpoint fell into a puncture; loci separation too small");
    s.provenance = std::move(prov);
    return s;
}

EuclideanEmbedding section5_embedding(const Section5Space& s,
                                      const std::vector<std::size_t>& ordering) {
    if (!ordering_satisfies(s.instance, ordering))
        fail(ErrorCode::InconsistentOrdering, "ordering violates an instance triple");

    std::vector<std::size_t> rank(s.instance.n + 1, 0);
    for (std::size_t r = 0; r < ordering.size(); ++r) rank[ordering[r]] = r;

    const double radius = s.net.radius;
    const std::size_t dim = s.net.dim;
    EuclideanEmbedding e;
    e.dim = dim;
    e.coords.resize(s.space.size() * dim);
    for (std::size_t p = 0; p < s.provenance.size(); ++p) {
        const Section5Point& pt = s.provenance[p];
        double scale;
        if (!pt.is_path) {
            // Layer of rank r lives on the concentric sphere of radius R + r.
            scale = (radius + static_cast<double>(rank[pt.layer])) / radius;
        } else {
            // Path points interpolate radially between their endpoint layers
            // along the locus direction.
            const auto& [i, j, k] = s.instance.triples[pt.path_id];
            (void)i;
            double rj = static_cast<double>(rank[j]);
            double rk = static_cast<double>(rank[k]);
            double f = static_cast<double>(pt.step) / static_cast<double>(s.t_steps);
            scale = (radius + rj + f * (rk - rj)) / radius;
        }
        const double* v = s.net.point(pt.net_index);
        for (std::size_t c = 0; c < dim; ++c) e.coords[p * dim + c] = scale * v[c];
    }
    return e;
}

}  // namespace embedlab
