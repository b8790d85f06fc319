#include "embedlab/branching.hpp"

#include <algorithm>
#include <string>

#include "embedlab/errors.hpp"

namespace embedlab {

namespace {

// Connectivity of the subgraph induced on `keep` (by vertex index).
bool induced_connected(const BranchingGraph& g, const std::vector<char>& keep) {
    std::size_t total = 0, seed = g.vertices.size();
    for (std::size_t v = 0; v < keep.size(); ++v)
        if (keep[v]) {
            ++total;
            seed = v;
        }
    if (total == 0) return false;
    std::vector<char> seen(keep.size(), 0);
    std::vector<std::size_t> stack{seed};
    seen[seed] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : g.adjacency[v])
            if (keep[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == total;
}

}  // namespace

std::size_t BranchingGraph::vertex_index(const std::vector<std::size_t>& subset) const {
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == subset) return v;
    fail(ErrorCode::InvalidArgument, "subset is not a vertex of the branching graph");
}

BranchingGraph branching_graph(std::size_t n) {
    if (n < 3) fail(ErrorCode::TooSmall, "branching graph needs n >= 3");

    BranchingGraph g;
    g.n = n;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) g.vertices.push_back({i, j});
    const std::size_t pair_count = g.vertices.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k) g.vertices.push_back({i, j, k});

    g.adjacency.resize(g.vertices.size());
    for (std::size_t t = pair_count; t < g.vertices.size(); ++t) {
        const auto& triple = g.vertices[t];
        for (std::size_t drop = 0; drop < 3; ++drop) {
            std::vector<std::size_t> pair;
            for (std::size_t s = 0; s < 3; ++s)
                if (s != drop) pair.push_back(triple[s]);
            std::size_t p = g.vertex_index(pair);
            g.edges.emplace_back(p, t);
            g.adjacency[p].push_back(t);
            g.adjacency[t].push_back(p);
        }
    }

    // Structural invariants, checked on the finished graph.
    auto membership = [&](std::size_t v, std::size_t i) {
        const auto& s = g.vertices[v];
        return std::find(s.begin(), s.end(), i) != s.end();
    };
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::size_t count = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (membership(v, i)) ++count;
        if (count > 3)
            fail(ErrorCode::InvalidArgument, "vertex lies in more than three subgraphs");
    }
    std::vector<char> keep(g.vertices.size());
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = membership(v, i);
        if (!induced_connected(g, keep))
            fail(ErrorCode::InvalidArgument,
                 "subgraph G_" + std::to_string(i) + " is not connected");
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            for (std::size_t v = 0; v < keep.size(); ++v)
                keep[v] = membership(v, i) && membership(v, j);
            if (!induced_connected(g, keep))
                fail(ErrorCode::InvalidArgument, "subgraph intersection G_" + std::to_string(i) +
                                                     " and G_" + std::to_string(j) +
                                                     " is not connected");
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                g.vertex_index({i, j, k});  // errors if absent
    return g;
}

}  // namespace embedlab
