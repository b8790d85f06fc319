#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace embedlab {

// Intersection graph of the 2- and 3-element subsets of [n]: vertices are
// the subsets (1-based elements, pairs listed before triples, each family in
// lexicographic order), with an edge between {i, j} and every {i, j, k}.
// G_i denotes the subgraph induced on the subsets containing i.
struct BranchingGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> vertices;           // sorted element lists
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // vertex index pairs
    std::vector<std::vector<std::size_t>> adjacency;

    // Vertex index of a subset given as a sorted element list.
    std::size_t vertex_index(const std::vector<std::size_t>& subset) const;
};

// Builds the graph and verifies, before returning: every G_i is connected,
// every G_i intersected with G_j is connected and nonempty, no vertex lies
// in more than 3 of the G_i, and every 3-subset is present.  Error TooSmall
// for n < 3.
BranchingGraph branching_graph(std::size_t n);

}  // namespace embedlab
