#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "embedlab/betweenness.hpp"
#include "embedlab/metric.hpp"
#include "embedlab/sphere_net.hpp"

namespace embedlab {

// Where a point of the reduction space came from: a surviving layer point
// (layer element 1..n, net index) or an interior path point (path id = index
// of its triple, step 1..t-1).
struct Section5Point {
    bool is_path = false;
    std::size_t layer = 0;
    std::size_t net_index = 0;
    std::size_t path_id = 0;
    std::size_t step = 0;
};

// Layered-sphere reduction space for a non-betweenness instance: n copies of
// an eps-dense sphere net (cross-layer base distance |v - v'| + 1), a locus
// per triple, punctures of radius 1 in the layers outside the triple, and a
// length-1 connecting path of floor(1/eps) unit-weight/t edges between the
// j and k layers at each locus.  The metric is the shortest-path closure of
// the surviving base distances plus the path edges.
struct Section5Space {
    BetweennessInstance instance;
    SphereNet net;
    double d_lip = 1.0;       // distortion budget D the parameters were sized for
    double separation = 0.0;  // required pairwise locus distance
    std::size_t t_steps = 1;  // edges per connecting path
    std::vector<std::size_t> loci;  // net index per triple
    FiniteMetric space;
    std::vector<Section5Point> provenance;  // one entry per metric point
};

// Builds the space.  Defaults (any override <= 0): eps = 1/(64 D),
// R = 64 n D, separation = 8 (1 + D eps) D.  Loci are chosen greedily by
// farthest-point traversal over the net, one locus per group of triples
// sharing an unordered element set; triples within a group attach at
// consecutive net points next to the group locus.  Errors: WrongSemantics
// unless the instance is non-betweenness, UnsupportedDimension unless
// dim is 2 or 3, LociTooCrowded when the chosen loci end up closer than the
// separation, TooLarge when the space would exceed the dense-metric budget.
Section5Space section5_space(const BetweennessInstance& t, double d_lip, std::size_t dim,
                             double radius_override = 0.0, double epsilon_override = 0.0,
                             double separation_override = 0.0);

// Concentric-layer embedding for a consistent ordering (elements 1..n listed
// least first): the layer of the element at rank r sits on the concentric
// sphere of radius R + r, and each path runs along the radial segment
// through its locus between its two endpoint layers.  The given ordering is
// checked against the instance first (error InconsistentOrdering).
EuclideanEmbedding section5_embedding(const Section5Space& s,
                                      const std::vector<std::size_t>& ordering);

}  // namespace embedlab
