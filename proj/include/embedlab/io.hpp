#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "embedlab/betweenness.hpp"
#include "embedlab/embedder.hpp"
#include "embedlab/holes.hpp"
#include "embedlab/k33.hpp"
#include "embedlab/ladder.hpp"
#include "embedlab/line.hpp"
#include "embedlab/metric.hpp"
#include "embedlab/polyline.hpp"
#include "embedlab/product.hpp"
#include "embedlab/section5.hpp"
#include "embedlab/sphere_net.hpp"

namespace embedlab {

// SHA-256 digest as lowercase hex; used for manifest input digests.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& bytes);

// Whole-file text IO.  Errors: InvalidArgument on open/read/write failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Doubles in data files carry 17 significant digits so parsing returns the
// identical bit pattern.
std::string format_double(double v);

// {"labels": [...], "dist": [[...], ...]} with the full symmetric matrix.
std::string metric_to_json(const FiniteMetric& m);
FiniteMetric metric_from_json(const std::string& text);

// {"dim": d, "coords": [[...], ...]}
std::string embedding_to_json(const EuclideanEmbedding& e);
EuclideanEmbedding embedding_from_json(const std::string& text);

// {"dim": d, "radius": R, "epsilon": e, "points": [[...], ...]}
std::string net_to_json(const SphereNet& n);
SphereNet net_from_json(const std::string& text);

// {"positions": [...]}
std::string line_to_json(const LineEmbedding& f);
LineEmbedding line_from_json(const std::string& text);

// {"n": n, "semantics": "betweenness"|"non-betweenness",
//  "triples": [[i,j,k], ...]} with 1-based entries.
std::string instance_to_json(const BetweennessInstance& inst);
BetweennessInstance instance_from_json(const std::string& text);

// {"n":..., "d":..., "distortion":..., "bound":..., "c_achieved":...,
//  "seeds":[...]}
std::string report_to_json(const EmbedReport& r);

// {"curves": [[[x,y], ...], ...]}
std::string curves_to_json(const std::vector<ClosedPolyline>& curves);
std::vector<ClosedPolyline> curves_from_json(const std::string& text);

// {"grid_pitch": h, "unbounded_component_id": id, "holes": [...]}
std::string holes_to_json(const HoleReport& r);

// Index-map sidecar carrying the full base metric and net, enough to
// reconstruct the product without the (possibly huge) dense matrix.
std::string product_sidecar_to_json(const ProductSpace& p);
ProductSpace product_sidecar_from_json(const std::string& text);

// Provenance sidecar: one record per point, layer points as
// (layer, net_index), path points as (path_id, step).
std::string section5_sidecar_to_json(const Section5Space& s);

// Generation parameters plus drawing coordinates, edge map, ranks and strip
// roles; the parameters alone regenerate the space deterministically.
std::string k33_sidecar_to_json(const K33Space& s);

// Regenerates the space from the (n, k, eps, c1) stored in a sidecar.
K33Space k33_from_sidecar_json(const std::string& text);

// Parameters, drawing and the weighted edge list.
std::string ladder_sidecar_to_json(const PlanarLadderSpace& s);

// Regenerates the ladder from the n stored in a sidecar.
PlanarLadderSpace ladder_from_sidecar_json(const std::string& text);

// Per-point provenance records parsed back from a layered-space sidecar, in
// point order.
std::vector<Section5Point> section5_provenance_from_json(const std::string& text);

// Weighted-graph input for the shortest-path generator.
struct GraphInput {
    std::vector<std::string> nodes;
    std::vector<WeightedEdge> edges;
};
// {"nodes": [...], "edges": [{"a":..., "b":..., "w":...}, ...]}
GraphInput graph_from_json(const std::string& text);

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // sorted by name
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> input_digests;  // path, sha256
    std::vector<std::string> outputs;
    double wall_time_s = 0.0;
};
std::string manifest_to_json(const RunManifest& m);

}  // namespace embedlab
