// embedlab: command-line front end over the library modules.  Every
// subcommand is a thin wrapper: parse inputs, call one library operation,
// write outputs plus a RunManifest into --out-dir.
// Exit codes: 0 success, 1 validation error, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "embedlab/betweenness.hpp"
#include "embedlab/curve_checks.hpp"
#include "embedlab/embedder.hpp"
#include "embedlab/errors.hpp"
#include "embedlab/extract.hpp"
#include "embedlab/holes.hpp"
#include "embedlab/io.hpp"
#include "embedlab/k33.hpp"
#include "embedlab/ladder.hpp"
#include "embedlab/line.hpp"
#include "embedlab/metric.hpp"
#include "embedlab/product.hpp"
#include "embedlab/section5.hpp"
#include "embedlab/sphere_net.hpp"
#include "embedlab/svg.hpp"

namespace {

using namespace embedlab;

std::uint64_t effective_seed(std::uint64_t flag_value) {
    if (const char* env = std::getenv("EMBEDLAB_SEED"))
        return std::strtoull(env, nullptr, 10);
    return flag_value;
}

// Prints numbers with a decimal point so "1" reads as "1.0".
std::string fmt_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (s.find_first_of(".einf") == std::string::npos) s += ".0";
    return s;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::strtoull(text.substr(pos, comma - pos).c_str(), nullptr, 10));
        pos = comma + 1;
    }
    return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const std::uint64_t v : parse_u64_list(text))
        out.push_back(static_cast<std::size_t>(v));
    return out;
}

// Collects inputs/outputs for the manifest and funnels all file IO through
// the run's --out-dir.
struct RunContext {
    std::string out_dir;
    bool quiet = false;
    RunManifest manifest;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    RunContext(std::string dir, bool q, std::uint64_t seed, std::string command)
        : out_dir(std::move(dir)), quiet(q) {
        manifest.command = std::move(command);
        manifest.seed = seed;
        std::filesystem::create_directories(out_dir);
    }

    void param(const std::string& name, const std::string& value) {
        manifest.parameters.push_back({name, value});
    }

    std::string in(const std::string& path) {
        std::string content = read_text_file(path);
        manifest.input_digests.push_back({path, sha256_hex(content)});
        return content;
    }

    std::string out(const std::string& name, const std::string& content) {
        const std::string path = out_dir + "/" + name;
        write_text_file(path, content);
        manifest.outputs.push_back(path);
        return path;
    }

    void say(const std::string& line) {
        if (!quiet) std::cout << line << "\n";
    }
    void result(const std::string& line) { std::cout << line << "\n"; }

    void finish() {
        manifest.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        write_text_file(out_dir + "/manifest.json", manifest_to_json(manifest));
    }
};

FiniteMetric load_metric(RunContext& ctx, const std::string& path) {
    FiniteMetric m = metric_from_json(ctx.in(path));
    const ValidationResult v = validate_metric(m);
    if (!v.ok) fail(v.code, path + ": " + v.message);
    return m;
}

double measured_line_distortion(const FiniteMetric& x, const LineEmbedding& f) {
    double expansion = 0.0, contraction = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double img = std::abs(f.positions[i] - f.positions[j]);
            if (img <= 0.0)
                fail(ErrorCode::NonInjectiveImage, "line positions collapse a pair");
            expansion = std::max(expansion, img / x.at(i, j));
            contraction = std::max(contraction, x.at(i, j) / img);
        }
    return std::max(1.0, expansion * contraction);
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedlab: a laboratory for low-dimensional metric embeddings"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_dir = ".";
    bool quiet = false;
    app.add_option("--seed", seed, "run seed (EMBEDLAB_SEED overrides)");
    app.add_option("--out-dir", out_dir, "directory for outputs and manifest");
    app.add_flag("--quiet", quiet, "suppress informational output");

    // ------------------------------------------------------------ gen-product
    auto* gen_product = app.add_subcommand(
        "gen-product", "sphere product of a metric with a line embedding");
    struct {
        std::string metric, line;
        double c = 100.0, d_max = 0.0;
        std::size_t dim = 2;
    } gp;
    gen_product->add_option("--metric", gp.metric, "base metric JSON")->required();
    gen_product->add_option("--line", gp.line, "line embedding JSON")->required();
    gen_product->add_option("--c", gp.c, "master constant C");
    gen_product->add_option("--dim", gp.dim, "ambient dimension (2 or 3)");
    gen_product->add_option("--d-max", gp.d_max,
                            "distortion budget (default: measured from the line)");
    gen_product->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "gen-product");
        ctx.param("c", fmt_value(gp.c));
        ctx.param("dim", std::to_string(gp.dim));
        FiniteMetric x = load_metric(ctx, gp.metric);
        LineEmbedding f = line_from_json(ctx.in(gp.line));
        if (f.positions.size() != x.size())
            fail(ErrorCode::InvalidArgument, "line size does not match metric");
        f.normalize();
        const double d_max =
            gp.d_max > 0.0 ? gp.d_max : measured_line_distortion(x, f);
        ctx.param("d_max", fmt_value(d_max));
        const ReductionParams params = reduction_parameters(x, d_max, gp.dim, gp.c);
        const SphereNet net =
            epsilon_dense_sphere(gp.dim, params.radius, params.epsilon);
        const ProductSpace p = product_space(x, net);
        const EuclideanEmbedding g = forward_embedding(f, p);
        ctx.out("net.json", net_to_json(net));
        ctx.out("map.json", product_sidecar_to_json(p));
        ctx.out("g.json", embedding_to_json(g));
        if (p.size() <= 4096)
            ctx.out("y.json", metric_to_json(p.materialize()));
        else
            ctx.say("product too large to materialize; writing sidecar only");
        ctx.say("radius " + fmt_value(params.radius) + " epsilon " +
                fmt_value(params.epsilon) + " net " + std::to_string(net.count()) +
                " points " + std::to_string(p.size()));
        ctx.finish();
    });

    // ----------------------------------------------------------- gen-section5
    auto* gen_s5 = app.add_subcommand(
        "gen-section5", "layered-sphere space of a non-betweenness instance");
    struct {
        std::string instance, ordering;
        double d = 1.0, radius = 0.0, epsilon = 0.0, separation = 0.0;
        std::size_t dim = 2;
    } g5;
    gen_s5->add_option("--instance", g5.instance, "instance JSON")->required();
    gen_s5->add_option("--d", g5.d, "distortion budget D");
    gen_s5->add_option("--dim", g5.dim, "ambient dimension");
    gen_s5->add_option("--radius", g5.radius, "override sphere radius");
    gen_s5->add_option("--epsilon", g5.epsilon, "override net density");
    gen_s5->add_option("--separation", g5.separation, "override locus separation");
    gen_s5->add_option("--ordering", g5.ordering,
                       "comma list of elements; also writes the layered embedding");
    gen_s5->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "gen-section5");
        ctx.param("d", fmt_value(g5.d));
        ctx.param("dim", std::to_string(g5.dim));
        const BetweennessInstance inst = instance_from_json(ctx.in(g5.instance));
        const Section5Space s = section5_space(inst, g5.d, g5.dim, g5.radius,
                                               g5.epsilon, g5.separation);
        ctx.out("s5_metric.json", metric_to_json(s.space));
        ctx.out("s5_sidecar.json", section5_sidecar_to_json(s));
        if (!g5.ordering.empty()) {
            const EuclideanEmbedding e =
                section5_embedding(s, parse_index_list(g5.ordering));
            ctx.out("s5_embedding.json", embedding_to_json(e));
        }
        ctx.say("points " + std::to_string(s.space.size()) + " net " +
                std::to_string(s.net.count()) + " t_steps " +
                std::to_string(s.t_steps));
        ctx.finish();
    });

    // --------------------------------------------------------------- gen-k33
    auto* gen_k33 = app.add_subcommand("gen-k33", "hard K33 drawing metric");
    struct {
        std::size_t n = 60, k = 10;
        double eps = 0.5, c1 = 0.25;
    } gk;
    gen_k33->add_option("--n", gk.n, "number of sample points");
    gen_k33->add_option("--k", gk.k, "subspace size parameter");
    gen_k33->add_option("--eps", gk.eps, "target distortion slack");
    gen_k33->add_option("--c1", gk.c1, "strip height constant");
    gen_k33->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "gen-k33");
        ctx.param("n", std::to_string(gk.n));
        ctx.param("k", std::to_string(gk.k));
        ctx.param("eps", fmt_value(gk.eps));
        ctx.param("c1", fmt_value(gk.c1));
        const K33Space s = k33_space(gk.n, gk.k, gk.eps, gk.c1);
        ctx.out("k33_metric.json", metric_to_json(s.metric));
        ctx.out("k33_sidecar.json", k33_sidecar_to_json(s));
        ctx.say("w " + fmt_value(s.w) + " s " + fmt_value(s.s) + " m " +
                std::to_string(s.m));
        ctx.finish();
    });

    // ------------------------------------------------------------- gen-ladder
    auto* gen_ladder =
        app.add_subcommand("gen-ladder", "planar ladder graph metric");
    std::size_t ladder_n = 16;
    gen_ladder->add_option("--n", ladder_n, "size parameter (perfect square)")
        ->required();
    gen_ladder->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "gen-ladder");
        ctx.param("n", std::to_string(ladder_n));
        const PlanarLadderSpace s = planar_ladder_space(ladder_n);
        ctx.out("ladder_metric.json", metric_to_json(s.metric));
        ctx.out("ladder_sidecar.json", ladder_sidecar_to_json(s));
        ctx.say("vertices " + std::to_string(s.metric.size()) + " aspect " +
                fmt_value(aspect_ratio(s.metric)));
        ctx.finish();
    });

    // -------------------------------------------------------------- gen-graph
    auto* gen_graph = app.add_subcommand(
        "gen-graph", "shortest-path metric of a weighted graph");
    std::string graph_path;
    gen_graph->add_option("--graph", graph_path, "graph JSON")->required();
    gen_graph->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "gen-graph");
        const GraphInput g = graph_from_json(ctx.in(graph_path));
        const FiniteMetric m = shortest_path_closure(g.nodes, g.edges);
        ctx.out("metric.json", metric_to_json(m));
        ctx.say("points " + std::to_string(m.size()));
        ctx.finish();
    });

    // ------------------------------------------------------------- distortion
    auto* dist_cmd =
        app.add_subcommand("distortion", "distortion of an embedding of a metric");
    struct {
        std::string metric, embedding;
    } dc;
    dist_cmd->add_option("--metric", dc.metric, "metric JSON")->required();
    dist_cmd->add_option("--embedding", dc.embedding, "embedding JSON")->required();
    dist_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "distortion");
        const FiniteMetric m = load_metric(ctx, dc.metric);
        const EuclideanEmbedding e = embedding_from_json(ctx.in(dc.embedding));
        if (e.size() != m.size())
            fail(ErrorCode::InvalidArgument, "embedding size does not match metric");
        const DistortionReport r = distortion_of_map(m, e);
        ctx.result("distortion " + fmt_value(r.distortion));
        ctx.say("expansion " + fmt_value(r.expansion) + " contraction " +
                fmt_value(r.contraction));
        ctx.finish();
    });

    // ------------------------------------------------------------------ embed
    auto* embed_cmd =
        app.add_subcommand("embed", "Bourgain + projection + refinement pipeline");
    struct {
        std::string metric, seeds;
        std::size_t d = 2;
    } ec;
    embed_cmd->add_option("--metric", ec.metric, "metric JSON")->required();
    embed_cmd->add_option("--d", ec.d, "target dimension");
    embed_cmd->add_option("--seeds", ec.seeds,
                          "comma list of pipeline seeds (default: the run seed)");
    embed_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "embed");
        ctx.param("d", std::to_string(ec.d));
        const FiniteMetric m = load_metric(ctx, ec.metric);
        std::vector<std::uint64_t> seeds = ec.seeds.empty()
                                               ? std::vector<std::uint64_t>{ctx.manifest.seed}
                                               : parse_u64_list(ec.seeds);
        const EmbedResult res = embed_rd(m, ec.d, seeds);
        ctx.out("embedding.json", embedding_to_json(res.embedding));
        ctx.out("report.json", report_to_json(res.report));
        ctx.result("distortion " + fmt_value(res.report.distortion) +
                   " c_achieved " + fmt_value(res.report.c_achieved));
        ctx.finish();
    });

    // ----------------------------------------------------------- extract-line
    auto* extract_cmd = app.add_subcommand(
        "extract-line", "recover a line embedding from a product embedding");
    struct {
        std::string metric, embedding, sidecar;
        double d_max = 1.0;
    } xc;
    extract_cmd->add_option("--metric", xc.metric,
                            "materialized product metric JSON (optional check)");
    extract_cmd->add_option("--embedding", xc.embedding, "embedding JSON")->required();
    extract_cmd->add_option("--sidecar", xc.sidecar, "product index-map JSON")
        ->required();
    extract_cmd->add_option("--d-max", xc.d_max, "distortion budget hint");
    extract_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "extract-line");
        ctx.param("d_max", fmt_value(xc.d_max));
        const ProductSpace p = product_sidecar_from_json(ctx.in(xc.sidecar));
        if (!xc.metric.empty()) {
            const FiniteMetric y = metric_from_json(ctx.in(xc.metric));
            if (y.size() != p.size())
                fail(ErrorCode::InvalidArgument,
                     "materialized metric size does not match the sidecar");
        }
        const EuclideanEmbedding g = embedding_from_json(ctx.in(xc.embedding));
        const ExtractResult res = extract_line_embedding(g, p, xc.d_max);
        ctx.out("line.json", line_to_json(res.line));
        ctx.result("ordering " + join_indices(res.line.ordering()));
        ctx.say("gap_error_bound " + fmt_value(res.gap_error_bound));
        ctx.finish();
    });

    // ---------------------------------------------------------------- nesting
    auto* nesting_cmd =
        app.add_subcommand("nesting", "nesting order of disjoint closed curves");
    struct {
        std::string curves;
        double pitch = 0.0;
    } nc;
    nesting_cmd->add_option("--curves", nc.curves, "curves JSON")->required();
    nesting_cmd->add_option("--pitch", nc.pitch, "disjointness margin h");
    nesting_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "nesting");
        const std::vector<ClosedPolyline> curves = curves_from_json(ctx.in(nc.curves));
        ctx.result("order " + join_indices(nesting_order(curves, nc.pitch)));
        ctx.finish();
    });

    // ------------------------------------------------------------------ holes
    auto* holes_cmd =
        app.add_subcommand("holes", "bounded complement components of a curve");
    struct {
        std::string curves;
        double pitch = 0.0;
    } hc;
    holes_cmd->add_option("--curves", hc.curves, "curves JSON with one curve")
        ->required();
    holes_cmd->add_option("--pitch", hc.pitch, "grid pitch h (default diam/512)");
    holes_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "holes");
        const std::vector<ClosedPolyline> curves = curves_from_json(ctx.in(hc.curves));
        if (curves.size() != 1)
            fail(ErrorCode::InvalidArgument, "holes expects exactly one curve");
        const HoleReport r = compute_holes(curves[0], hc.pitch);
        ctx.out("holes.json", holes_to_json(r));
        double deepest = 0.0;
        for (const Hole& h : r.holes)
            deepest = std::max(deepest, h.inradius_estimate);
        ctx.result("holes " + std::to_string(r.holes.size()) + " deepest " +
                   fmt_value(deepest));
        ctx.finish();
    });

    // ---------------------------------------------------- reduce-betweenness
    auto* reduce_cmd = app.add_subcommand(
        "reduce-betweenness", "convert or check a betweenness instance");
    struct {
        std::string instance;
        bool check = false;
    } rc;
    reduce_cmd->add_option("--instance", rc.instance, "instance JSON")->required();
    reduce_cmd->add_flag("--check", rc.check, "run the exhaustive consistency check");
    reduce_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "reduce-betweenness");
        const BetweennessInstance inst = instance_from_json(ctx.in(rc.instance));
        if (rc.check) {
            const ConsistencyResult res = consistency_check(inst);
            ctx.result(res.consistent ? "consistent" : "inconsistent");
            if (res.consistent) ctx.say("ordering " + join_indices(res.ordering));
        } else {
            const BetweennessInstance conv = to_non_betweenness(inst);
            ctx.out("converted.json", instance_to_json(conv));
            ctx.say("triples " + std::to_string(conv.triples.size()));
        }
        ctx.finish();
    });

    // ---------------------------------------------------------------- certify
    auto* certify_cmd = app.add_subcommand(
        "certify", "crossing-certificate lower bound for a K33 embedding");
    struct {
        std::string sidecar, embedding;
    } cc;
    certify_cmd->add_option("--sidecar", cc.sidecar, "K33 sidecar JSON")->required();
    certify_cmd->add_option("--embedding", cc.embedding, "embedding JSON")->required();
    certify_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "certify");
        const K33Space s = k33_from_sidecar_json(ctx.in(cc.sidecar));
        const EuclideanEmbedding e = embedding_from_json(ctx.in(cc.embedding));
        const double L = crossing_certificate(s, e);
        ctx.result("L " + fmt_value(L) + " ratio " +
                   fmt_value(L / (static_cast<double>(s.n) * s.w)));
        ctx.finish();
    });

    // ----------------------------------------------------------- optimal-line
    auto* optline_cmd = app.add_subcommand(
        "optimal-line", "exact minimum-distortion line embedding (n <= 10)");
    std::string optline_metric;
    optline_cmd->add_option("--metric", optline_metric, "metric JSON")->required();
    optline_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "optimal-line");
        const FiniteMetric m = load_metric(ctx, optline_metric);
        const LineOpt opt = optimal_line_embedding_bruteforce(m);
        ctx.out("line.json", line_to_json(opt.embedding));
        ctx.result("distortion " + fmt_value(opt.distortion));
        ctx.say("ordering " + join_indices(opt.ordering));
        ctx.finish();
    });

    // ----------------------------------------------------------------- render
    auto* render_cmd = app.add_subcommand("render", "emit an SVG figure");
    struct {
        std::string kind, in, sidecar, out = "render.svg";
        double pitch = 0.0;
    } rd;
    render_cmd->add_option("--kind", rd.kind,
                           "curves+holes | embedding2d | k33-drawing | ladder-graph")
        ->required();
    render_cmd->add_option("--in", rd.in, "input artifact JSON")->required();
    render_cmd->add_option("--sidecar", rd.sidecar,
                           "provenance sidecar (embedding2d layer curves)");
    render_cmd->add_option("--out", rd.out, "output SVG name");
    render_cmd->add_option("--pitch", rd.pitch, "curve disjointness margin");
    render_cmd->callback([&] {
        RunContext ctx(out_dir, quiet, effective_seed(seed), "render");
        ctx.param("kind", rd.kind);
        std::string svg;
        if (rd.kind == "curves+holes") {
            svg = svg_curves_and_holes(curves_from_json(ctx.in(rd.in)), rd.pitch);
        } else if (rd.kind == "embedding2d") {
            const EuclideanEmbedding e = embedding_from_json(ctx.in(rd.in));
            std::vector<std::vector<std::size_t>> closed, open;
            if (!rd.sidecar.empty()) {
                const std::vector<Section5Point> prov =
                    section5_provenance_from_json(ctx.in(rd.sidecar));
                if (prov.size() != e.size())
                    fail(ErrorCode::InvalidArgument,
                         "provenance does not cover the embedding");
                std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_layer,
                    by_path;
                for (std::size_t i = 0; i < prov.size(); ++i) {
                    auto& buckets = prov[i].is_path ? by_path : by_layer;
                    const std::size_t id =
                        prov[i].is_path ? prov[i].path_id : prov[i].layer;
                    const std::size_t ord =
                        prov[i].is_path ? prov[i].step : prov[i].net_index;
                    if (buckets.size() <= id) buckets.resize(id + 1);
                    buckets[id].push_back({ord, i});
                }
                for (auto& bucket : by_layer) {
                    std::sort(bucket.begin(), bucket.end());
                    std::vector<std::size_t> chain;
                    for (const auto& [ord, i] : bucket) chain.push_back(i);
                    if (!chain.empty()) closed.push_back(std::move(chain));
                }
                for (auto& bucket : by_path) {
                    std::sort(bucket.begin(), bucket.end());
                    std::vector<std::size_t> chain;
                    for (const auto& [ord, i] : bucket) chain.push_back(i);
                    if (!chain.empty()) open.push_back(std::move(chain));
                }
            }
            svg = svg_embedding2d(e, closed, open);
        } else if (rd.kind == "k33-drawing") {
            svg = svg_k33_drawing(k33_from_sidecar_json(ctx.in(rd.in)));
        } else if (rd.kind == "ladder-graph") {
            svg = svg_ladder_graph(ladder_from_sidecar_json(ctx.in(rd.in)));
        } else {
            fail(ErrorCode::UnknownKind, "unknown render kind: " + rd.kind);
        }
        ctx.out(rd.out, svg);
        ctx.finish();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
