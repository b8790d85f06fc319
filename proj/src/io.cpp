#include "embedlab/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "embedlab/errors.hpp"

namespace embedlab {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------- sha-256

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, unsigned n) {
    return (x >> n) | (x << (32 - n));
}

void sha256_block(std::uint32_t h[8], const unsigned char* p) {
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i)
        w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
               (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 64; ++i) {
        const std::uint32_t s0 =
            rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
        const std::uint32_t s1 =
            rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
        w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
    std::uint32_t e = h[4], f = h[5], g = h[6], hh = h[7];
    for (int i = 0; i < 64; ++i) {
        const std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
        const std::uint32_t ch = (e & f) ^ (~e & g);
        const std::uint32_t t1 = hh + s1 + ch + kSha256K[i] + w[i];
        const std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
        const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
        const std::uint32_t t2 = s0 + maj;
        hh = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
    h[5] += f;
    h[6] += g;
    h[7] += hh;
}

// ----------------------------------------------------------- json writing

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void append_doubles(std::string& out, const double* v, std::size_t count) {
    out += '[';
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += ", ";
        out += format_double(v[i]);
    }
    out += ']';
}

// ----------------------------------------------------------- json parsing

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidArgument,
             std::string(what) + ": malformed JSON: " + e.what());
    }
}

template <typename T>
T field(const json& j, const char* name, const char* what) {
    if (!j.contains(name))
        fail(ErrorCode::InvalidArgument,
             std::string(what) + ": missing field \"" + name + "\"");
    try {
        return j.at(name).get<T>();
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidArgument,
             std::string(what) + ": field \"" + name + "\": " + e.what());
    }
}

}  // namespace

std::string sha256_hex(const void* data, std::size_t len) {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::size_t full = len / 64;
    for (std::size_t i = 0; i < full; ++i) sha256_block(h, p + 64 * i);

    unsigned char tail[128];
    const std::size_t rem = len - 64 * full;
    std::memcpy(tail, p + 64 * full, rem);
    tail[rem] = 0x80;
    std::size_t tail_len = (rem + 1 + 8 <= 64) ? 64 : 128;
    std::memset(tail + rem + 1, 0, tail_len - rem - 1 - 8);
    const std::uint64_t bits = std::uint64_t(len) * 8;
    for (int i = 0; i < 8; ++i)
        tail[tail_len - 1 - i] = static_cast<unsigned char>(bits >> (8 * i));
    sha256_block(h, tail);
    if (tail_len == 128) sha256_block(h, tail + 64);

    char out[65];
    for (int i = 0; i < 8; ++i)
        std::snprintf(out + 8 * i, 9, "%08x", h[i]);
    return std::string(out, 64);
}

std::string sha256_hex(const std::string& bytes) {
    return sha256_hex(bytes.data(), bytes.size());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) fail(ErrorCode::InvalidArgument, "cannot read " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string metric_to_json(const FiniteMetric& m) {
    const std::size_t n = m.size();
    std::string out = "{\"labels\": [";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        append_escaped(out, m.labels()[i]);
    }
    out += "], \"dist\": [";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        append_doubles(out, m.data().data() + i * n, n);
    }
    out += "]}\n";
    return out;
}

FiniteMetric metric_from_json(const std::string& text) {
    const json j = parse(text, "metric");
    auto labels = field<std::vector<std::string>>(j, "labels", "metric");
    auto rows = field<std::vector<std::vector<double>>>(j, "dist", "metric");
    const std::size_t n = labels.size();
    if (rows.size() != n)
        fail(ErrorCode::InvalidArgument, "metric: dist row count != label count");
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            fail(ErrorCode::InvalidArgument, "metric: ragged dist matrix");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteMetric(std::move(labels), std::move(flat));
}

std::string embedding_to_json(const EuclideanEmbedding& e) {
    std::string out = "{\"dim\": " + std::to_string(e.dim) + ", \"coords\": [";
    const std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        append_doubles(out, e.coords.data() + i * e.dim, e.dim);
    }
    out += "]}\n";
    return out;
}

EuclideanEmbedding embedding_from_json(const std::string& text) {
    const json j = parse(text, "embedding");
    EuclideanEmbedding e;
    e.dim = field<std::size_t>(j, "dim", "embedding");
    if (e.dim == 0) fail(ErrorCode::InvalidArgument, "embedding: dim must be positive");
    auto rows = field<std::vector<std::vector<double>>>(j, "coords", "embedding");
    e.coords.reserve(rows.size() * e.dim);
    for (const auto& row : rows) {
        if (row.size() != e.dim)
            fail(ErrorCode::InvalidArgument, "embedding: row length != dim");
        e.coords.insert(e.coords.end(), row.begin(), row.end());
    }
    return e;
}

std::string net_to_json(const SphereNet& n) {
    std::string out = "{\"dim\": " + std::to_string(n.dim) +
                      ", \"radius\": " + format_double(n.radius) +
                      ", \"epsilon\": " + format_double(n.epsilon) + ", \"points\": [";
    for (std::size_t i = 0; i < n.count(); ++i) {
        if (i) out += ", ";
        append_doubles(out, n.point(i), n.dim);
    }
    out += "]}\n";
    return out;
}

SphereNet net_from_json(const std::string& text) {
    const json j = parse(text, "net");
    SphereNet n;
    n.dim = field<std::size_t>(j, "dim", "net");
    n.radius = field<double>(j, "radius", "net");
    n.epsilon = field<double>(j, "epsilon", "net");
    auto rows = field<std::vector<std::vector<double>>>(j, "points", "net");
    for (const auto& row : rows) {
        if (row.size() != n.dim)
            fail(ErrorCode::InvalidArgument, "net: point length != dim");
        n.points.insert(n.points.end(), row.begin(), row.end());
    }
    return n;
}

std::string line_to_json(const LineEmbedding& f) {
    std::string out = "{\"positions\": ";
    append_doubles(out, f.positions.data(), f.positions.size());
    out += "}\n";
    return out;
}

LineEmbedding line_from_json(const std::string& text) {
    const json j = parse(text, "line");
    LineEmbedding f;
    f.positions = field<std::vector<double>>(j, "positions", "line");
    return f;
}

std::string instance_to_json(const BetweennessInstance& inst) {
    std::string out = "{\"n\": " + std::to_string(inst.n) + ", \"semantics\": ";
    append_escaped(out, inst.semantics == TripleSemantics::Betweenness
                            ? "betweenness"
                            : "non-betweenness");
    out += ", \"triples\": [";
    for (std::size_t t = 0; t < inst.triples.size(); ++t) {
        if (t) out += ", ";
        out += '[' + std::to_string(inst.triples[t][0]) + ", " +
               std::to_string(inst.triples[t][1]) + ", " +
               std::to_string(inst.triples[t][2]) + ']';
    }
    out += "]}\n";
    return out;
}

BetweennessInstance instance_from_json(const std::string& text) {
    const json j = parse(text, "instance");
    const auto n = field<std::size_t>(j, "n", "instance");
    const auto sem = field<std::string>(j, "semantics", "instance");
    TripleSemantics semantics;
    if (sem == "betweenness")
        semantics = TripleSemantics::Betweenness;
    else if (sem == "non-betweenness")
        semantics = TripleSemantics::NonBetweenness;
    else
        fail(ErrorCode::InvalidArgument, "instance: unknown semantics " + sem);
    auto raw = field<std::vector<std::vector<std::size_t>>>(j, "triples", "instance");
    std::vector<std::array<std::size_t, 3>> triples;
    for (const auto& t : raw) {
        if (t.size() != 3)
            fail(ErrorCode::InvalidArgument, "instance: triple is not a 3-list");
        triples.push_back({t[0], t[1], t[2]});
    }
    return make_instance(n, semantics, triples);
}

std::string report_to_json(const EmbedReport& r) {
    std::string out = "{\"n\": " + std::to_string(r.n) + ", \"d\": " +
                      std::to_string(r.d) +
                      ", \"distortion\": " + format_double(r.distortion) +
                      ", \"bound\": " + format_double(r.bound) +
                      ", \"c_achieved\": " + format_double(r.c_achieved) +
                      ", \"seeds\": [";
    for (std::size_t i = 0; i < r.seeds.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(r.seeds[i]);
    }
    out += "]}\n";
    return out;
}

std::string curves_to_json(const std::vector<ClosedPolyline>& curves) {
    std::string out = "{\"curves\": [";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        if (c) out += ", ";
        out += '[';
        for (std::size_t v = 0; v < curves[c].vertices.size(); ++v) {
            if (v) out += ", ";
            const double xy[2] = {curves[c].vertices[v].x, curves[c].vertices[v].y};
            append_doubles(out, xy, 2);
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

std::vector<ClosedPolyline> curves_from_json(const std::string& text) {
    const json j = parse(text, "curves");
    auto raw =
        field<std::vector<std::vector<std::vector<double>>>>(j, "curves", "curves");
    std::vector<ClosedPolyline> out;
    for (const auto& curve : raw) {
        std::vector<P2> pts;
        for (const auto& v : curve) {
            if (v.size() != 2)
                fail(ErrorCode::InvalidArgument, "curves: vertex is not [x, y]");
            pts.push_back({v[0], v[1]});
        }
        out.push_back(make_closed_polyline(pts));
    }
    return out;
}

std::string holes_to_json(const HoleReport& r) {
    std::string out = "{\"grid_pitch\": " + format_double(r.grid_pitch) +
                      ", \"unbounded_component_id\": " +
                      std::to_string(r.unbounded_component_id) + ", \"holes\": [";
    for (std::size_t i = 0; i < r.holes.size(); ++i) {
        if (i) out += ", ";
        const Hole& h = r.holes[i];
        const double xy[2] = {h.representative_point.x, h.representative_point.y};
        out += "{\"cell_count\": " + std::to_string(h.cell_count) +
               ", \"inradius_estimate\": " + format_double(h.inradius_estimate) +
               ", \"representative_point\": ";
        append_doubles(out, xy, 2);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string product_sidecar_to_json(const ProductSpace& p) {
    std::string out = "{\"base\": ";
    std::string base = metric_to_json(p.base());
    base.pop_back();  // inline: drop trailing newline
    out += base;
    out += ", \"net\": ";
    std::string net = net_to_json(p.net());
    net.pop_back();
    out += net;
    out += "}\n";
    return out;
}

ProductSpace product_sidecar_from_json(const std::string& text) {
    const json j = parse(text, "product sidecar");
    if (!j.contains("base") || !j.contains("net"))
        fail(ErrorCode::InvalidArgument, "product sidecar: need base and net");
    FiniteMetric base = metric_from_json(j.at("base").dump());
    SphereNet net = net_from_json(j.at("net").dump());
    return product_space(base, net);
}

std::string section5_sidecar_to_json(const Section5Space& s) {
    std::string out = "{\"d_lip\": " + format_double(s.d_lip) +
                      ", \"separation\": " + format_double(s.separation) +
                      ", \"t_steps\": " + std::to_string(s.t_steps) + ", \"loci\": [";
    for (std::size_t i = 0; i < s.loci.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.loci[i]);
    }
    out += "], \"provenance\": [";
    for (std::size_t i = 0; i < s.provenance.size(); ++i) {
        if (i) out += ", ";
        const Section5Point& p = s.provenance[i];
        out += "{\"label\": ";
        append_escaped(out, s.space.labels()[i]);
        if (p.is_path)
            out += ", \"kind\": \"path\", \"path_id\": " + std::to_string(p.path_id) +
                   ", \"step\": " + std::to_string(p.step);
        else
            out += ", \"kind\": \"layer\", \"layer\": " + std::to_string(p.layer) +
                   ", \"net_index\": " + std::to_string(p.net_index);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string k33_sidecar_to_json(const K33Space& s) {
    std::string out = "{\"n\": " + std::to_string(s.n) + ", \"k\": " +
                      std::to_string(s.k) + ", \"eps\": " + format_double(s.eps) +
                      ", \"c1\": " + format_double(s.c1) +
                      ", \"w\": " + format_double(s.w) +
                      ", \"s\": " + format_double(s.s) +
                      ", \"h0\": " + format_double(s.h0) +
                      ", \"m\": " + std::to_string(s.m) + ", \"drawing\": [";
    for (std::size_t i = 0; i < s.drawing.size(); ++i) {
        if (i) out += ", ";
        const double xy[2] = {s.drawing[i].x, s.drawing[i].y};
        append_doubles(out, xy, 2);
    }
    out += "], \"edge_map\": [";
    for (std::size_t i = 0; i < s.edge_of.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.edge_of[i]);
    }
    out += "], \"rank\": [";
    for (std::size_t i = 0; i < s.rank_on_edge.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.rank_on_edge[i]);
    }
    out += "], \"role\": [";
    for (std::size_t i = 0; i < s.role.size(); ++i) {
        if (i) out += ", ";
        append_escaped(out, s.role[i] == StripRole::P   ? "p"
                            : s.role[i] == StripRole::Q ? "q"
                                                        : "web");
    }
    out += "], \"strip_index\": [";
    for (std::size_t i = 0; i < s.strip_index.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.strip_index[i]);
    }
    out += "]}\n";
    return out;
}

std::string ladder_sidecar_to_json(const PlanarLadderSpace& s) {
    std::string out = "{\"n\": " + std::to_string(s.n) + ", \"r\": " +
                      std::to_string(s.r) +
                      ", \"rung_weight\": " + format_double(s.rung_weight) +
                      ", \"labels\": [";
    for (std::size_t i = 0; i < s.metric.size(); ++i) {
        if (i) out += ", ";
        append_escaped(out, s.metric.labels()[i]);
    }
    out += "], \"drawing\": [";
    for (std::size_t i = 0; i < s.drawing.size(); ++i) {
        if (i) out += ", ";
        const double xy[2] = {s.drawing[i].x, s.drawing[i].y};
        append_doubles(out, xy, 2);
    }
    out += "], \"edges\": [";
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        if (i) out += ", ";
        out += "{\"a\": ";
        append_escaped(out, s.edges[i].a);
        out += ", \"b\": ";
        append_escaped(out, s.edges[i].b);
        out += ", \"w\": " + format_double(s.edges[i].w) + '}';
    }
    out += "]}\n";
    return out;
}

K33Space k33_from_sidecar_json(const std::string& text) {
    const json j = parse(text, "k33 sidecar");
    return k33_space(field<std::size_t>(j, "n", "k33 sidecar"),
                     field<std::size_t>(j, "k", "k33 sidecar"),
                     field<double>(j, "eps", "k33 sidecar"),
                     field<double>(j, "c1", "k33 sidecar"));
}

PlanarLadderSpace ladder_from_sidecar_json(const std::string& text) {
    const json j = parse(text, "ladder sidecar");
    return planar_ladder_space(field<std::size_t>(j, "n", "ladder sidecar"));
}

std::vector<Section5Point> section5_provenance_from_json(const std::string& text) {
    const json j = parse(text, "provenance sidecar");
    if (!j.contains("provenance"))
        fail(ErrorCode::InvalidArgument, "provenance sidecar: missing records");
    std::vector<Section5Point> out;
    for (const auto& rec : j.at("provenance")) {
        Section5Point p;
        const auto kind = field<std::string>(rec, "kind", "provenance record");
        if (kind == "path") {
            p.is_path = true;
            p.path_id = field<std::size_t>(rec, "path_id", "provenance record");
            p.step = field<std::size_t>(rec, "step", "provenance record");
        } else if (kind == "layer") {
            p.layer = field<std::size_t>(rec, "layer", "provenance record");
            p.net_index = field<std::size_t>(rec, "net_index", "provenance record");
        } else {
            fail(ErrorCode::InvalidArgument,
                 "provenance record: unknown kind " + kind);
        }
        out.push_back(p);
    }
    return out;
}

GraphInput graph_from_json(const std::string& text) {
    const json j = parse(text, "graph");
    GraphInput g;
    g.nodes = field<std::vector<std::string>>(j, "nodes", "graph");
    if (!j.contains("edges"))
        fail(ErrorCode::InvalidArgument, "graph: missing field \"edges\"");
    for (const auto& e : j.at("edges")) {
        WeightedEdge we;
        we.a = field<std::string>(e, "a", "graph edge");
        we.b = field<std::string>(e, "b", "graph edge");
        we.w = field<double>(e, "w", "graph edge");
        g.edges.push_back(std::move(we));
    }
    return g;
}

std::string manifest_to_json(const RunManifest& m) {
    std::string out = "{\"command\": ";
    append_escaped(out, m.command);
    out += ", \"parameters\": {";
    for (std::size_t i = 0; i < m.parameters.size(); ++i) {
        if (i) out += ", ";
        append_escaped(out, m.parameters[i].first);
        out += ": ";
        append_escaped(out, m.parameters[i].second);
    }
    out += "}, \"seed\": " + std::to_string(m.seed) + ", \"input_digests\": {";
    for (std::size_t i = 0; i < m.input_digests.size(); ++i) {
        if (i) out += ", ";
        append_escaped(out, m.input_digests[i].first);
        out += ": ";
        append_escaped(out, m.input_digests[i].second);
    }
    out += "}, \"outputs\": [";
    for (std::size_t i = 0; i < m.outputs.size(); ++i) {
        if (i) out += ", ";
        append_escaped(out, m.outputs[i]);
    }
    out += "], \"wall_time_s\": " + format_double(m.wall_time_s) + "}\n";
    return out;
}

}  // namespace embedlab
