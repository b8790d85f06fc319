#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "embedlab/metric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace embedlab;
using testsupport::equilateral_triangle;
using testsupport::four_cycle;
using testsupport::random_embedding;
using testsupport::random_metric;

namespace {

EuclideanEmbedding plane_points(std::vector<double> coords) {
    return EuclideanEmbedding{2, std::move(coords)};
}

}  // namespace

TEST_CASE("construction checks the matrix shape") {
    CHECK_THROWS_AS(FiniteMetric({"a", "b"}, {0, 1, 1}), Error);
    const FiniteMetric m({"a", "b"}, {0, 1, 1, 0});
    CHECK(m.size() == 2);
    CHECK(m.at(0, 1) == 1.0);
    CHECK(m.index_of("b") == 1);
    CHECK_THROWS_AS(m.index_of("zzz"), Error);
}

TEST_CASE("validate_metric accepts the unit equilateral triangle") {
    CHECK(validate_metric(equilateral_triangle()).ok);
}

TEST_CASE("validate_metric reports a triangle violation with its witnesses") {
    const FiniteMetric m({"1", "2", "3"}, {0, 1, 5, 1, 0, 1, 5, 1, 0});
    const ValidationResult r = validate_metric(m);
    CHECK_FALSE(r.ok);
    CHECK(r.code == ErrorCode::TriangleViolation);
    // d(1,3) = 5 > d(1,2) + d(2,3) = 2; indices are 0-based in the report.
    CHECK(r.i != r.j);
}

TEST_CASE("validate_metric reports asymmetry") {
    FiniteMetric m = equilateral_triangle();
    std::vector<double> d = m.data();
    d[0 * 3 + 1] = 1.5;  // only one direction changed
    const ValidationResult r = validate_metric(FiniteMetric({"a", "b", "c"}, std::move(d)));
    CHECK_FALSE(r.ok);
    CHECK(r.code == ErrorCode::AsymmetricMatrix);
}

TEST_CASE("validate_metric reports a nonzero diagonal and nonpositive entries") {
    FiniteMetric m1({"a", "b"}, {0.5, 1, 1, 0});
    CHECK(validate_metric(m1).code == ErrorCode::NonzeroDiagonal);
    FiniteMetric m2({"a", "b"}, {0, -1, -1, 0});
    CHECK(validate_metric(m2).code == ErrorCode::NonpositiveOffDiagonal);
}

TEST_CASE("aspect_ratio") {
    CHECK(aspect_ratio(equilateral_triangle()) == doctest::Approx(1.0));
    const FiniteMetric path({"a", "b", "c"}, {0, 1, 2, 1, 0, 1, 2, 1, 0});
    CHECK(aspect_ratio(path) == doctest::Approx(2.0));
    CHECK(aspect_ratio(four_cycle()) == doctest::Approx(2.0));
    CHECK_THROWS_AS(aspect_ratio(FiniteMetric({"a"}, {0})), Error);
}

TEST_CASE("distortion is 1 for a scaled isometry") {
    const double s = 5.0;
    const double h = s * std::sqrt(3.0) / 2.0;
    const EuclideanEmbedding e = plane_points({0, 0, s, 0, s / 2, h});
    const DistortionReport r = distortion_of_map(equilateral_triangle(), e);
    CHECK(r.distortion == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.alpha == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("collinear image of the triangle has distortion 2") {
    const EuclideanEmbedding e = plane_points({0, 0, 1, 0, 2, 0});
    const DistortionReport r = distortion_of_map(equilateral_triangle(), e);
    CHECK(r.distortion == doctest::Approx(2.0));
    CHECK(r.expansion == doctest::Approx(2.0));
    CHECK(r.contraction == doctest::Approx(1.0));
}

TEST_CASE("any injective two-point map has distortion 1") {
    const FiniteMetric m({"a", "b"}, {0, 7, 7, 0});
    const DistortionReport r = distortion_of_map(m, plane_points({0, 0, 0.3, 1.1}));
    CHECK(r.distortion == doctest::Approx(1.0));
}

TEST_CASE("fewer than two points report distortion 1 by convention") {
    const FiniteMetric m({"a"}, {0});
    CHECK(distortion_of_map(m, plane_points({3, 4})).distortion == 1.0);
}

TEST_CASE("distortion is scale invariant to 1e-9 relative") {
    const FiniteMetric m = random_metric(5, 11);
    const EuclideanEmbedding e = random_embedding(5, 3, 11);
    EuclideanEmbedding scaled = e;
    for (double& v : scaled.coords) v *= 2.7;
    const double a = distortion_of_map(m, e).distortion;
    const double b = distortion_of_map(m, scaled).distortion;
    CHECK(b == doctest::Approx(a).epsilon(1e-9));
}

TEST_CASE("distortion exceeds 1 when no scaled isometry exists") {
    const EuclideanEmbedding e = plane_points({0, 0, 1, 0, 0.5, 0.87});
    const DistortionReport r = distortion_of_map(equilateral_triangle(), e);
    CHECK(r.distortion > 1.0);
}

TEST_CASE("colliding image points raise NonInjectiveImage") {
    const EuclideanEmbedding e = plane_points({0, 0, 1, 1, 1, 1});
    CHECK_THROWS_AS(distortion_of_map(equilateral_triangle(), e), Error);
    try {
        distortion_of_map(equilateral_triangle(), e);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NonInjectiveImage);
    }
}

TEST_CASE("matrix and oracle overloads agree") {
    const FiniteMetric m = random_metric(6, 3);
    const EuclideanEmbedding e = random_embedding(6, 2, 3);
    const DistortionReport a = distortion_of_map(m, e);
    const DistortionReport b =
        distortion_of_map(m.size(), [&](std::size_t i, std::size_t j) { return m.at(i, j); }, e);
    CHECK(a.distortion == doctest::Approx(b.distortion).epsilon(1e-15));
    CHECK(a.alpha == doctest::Approx(b.alpha).epsilon(1e-15));
}

TEST_CASE("distortion agrees with the two-pass oracle to 1e-12") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const FiniteMetric m = random_metric(n, seed);
        const EuclideanEmbedding e = random_embedding(n, 1 + seed % 3, seed + 100, 3.0);
        const DistortionReport lib = distortion_of_map(m, e);
        const testsupport::OracleDistortion ora = testsupport::oracle_distortion(m, e);
        CHECK(lib.distortion == doctest::Approx(ora.distortion).epsilon(1e-12));
        CHECK(lib.expansion == doctest::Approx(ora.expansion).epsilon(1e-12));
        CHECK(lib.contraction == doctest::Approx(ora.contraction).epsilon(1e-12));
    }
}

TEST_CASE("closure: a single edge carries its weight") {
    const FiniteMetric m = shortest_path_closure({"a", "b"}, {{"a", "b", 2.0}});
    CHECK(m.at(m.index_of("a"), m.index_of("b")) == doctest::Approx(2.0));
}

TEST_CASE("closure: relaxation beats a heavier direct edge") {
    const FiniteMetric m = shortest_path_closure(
        {"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 3.0}});
    CHECK(m.at(m.index_of("a"), m.index_of("c")) == doctest::Approx(2.0));
}

TEST_CASE("closure: a glued path of four quarter edges has endpoint distance 1") {
    std::vector<WeightedEdge> edges;
    const std::vector<std::string> nodes = {"jv", "s1", "s2", "s3", "kv"};
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        edges.push_back({nodes[i], nodes[i + 1], 0.25});
    const FiniteMetric m = shortest_path_closure(nodes, edges);
    CHECK(m.at(m.index_of("jv"), m.index_of("kv")) == doctest::Approx(1.0));
    CHECK(validate_metric(m).ok);
}

TEST_CASE("closure is idempotent on its own output") {
    const FiniteMetric m = shortest_path_closure(
        {"a", "b", "c", "d"},
        {{"a", "b", 1.0}, {"b", "c", 0.5}, {"c", "d", 2.0}, {"a", "d", 5.0}});
    std::vector<WeightedEdge> complete;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            complete.push_back({m.labels()[i], m.labels()[j], m.at(i, j)});
    const FiniteMetric again = shortest_path_closure(m.labels(), complete);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            CHECK(again.at(again.index_of(m.labels()[i]), again.index_of(m.labels()[j])) ==
                  m.at(i, j));
}

TEST_CASE("closure merges base distances with new edges") {
    const FiniteMetric base = equilateral_triangle();
    const FiniteMetric m =
        shortest_path_closure({"a", "x"}, {{"a", "x", 0.25}}, &base);
    CHECK(m.size() == 4);
    // x reaches b through a: 0.25 + 1.
    CHECK(m.at(m.index_of("x"), m.index_of("b")) == doctest::Approx(1.25));
    CHECK(validate_metric(m).ok);
}

TEST_CASE("closure errors") {
    CHECK_THROWS_AS(shortest_path_closure({"a", "b", "c"}, {{"a", "b", 1.0}}), Error);
    try {
        shortest_path_closure({"a", "b", "c"}, {{"a", "b", 1.0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DisconnectedGraph);
    }
    CHECK_THROWS_AS(shortest_path_closure({"a", "b"}, {{"a", "b", 0.0}}), Error);
}

TEST_CASE("restrict_metric preserves order and entries") {
    const FiniteMetric m = random_metric(5, 9);
    const FiniteMetric r = restrict_metric(m, {3, 0, 4});
    CHECK(r.size() == 3);
    CHECK(r.labels()[0] == m.labels()[3]);
    CHECK(r.at(0, 1) == m.at(3, 0));
    CHECK(r.at(1, 2) == m.at(0, 4));
}
