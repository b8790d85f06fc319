#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "embedlab/line.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace embedlab;
using testsupport::equilateral_triangle;
using testsupport::four_cycle;
using testsupport::random_metric;

TEST_CASE("ordering and normalize") {
    LineEmbedding f{{2.0, -1.0, 0.5}};
    CHECK(f.ordering() == std::vector<std::size_t>{1, 2, 0});
    f.normalize();
    CHECK(f.positions[1] == 0.0);
    CHECK(f.positions[0] == doctest::Approx(3.0));
}

TEST_CASE("two points are feasible at D = 1 with positions (0, rho)") {
    const FiniteMetric m({"a", "b"}, {0, 4, 4, 0});
    const OrderFeasibility r = order_feasibility(m, {0, 1}, 1.0);
    CHECK(r.feasible);
    CHECK(r.positions[0] == doctest::Approx(0.0));
    CHECK(r.positions[1] == doctest::Approx(4.0));
}

TEST_CASE("equilateral triangle ordering infeasible below 2, feasible at 2") {
    const FiniteMetric m = equilateral_triangle();
    CHECK_FALSE(order_feasibility(m, {0, 1, 2}, 1.9).feasible);
    const OrderFeasibility r = order_feasibility(m, {0, 1, 2}, 2.0);
    CHECK(r.feasible);
    CHECK(r.positions[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.positions[1] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.positions[2] == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("feasibility is monotone in D") {
    const FiniteMetric m = random_metric(5, 17);
    const std::vector<std::size_t> ordering = {0, 1, 2, 3, 4};
    bool seen_feasible = false;
    for (double d = 1.0; d <= 8.0; d += 0.25) {
        const bool f = order_feasibility(m, ordering, d).feasible;
        if (seen_feasible) CHECK(f);
        seen_feasible = seen_feasible || f;
    }
    CHECK(seen_feasible);
}

TEST_CASE("bruteforce: two points embed with distortion 1") {
    const FiniteMetric m({"a", "b"}, {0, 3, 3, 0});
    const LineOpt r = optimal_line_embedding_bruteforce(m);
    CHECK(r.distortion == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("bruteforce: equilateral triangle needs distortion 2") {
    const LineOpt r = optimal_line_embedding_bruteforce(equilateral_triangle());
    CHECK(r.distortion == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("bruteforce: unit 4-cycle needs distortion 3") {
    const LineOpt r = optimal_line_embedding_bruteforce(four_cycle());
    CHECK(r.distortion == doctest::Approx(3.0).epsilon(1e-5));
    // The cyclic order with unit gaps realizes the optimum.
    CHECK(testsupport::line_map_distortion(four_cycle(), r.embedding) ==
          doctest::Approx(r.distortion).epsilon(1e-5));
}

TEST_CASE("bruteforce: isometric path metric embeds with distortion 1") {
    const LineOpt r = optimal_line_embedding_bruteforce(testsupport::path_metric_013());
    CHECK(r.distortion == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("bruteforce output is noncontracting and normalized") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const FiniteMetric m = random_metric(4, seed);
        const LineOpt r = optimal_line_embedding_bruteforce(m);
        double mn = r.embedding.positions[0];
        for (double p : r.embedding.positions) mn = std::min(mn, p);
        CHECK(mn == doctest::Approx(0.0).epsilon(1e-12));
        // Witness positions satisfy the lower constraints up to the bisection
        // tolerance on D.
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                const double img =
                    std::abs(r.embedding.positions[i] - r.embedding.positions[j]);
                CHECK(img >= m.at(i, j) * (1.0 - 1e-6));
            }
    }
}

TEST_CASE("bruteforce size guards") {
    CHECK_THROWS_AS(optimal_line_embedding_bruteforce(FiniteMetric({"a"}, {0})), Error);
    CHECK_THROWS_AS(optimal_line_embedding_bruteforce(random_metric(11, 1)), Error);
    try {
        optimal_line_embedding_bruteforce(random_metric(11, 1));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("bruteforce matches the grid placement oracle on small spaces") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const std::size_t n = 3 + seed % 3;
        const FiniteMetric m = random_metric(n, seed * 7);
        const double bf = optimal_line_embedding_bruteforce(m).distortion;
        const double oracle = testsupport::oracle_best_line_distortion(m);
        CHECK(bf == doctest::Approx(oracle).epsilon(1e-4));
    }
}
