#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>

#include "doctest.h"
#include "embedlab/betweenness.hpp"
#include "embedlab/branching.hpp"
#include "embedlab/errors.hpp"
#include "support/generators.hpp"

using namespace embedlab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_NOTHROW(make_instance(4, TripleSemantics::Betweenness, {{1, 2, 3}, {2, 3, 4}}));
    CHECK(code_of([] {
              make_instance(3, TripleSemantics::Betweenness, {{1, 2, 4}});
          }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] {
              make_instance(3, TripleSemantics::Betweenness, {{0, 1, 2}});
          }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] {
              make_instance(3, TripleSemantics::Betweenness, {{1, 2, 2}});
          }) == ErrorCode::InvalidArgument);
}

TEST_CASE("conversion to non-betweenness") {
    const BetweennessInstance empty =
        to_non_betweenness(make_instance(3, TripleSemantics::Betweenness, {}));
    CHECK(empty.semantics == TripleSemantics::NonBetweenness);
    CHECK(empty.triples.empty());

    const BetweennessInstance conv =
        to_non_betweenness(make_instance(3, TripleSemantics::Betweenness, {{2, 1, 3}}));
    REQUIRE(conv.triples.size() == 2);
    CHECK(conv.triples[0] == std::array<std::size_t, 3>{1, 2, 3});
    CHECK(conv.triples[1] == std::array<std::size_t, 3>{3, 2, 1});

    CHECK(code_of([&] { to_non_betweenness(conv); }) == ErrorCode::WrongSemantics);
}

TEST_CASE("ordering satisfaction under both semantics") {
    const BetweennessInstance bet = make_instance(3, TripleSemantics::Betweenness, {{1, 2, 3}});
    CHECK(ordering_satisfies(bet, {2, 1, 3}));
    CHECK(ordering_satisfies(bet, {3, 1, 2}));
    CHECK_FALSE(ordering_satisfies(bet, {1, 2, 3}));

    const BetweennessInstance non =
        make_instance(3, TripleSemantics::NonBetweenness, {{2, 1, 3}});
    CHECK(ordering_satisfies(non, {2, 1, 3}));
    CHECK(ordering_satisfies(non, {1, 3, 2}));
    CHECK_FALSE(ordering_satisfies(non, {1, 2, 3}));

    CHECK(code_of([&] { ordering_satisfies(non, {1, 2}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { ordering_satisfies(non, {1, 2, 2}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("consistency verdicts on the desk instances") {
    const ConsistencyResult none =
        consistency_check(make_instance(3, TripleSemantics::Betweenness, {}));
    CHECK(none.consistent);
    CHECK(none.ordering == std::vector<std::size_t>{1, 2, 3});

    const ConsistencyResult cyc = consistency_check(
        make_instance(3, TripleSemantics::Betweenness, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
    CHECK_FALSE(cyc.consistent);

    // Least witness in enumeration order; (2,1,3) also satisfies but is not
    // the least.
    const BetweennessInstance non =
        make_instance(3, TripleSemantics::NonBetweenness, {{2, 1, 3}});
    const ConsistencyResult w = consistency_check(non);
    CHECK(w.consistent);
    CHECK(w.ordering == std::vector<std::size_t>{1, 3, 2});
    CHECK(ordering_satisfies(non, {2, 1, 3}));

    // Single betweenness triple: both the instance and its conversion agree
    // on the witness 2 < 1 < 3.
    const BetweennessInstance one = make_instance(3, TripleSemantics::Betweenness, {{1, 2, 3}});
    const ConsistencyResult a = consistency_check(one);
    const ConsistencyResult b = consistency_check(to_non_betweenness(one));
    CHECK(a.consistent);
    CHECK(b.consistent);
    CHECK(a.ordering == std::vector<std::size_t>{2, 1, 3});
    CHECK(b.ordering == std::vector<std::size_t>{2, 1, 3});

    CHECK(code_of([] {
              consistency_check(make_instance(11, TripleSemantics::Betweenness, {}));
          }) == ErrorCode::TooLarge);
}

TEST_CASE("conversion preserves verdicts on seeded instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const BetweennessInstance t = testsupport::random_instance(seed);
        const ConsistencyResult direct = consistency_check(t);
        const ConsistencyResult converted = consistency_check(to_non_betweenness(t));
        CHECK(direct.consistent == converted.consistent);
        if (direct.consistent) {
            CHECK(ordering_satisfies(t, converted.ordering));
            CHECK(ordering_satisfies(to_non_betweenness(t), direct.ordering));
        }
    }
}

TEST_CASE("branching graph shapes") {
    const BranchingGraph g3 = branching_graph(3);
    CHECK(g3.vertices.size() == 4);
    CHECK(g3.edges.size() == 3);
    CHECK(g3.vertex_index({1, 2, 3}) == 3);

    const BranchingGraph g4 = branching_graph(4);
    CHECK(g4.vertices.size() == 10);
    CHECK(g4.edges.size() == 12);
    // Pairs come first in lexicographic order, then triples.
    CHECK(g4.vertices[0] == std::vector<std::size_t>{1, 2});
    CHECK(g4.vertices[5] == std::vector<std::size_t>{3, 4});
    CHECK(g4.vertices[6] == std::vector<std::size_t>{1, 2, 3});
    CHECK(g4.vertices[9] == std::vector<std::size_t>{2, 3, 4});

    CHECK(code_of([] { branching_graph(2); }) == ErrorCode::TooSmall);
}

TEST_CASE("branching graph edges join a pair to a containing triple") {
    const BranchingGraph g = branching_graph(5);
    for (const auto& [u, v] : g.edges) {
        const auto& a = g.vertices[u];
        const auto& b = g.vertices[v];
        REQUIRE(a.size() == 2);
        REQUIRE(b.size() == 3);
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
    // Adjacency mirrors the edge list.
    std::size_t half_edges = 0;
    for (const auto& nbrs : g.adjacency) half_edges += nbrs.size();
    CHECK(half_edges == 2 * g.edges.size());
}

TEST_CASE("membership counts of the induced subgraphs") {
    for (std::size_t n = 3; n <= 7; ++n) {
        const BranchingGraph g = branching_graph(n);
        for (const auto& subset : g.vertices) {
            std::size_t owners = 0;
            for (std::size_t i = 1; i <= n; ++i)
                if (std::find(subset.begin(), subset.end(), i) != subset.end()) ++owners;
            CHECK(owners == subset.size());
            CHECK(owners <= 3);
        }
    }
}
