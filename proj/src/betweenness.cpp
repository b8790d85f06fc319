#include "embedlab/betweenness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "embedlab/errors.hpp"

namespace embedlab {

BetweennessInstance make_instance(std::size_t n, TripleSemantics semantics,
                                  std::vector<std::array<std::size_t, 3>> triples) {
    for (const auto& t : triples) {
        for (std::size_t v : t)
            if (v < 1 || v > n)
                fail(ErrorCode::InvalidArgument,
                     "triple entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            fail(ErrorCode::InvalidArgument, "triple entries must be distinct");
    }
    return BetweennessInstance{n, semantics, std::move(triples)};
}

BetweennessInstance to_non_betweenness(const BetweennessInstance& t) {
    if (t.semantics != TripleSemantics::Betweenness)
        fail(ErrorCode::WrongSemantics, "instance is already non-betweenness");
    BetweennessInstance out;
    out.n = t.n;
    out.semantics = TripleSemantics::NonBetweenness;
    out.triples.reserve(2 * t.triples.size());
    for (const auto& [i, j, k] : t.triples) {
        out.triples.push_back({j, i, k});
        out.triples.push_back({k, i, j});
    }
    return out;
}

bool ordering_satisfies(const BetweennessInstance& t, const std::vector<std::size_t>& ordering) {
    if (ordering.size() != t.n)
        fail(ErrorCode::InvalidArgument, "ordering length does not match the element count");
    std::vector<std::size_t> pos(t.n + 1, 0);
    for (std::size_t r = 0; r < ordering.size(); ++r) {
        std::size_t e = ordering[r];
        if (e < 1 || e > t.n || pos[e] != 0)
            fail(ErrorCode::InvalidArgument, "ordering is not a permutation of 1..n");
        pos[e] = r + 1;
    }
    for (const auto& [i, j, k] : t.triples) {
        bool between = (pos[j] < pos[i] && pos[i] < pos[k]) ||
                       (pos[k] < pos[i] && pos[i] < pos[j]);
        bool want = t.semantics == TripleSemantics::Betweenness;
        if (between != want) return false;
    }
    return true;
}

ConsistencyResult consistency_check(const BetweennessInstance& t) {
    if (t.n > 10) fail(ErrorCode::TooLarge, "consistency check enumerates n! orderings");
    ConsistencyResult r;
    std::vector<std::size_t> perm(t.n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (ordering_satisfies(t, perm)) {
            r.consistent = true;
            r.ordering = perm;
            return r;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

}  // namespace embedlab
