#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace embedlab {

enum class TripleSemantics { Betweenness, NonBetweenness };

// Ordering-constraint instance: each triple (i, j, k) over elements 1..n
// demands that i lie strictly between j and k (betweenness semantics) or
// that it not lie strictly between them (non-betweenness semantics) in a
// sought linear order.
struct BetweennessInstance {
    std::size_t n = 0;
    TripleSemantics semantics = TripleSemantics::Betweenness;
    std::vector<std::array<std::size_t, 3>> triples;  // 1-based elements
};

// Validates ranges (entries in 1..n, distinct within each triple).
BetweennessInstance make_instance(std::size_t n, TripleSemantics semantics,
                                  std::vector<std::array<std::size_t, 3>> triples);

// Rewrites each betweenness constraint (i, j, k) as the two non-betweenness
// constraints (j, i, k) and (k, i, j); the set of consistent orderings is
// unchanged.  Error WrongSemantics when the input is already non-betweenness.
BetweennessInstance to_non_betweenness(const BetweennessInstance& t);

// True when the permutation (elements 1..n listed least first) satisfies
// every triple of the instance.
bool ordering_satisfies(const BetweennessInstance& t, const std::vector<std::size_t>& ordering);

struct ConsistencyResult {
    bool consistent = false;
    std::vector<std::size_t> ordering;  // lexicographically least witness
};

// Exhaustive search over all n! permutations in lexicographic order,
// returning the first witness.  Error TooLarge for n > 10.
ConsistencyResult consistency_check(const BetweennessInstance& t);

}  // namespace embedlab
