#ifndef MISHIT_INVARIANTS_HPP
#define MISHIT_INVARIANTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "mishit/graph.hpp"

namespace mishit {

// Invariant value plus a witness attaining it; re-checking the witness
// against the graph must reproduce the value exactly.
struct VertexSetValue {
    int value = 0;
    uint64_t witness = 0;
};

struct ColoringValue {
    int value = 0;
    std::vector<int> colors;  // per-vertex, 0-based
};

struct MatchingValue {
    int value = 0;
    std::vector<std::pair<int, int>> witness;  // edges (u < v)
};

// Maximum independent set size, exact (clique branch-and-bound on the
// complement, greedy-coloring upper bounds). Witness is one maximum
// independent set, deterministic.
VertexSetValue alpha(const Graph& g);

// Clique number, exact; equals alpha(complement(g)).
VertexSetValue omega(const Graph& g);

// Size of the exactness budget for chromatic_number.
inline constexpr int kChromaticBudget = 20;

// Exact chromatic number with a proper coloring witness. Branch-and-bound
// over color classes with a clique lower bound; throws BudgetError for
// n > kChromaticBudget so callers skip chi-dependent checks instead of
// trusting an approximation.
ColoringValue chromatic_number(const Graph& g);

// Largest m such that m disjoint edges induce exactly those m edges (no
// other edges among their 2m endpoints); exact, with the edge set witness.
MatchingValue induced_matching_number(const Graph& g);

// omega^(2t-2) exactly; requires omega >= 1, t >= 1.
mpz_class wagon_bound(int omega, int t);

}  // namespace mishit

#endif
