#ifndef MISHIT_FAMILY_HPP
#define MISHIT_FAMILY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "mishit/graph.hpp"

namespace mishit {

inline constexpr size_t kDefaultFamilyCap = 1'000'000;

// The set system of all maximum independent sets of a graph. Complete by
// construction (enumeration is exact), members pairwise distinct and in
// lexicographic order.
struct MaxISFamily {
    int ground_n = 0;
    int alpha = 0;
    std::vector<uint64_t> sets;

    size_t size() const { return sets.size(); }
};

// Throws BudgetError when the family would exceed `cap`: a truncated family
// would silently corrupt h, tau* and the VC dimension downstream.
MaxISFamily enumerate_max_independent_sets(const Graph& g, size_t cap = kDefaultFamilyCap);

struct Transversal {
    uint64_t vertices = 0;
    int size = 0;
};

// Minimum-size vertex set intersecting every member; exact branch and bound.
// The bound at each node is ceil(tau*) of the residual instance; branching
// follows the unhit member with fewest usable vertices, ties by lowest set
// index, vertices in ascending order. Deterministic.
Transversal hitting_number(const MaxISFamily& fam);

// Exact optimum of the fractional relaxation with both LP certificates.
// Invariants (checked): primal covers every member with total >= 1 each,
// dual loads every vertex at most 1, and the two totals are exactly equal.
struct RationalWeights {
    std::vector<mpq_class> weights;  // per vertex, in [0,1]
    mpq_class total;                 // tau*
    std::vector<mpq_class> dual;     // per family member
};

RationalWeights fractional_transversal(const MaxISFamily& fam);

// Shattering test. realizer[i] is the lowest family index whose trace on s
// equals the i-th subset of s (bit j of i <=> j-th smallest vertex of s),
// or -1; shattered means no -1 remains.
struct ShatterCheck {
    bool shattered = false;
    std::vector<int32_t> realizer;
};

ShatterCheck is_shattered(const MaxISFamily& fam, uint64_t s);

// Maximum size of a shattered set, exact, plus the lexicographically first
// set attaining it. Search space: a shattered set is contained in some
// member (its full trace must be realized), so candidates are subsets of
// members; also d <= alpha and 2^d <= |family| (distinct traces).
struct VcResult {
    int d = 0;
    uint64_t shattered = 0;
};

VcResult vc_dimension(const MaxISFamily& fam);

}  // namespace mishit

#endif
