#ifndef MISHIT_PROOF_HPP
#define MISHIT_PROOF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mishit/family.hpp"
#include "mishit/graph.hpp"

namespace mishit {

enum class LogBase { natural, binary };

double log_in_base(double x, LogBase base);

// C(omega + t - 1, t - 1), exact; requires omega >= 1, t >= 1.
mpz_class ramsey_binomial_bound(int omega, int t);

// 2 * d * tau* * log(11 * tau*); requires d >= 0, tau* >= 1.
double hw_bound(int d, const mpq_class& tau_star, LogBase base = LogBase::natural);

// 10 * t^t * omega^(3t-3) * log(omega); requires t >= 2, omega >= 2.
double main_bound(int t, int omega, LogBase base = LogBase::natural);

// Whether 2 * C(omega+t-1, t-1) * omega^(2t-2) * log(11 * omega^(2t-2))
// <= 10 * t^t * omega^(3t-3) * log(omega) at (t, omega); t >= 2, omega >= 2.
bool check_final_arithmetic(int t, int omega, LogBase base = LogBase::natural);

// The combinatorial witness extracted from a shattered set S = {v_1..v_d}:
// u_i comes from the realizer of S minus {v_i}, is adjacent to v_i and to no
// other v_j, lies outside S; the u_i are pairwise distinct, the pairs
// {v_i, u_i} form a matching of size d, and the graph induced on the u_i has
// independence number < t (t = im(G) + 1). Construction picks the smallest
// valid u_i. Throws WitnessError with a full diagnostic if any property
// fails (which would falsify the underlying argument).
struct ShatterWitness {
    uint64_t s = 0;
    std::vector<int32_t> realizer;  // as in ShatterCheck, indexed by subset of s
    std::vector<int> u;             // aligned with ascending vertices of s
    int d = 0;
};

ShatterWitness witness_from_shattered(const Graph& g, const MaxISFamily& fam, uint64_t s);

// One sampling attempt draws m = max(1, ceil(2 d tau* log(11 tau*))) vertices
// i.i.d. from the distribution weights/tau* and keeps the draw if it meets
// every family member. Exact integer sampling (no floating thresholds),
// deterministic per seed. Failure to hit within max_attempts is reported as
// statistics, not as an invariant violation.
struct SampleResult {
    bool success = false;
    uint64_t transversal = 0;       // distinct vertices of the successful draw
    int attempts = 0;               // attempts consumed (successful one included)
    size_t draws = 0;               // m
    std::vector<int> miss_counts;   // unhit members per failed attempt
};

SampleResult epsilon_net_sample(const MaxISFamily& fam, const RationalWeights& weights,
                                int d, uint64_t seed, int max_attempts,
                                LogBase base = LogBase::natural);

enum class LinkStatus { pass, fail, skip };

struct LinkResult {
    LinkStatus status = LinkStatus::skip;
    std::string note;  // "-" when unremarkable
};

// Everything the chain verifier computes for one graph, plus per-link
// verdicts. Links:
//   L1  tau* <= n/alpha                (exact rationals)
//   L2  n/alpha <= chi                 (skipped when chi exceeds its budget)
//   L3  chi <= omega^(2t-2)
//   L4  d < C(omega+t-1, t-1)
//   L5  h <= 2 d tau* log(11 tau*)     (skipped when d = 0: degenerate)
//   L6  h <= 10 t^t omega^(3t-3) log omega   (skipped when omega = 1)
//   L7  the shattered-set witness validates on a maximum shattered set
// Real-valued right sides (L5, L6) are padded one ulp toward passing and
// near-boundary outcomes (1e-9 relative) are flagged for manual review, so a
// rounding artifact can never masquerade as a counterexample.
struct ChainReport {
    int n = 0;
    int alpha = 0;
    int omega = 0;
    std::optional<int> chi;  // empty: budget exceeded
    int im = 0;
    int t = 0;
    size_t family_size = 0;
    int h = 0;
    mpq_class tau_star;
    int vc_d = 0;
    uint64_t shattered = 0;
    mpq_class n_over_alpha;
    mpz_class bound_wagon;
    mpz_class bound_ramsey;
    double bound_hw = 0.0;
    std::optional<double> bound_main;  // empty: omega < 2
    LogBase log_base = LogBase::natural;
    LinkResult links[7];

    bool all_pass() const {
        for (const auto& l : links)
            if (l.status == LinkStatus::fail) return false;
        return true;
    }
};

// Runs the whole chain on one graph. t defaults to im(G)+1; an override must
// exceed im(G) (throws std::invalid_argument otherwise). May throw
// BudgetError from the family cap; a chi budget overrun only skips L2/L3.
ChainReport verify_chain(const Graph& g, LogBase base = LogBase::natural,
                         std::optional<int> t_override = std::nullopt,
                         size_t family_cap = kDefaultFamilyCap);

}  // namespace mishit

#endif
