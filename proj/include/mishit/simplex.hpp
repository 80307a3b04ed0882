#ifndef MISHIT_SIMPLEX_HPP
#define MISHIT_SIMPLEX_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace mishit {

// Exact solution of the covering/packing LP pair over a 0/1 incidence
// structure of `sets` (bitmask members) on ground set {0..n-1}:
//
//   covering (primal):  min  sum_v x_v   s.t.  sum_{v in F} x_v >= 1,  x >= 0
//   packing  (dual):    max  sum_F y_F   s.t.  sum_{F ni v} y_F <= 1,  y >= 0
//
// Solved by tableau simplex on the packing side with Bland's rule (finite,
// deterministic); the covering optimum is read off the slack reduced costs.
// Every member must be a nonempty subset of the ground set.
struct CoveringLpResult {
    mpq_class value;                 // common optimal objective
    std::vector<mpq_class> primal;   // x, one per ground element
    std::vector<mpq_class> dual;     // y, one per set
};

// verify_certificates re-checks primal/dual feasibility and the exact
// equality of both objectives, throwing std::logic_error on any violation;
// callers on hot paths that only need the value may disable it.
CoveringLpResult solve_covering_lp(const std::vector<uint64_t>& sets, int n,
                                   bool verify_certificates = true);

}  // namespace mishit

#endif
