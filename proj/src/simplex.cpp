#include "mishit/simplex.hpp"

#include <stdexcept>

#include "mishit/bits.hpp"

namespace mishit {

CoveringLpResult solve_covering_lp(const std::vector<uint64_t>& sets, int n,
                                   bool verify_certificates) {
    if (sets.empty()) throw std::invalid_argument("covering_lp: empty family");
    const uint64_t ground = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    for (uint64_t s : sets)
        if (!s || (s & ~ground))
            throw std::invalid_argument("covering_lp: member not a nonempty subset of ground set");

    const int m = static_cast<int>(sets.size());
    const int cols = m + n + 1;  // set vars, slacks, rhs

    // Packing tableau: row 0 is the objective (z - sum y = 0), rows 1..n the
    // vertex constraints with slack basis. All-zero y is feasible.
    std::vector<std::vector<mpq_class>> t(n + 1, std::vector<mpq_class>(cols, 0));
    for (int j = 0; j < m; ++j) t[0][j] = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j)
            if (sets[j] & bit(i)) t[i + 1][j] = 1;
        t[i + 1][m + i] = 1;
        t[i + 1][cols - 1] = 1;
    }
    std::vector<int> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = m + i;

    while (true) {
        // Bland: lowest-index column with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < m + n; ++j)
            if (t[0][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        mpq_class best_ratio;
        for (int i = 0; i < n; ++i) {
            if (t[i + 1][enter] <= 0) continue;
            mpq_class ratio = t[i + 1][cols - 1] / t[i + 1][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("covering_lp: packing LP unbounded (members nonempty, impossible)");

        mpq_class pivot = t[leave + 1][enter];
        for (int j = 0; j < cols; ++j) t[leave + 1][j] /= pivot;
        for (int i = 0; i <= n; ++i) {
            if (i == leave + 1 || t[i][enter] == 0) continue;
            mpq_class factor = t[i][enter];
            for (int j = 0; j < cols; ++j) t[i][j] -= factor * t[leave + 1][j];
        }
        basis[leave] = enter;
    }

    CoveringLpResult out;
    out.value = t[0][cols - 1];
    out.dual.assign(m, 0);
    for (int i = 0; i < n; ++i)
        if (basis[i] < m) out.dual[basis[i]] = t[i + 1][cols - 1];
    out.primal.assign(n, 0);
    for (int v = 0; v < n; ++v) out.primal[v] = t[0][m + v];

    if (verify_certificates) {
        mpq_class primal_total = 0, dual_total = 0;
        for (int v = 0; v < n; ++v) {
            if (out.primal[v] < 0 || out.primal[v] > 1)
                throw std::logic_error("covering_lp: primal weight outside [0,1]");
            primal_total += out.primal[v];
        }
        for (int j = 0; j < m; ++j) {
            if (out.dual[j] < 0) throw std::logic_error("covering_lp: negative dual");
            dual_total += out.dual[j];
            mpq_class covered = 0;
            for (uint64_t s = sets[j]; s;) covered += out.primal[pop_lowest(s)];
            if (covered < 1) throw std::logic_error("covering_lp: primal infeasible");
        }
        for (int v = 0; v < n; ++v) {
            mpq_class load = 0;
            for (int j = 0; j < m; ++j)
                if (sets[j] & bit(v)) load += out.dual[j];
            if (load > 1) throw std::logic_error("covering_lp: dual infeasible");
        }
        if (primal_total != out.value || dual_total != out.value)
            throw std::logic_error("covering_lp: certificate totals differ from optimum");
    }
    return out;
}

}  // namespace mishit
