#include "mishit/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mishit/errors.hpp"
#include "mishit/invariants.hpp"
#include "mishit/simplex.hpp"

namespace mishit {

namespace {

// Emits all independent sets of size exactly `target` containing `chosen`,
// extending with candidates from `cands` (ascending), which keeps the
// output in lexicographic order without a sort.
void enumerate_rec(const Graph& g, uint64_t chosen, int size, uint64_t cands,
                   int target, size_t cap, std::vector<uint64_t>& out) {
    if (size == target) {
        if (out.size() == cap)
            throw BudgetError("family: maximum independent set count exceeds cap");
        out.push_back(chosen);
        return;
    }
    while (cands) {
        if (size + popcount(cands) < target) return;
        int v = pop_lowest(cands);
        enumerate_rec(g, chosen | bit(v), size + 1, cands & ~g.adj[v], target, cap, out);
    }
}

}  // namespace

MaxISFamily enumerate_max_independent_sets(const Graph& g, size_t cap) {
    VertexSetValue a = alpha(g);
    MaxISFamily fam;
    fam.ground_n = g.n;
    fam.alpha = a.value;
    enumerate_rec(g, 0, 0, g.vertex_mask(), a.value, cap, fam.sets);
    return fam;
}

namespace {

mpq_class residual_lp_value(const std::vector<uint64_t>& residual, int n) {
    return solve_covering_lp(residual, n, /*verify_certificates=*/false).value;
}

long ceil_to_long(const mpq_class& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c.get_si();
}

class HittingSolver {
public:
    explicit HittingSolver(const MaxISFamily& fam) : fam_(fam) {}

    Transversal solve() {
        // Greedy incumbent: vertex hitting most unhit members, lowest index
        // on ties.
        uint64_t chosen = 0;
        std::vector<char> hit(fam_.size(), 0);
        size_t remaining = fam_.size();
        while (remaining) {
            int best_v = -1, best_cnt = -1;
            for (int v = 0; v < fam_.ground_n; ++v) {
                int cnt = 0;
                for (size_t j = 0; j < fam_.size(); ++j)
                    if (!hit[j] && (fam_.sets[j] & bit(v))) ++cnt;
                if (cnt > best_cnt) {
                    best_cnt = cnt;
                    best_v = v;
                }
            }
            chosen |= bit(best_v);
            for (size_t j = 0; j < fam_.size(); ++j)
                if (!hit[j] && (fam_.sets[j] & bit(best_v))) {
                    hit[j] = 1;
                    --remaining;
                }
        }
        best_ = {chosen, popcount(chosen)};
        descend(0, 0);
        return best_;
    }

private:
    void descend(uint64_t chosen, uint64_t excluded) {
        int size = popcount(chosen);
        std::vector<uint64_t> residual;
        int branch_set = -1;
        int branch_avail = kMaxVertices + 1;
        for (size_t j = 0; j < fam_.size(); ++j) {
            if (fam_.sets[j] & chosen) continue;
            uint64_t usable = fam_.sets[j] & ~excluded;
            if (!usable) return;  // unhit and unreachable: infeasible branch
            residual.push_back(usable);
            int avail = popcount(usable);
            if (avail < branch_avail) {
                branch_avail = avail;
                branch_set = static_cast<int>(residual.size()) - 1;
            }
        }
        if (residual.empty()) {
            if (size < best_.size) best_ = {chosen, size};
            return;
        }
        if (size + ceil_to_long(residual_lp_value(residual, fam_.ground_n)) >=
            best_.size)
            return;
        uint64_t branch = residual[branch_set];
        while (branch) {
            int v = pop_lowest(branch);
            descend(chosen | bit(v), excluded);
            excluded |= bit(v);
        }
    }

    const MaxISFamily& fam_;
    Transversal best_;
};

}  // namespace

Transversal hitting_number(const MaxISFamily& fam) {
    if (fam.sets.empty()) throw std::invalid_argument("hitting_number: empty family");
    return HittingSolver(fam).solve();
}

RationalWeights fractional_transversal(const MaxISFamily& fam) {
    if (fam.sets.empty())
        throw std::invalid_argument("fractional_transversal: empty family");
    CoveringLpResult lp = solve_covering_lp(fam.sets, fam.ground_n);
    return {std::move(lp.primal), std::move(lp.value), std::move(lp.dual)};
}

ShatterCheck is_shattered(const MaxISFamily& fam, uint64_t s) {
    int k = popcount(s);
    ShatterCheck out;
    if (k > 0 && (k >= 63 || (uint64_t{1} << k) > fam.size())) {
        // Fewer members than required distinct traces; no map to report.
        return out;
    }
    std::vector<int> verts = set_to_vertices(s);
    out.realizer.assign(size_t{1} << k, -1);
    size_t found = 0;
    for (size_t j = 0; j < fam.size() && found < out.realizer.size(); ++j) {
        uint64_t trace = fam.sets[j] & s;
        size_t idx = 0;
        for (int i = 0; i < k; ++i)
            if (trace & bit(verts[i])) idx |= size_t{1} << i;
        if (out.realizer[idx] < 0) {
            out.realizer[idx] = static_cast<int32_t>(j);
            ++found;
        }
    }
    out.shattered = found == out.realizer.size();
    return out;
}

VcResult vc_dimension(const MaxISFamily& fam) {
    if (fam.sets.empty()) throw std::invalid_argument("vc_dimension: empty family");
    int ub = fam.alpha;
    while (ub > 0 && (ub >= 63 || (uint64_t{1} << ub) > fam.size())) --ub;

    std::vector<int> member;
    for (int k = ub; k >= 1; --k) {
        // Distinct k-subsets of members, in lexicographic order.
        std::unordered_set<uint64_t> seen;
        std::vector<uint64_t> candidates;
        std::vector<int> idx(k);
        for (uint64_t set : fam.sets) {
            member = set_to_vertices(set);
            int a = static_cast<int>(member.size());
            if (a < k) continue;
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                uint64_t sub = 0;
                for (int i : idx) sub |= bit(member[i]);
                if (seen.insert(sub).second) candidates.push_back(sub);
                int i = k - 1;
                while (i >= 0 && idx[i] == a - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        std::sort(candidates.begin(), candidates.end(), lex_less);
        for (uint64_t s : candidates)
            if (is_shattered(fam, s).shattered) return {k, s};
    }
    return {0, 0};  // the empty set is always shattered
}

}  // namespace mishit
