#include "mishit/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "mishit/errors.hpp"

namespace mishit {

namespace {

// Max-clique branch and bound with greedy-coloring bounds (the classic
// candidate-coloring scheme). Deterministic: vertices are colored and
// branched in fixed index order, so the witness is reproducible.
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const Graph& g) : g_(g) {}

    VertexSetValue solve() {
        best_ = {0, 0};
        expand(g_.vertex_mask(), 0, 0);
        return best_;
    }

private:
    void expand(uint64_t cands, uint64_t chosen, int size) {
        if (!cands) {
            if (size > best_.value) best_ = {size, chosen};
            return;
        }
        if (size + popcount(cands) <= best_.value) return;

        // Greedy coloring of the candidate subgraph; a clique takes at most
        // one vertex per color class.
        std::array<int8_t, kMaxVertices> order{}, colorof{};
        int count = 0, color = 0;
        uint64_t uncolored = cands;
        while (uncolored) {
            ++color;
            uint64_t avail = uncolored;
            while (avail) {
                int v = pop_lowest(avail);
                avail &= ~g_.adj[v];
                uncolored &= ~bit(v);
                order[count] = static_cast<int8_t>(v);
                colorof[count] = static_cast<int8_t>(color);
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + colorof[i] <= best_.value) return;
            int v = order[i];
            expand(cands & g_.adj[v], chosen | bit(v), size + 1);
            cands &= ~bit(v);
        }
    }

    const Graph& g_;
    VertexSetValue best_;
};

}  // namespace

VertexSetValue omega(const Graph& g) {
    g.validate();
    return MaxCliqueSolver(g).solve();
}

VertexSetValue alpha(const Graph& g) {
    g.validate();
    return MaxCliqueSolver(complement(g)).solve();
}

namespace {

// Exact k-colorability with backtracking. Vertices in DSATUR-flavored
// dynamic order (max saturation, then max degree among uncolored, then
// index); the vertices of one maximum clique are pre-assigned to break
// color symmetry.
class ChromaticSolver {
public:
    explicit ChromaticSolver(const Graph& g) : g_(g) {}

    ColoringValue solve() {
        VertexSetValue clique = omega(g_);
        int lb = clique.value;

        // Greedy upper bound in index order.
        std::vector<int> greedy(g_.n, -1);
        int ub = 0;
        for (int v = 0; v < g_.n; ++v) {
            uint64_t used = 0;
            for (uint64_t m = g_.adj[v]; m;) {
                int u = pop_lowest(m);
                if (greedy[u] >= 0) used |= bit(greedy[u]);
            }
            int c = lowest(~used);
            greedy[v] = c;
            ub = std::max(ub, c + 1);
        }
        if (lb == ub) return {ub, greedy};

        clique_verts_ = set_to_vertices(clique.witness);
        for (int k = lb; k < ub; ++k) {
            colors_.assign(g_.n, -1);
            for (size_t i = 0; i < clique_verts_.size(); ++i)
                colors_[clique_verts_[i]] = static_cast<int>(i);
            k_ = k;
            if (try_color(static_cast<int>(clique_verts_.size())))
                return {k, colors_};
        }
        return {ub, greedy};
    }

private:
    bool try_color(int assigned) {
        if (assigned == g_.n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g_.n; ++v) {
            if (colors_[v] >= 0) continue;
            uint64_t used = 0;
            for (uint64_t m = g_.adj[v]; m;) {
                int u = pop_lowest(m);
                if (colors_[u] >= 0) used |= bit(colors_[u]);
            }
            int sat = popcount(used);
            int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        uint64_t used = 0;
        for (uint64_t m = g_.adj[pick]; m;) {
            int u = pop_lowest(m);
            if (colors_[u] >= 0) used |= bit(colors_[u]);
        }
        for (int c = 0; c < k_; ++c) {
            if (used & bit(c)) continue;
            colors_[pick] = c;
            if (try_color(assigned + 1)) return true;
            colors_[pick] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> clique_verts_;
    std::vector<int> colors_;
    int k_ = 0;
};

}  // namespace

ColoringValue chromatic_number(const Graph& g) {
    g.validate();
    if (g.n > kChromaticBudget)
        throw BudgetError("chromatic_number: n exceeds exactness budget");
    return ChromaticSolver(g).solve();
}

namespace {

struct ImState {
    const Graph& g;
    const std::vector<std::pair<int, int>>& edges;
    MatchingValue best;
    std::vector<std::pair<int, int>> current;

    // allowed: vertices whose closed neighborhoods avoid every chosen edge.
    // Any edge extending the induced matching has both endpoints allowed.
    void search(size_t from, uint64_t allowed) {
        if (static_cast<int>(current.size()) > best.value)
            best = {static_cast<int>(current.size()), current};
        if (static_cast<int>(current.size()) + popcount(allowed) / 2 <= best.value)
            return;
        for (size_t i = from; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (!(allowed & bit(u)) || !(allowed & bit(v))) continue;
            uint64_t next = allowed & ~(g.adj[u] | g.adj[v] | bit(u) | bit(v));
            current.emplace_back(u, v);
            search(i + 1, next);
            current.pop_back();
        }
    }
};

}  // namespace

MatchingValue induced_matching_number(const Graph& g) {
    g.validate();
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    ImState st{g, edges, {}, {}};
    st.search(0, g.vertex_mask());
    return st.best;
}

mpz_class wagon_bound(int omega, int t) {
    if (omega < 1 || t < 1)
        throw std::invalid_argument("wagon_bound: requires omega >= 1, t >= 1");
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(omega),
                  static_cast<unsigned long>(2 * t - 2));
    return out;
}

}  // namespace mishit
