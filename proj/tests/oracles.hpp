// Brute-force reference implementations used only by tests. Everything here
// works straight from definitions (subset enumeration), independent of the
// solver code paths it cross-checks.
#ifndef MISHIT_TESTS_ORACLES_HPP
#define MISHIT_TESTS_ORACLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mishit/bits.hpp"
#include "mishit/graph.hpp"

namespace oracles {

using mishit::Graph;
using mishit::bit;

inline bool is_independent(const Graph& g, uint64_t s) {
    for (uint64_t m = s; m;) {
        int v = mishit::pop_lowest(m);
        if (g.adj[v] & s) return false;
    }
    return true;
}

inline bool is_clique(const Graph& g, uint64_t s) {
    for (uint64_t m = s; m;) {
        int v = mishit::pop_lowest(m);
        if ((g.adj[v] & s) != (s & ~bit(v))) return false;
    }
    return true;
}

inline int brute_alpha(const Graph& g) {
    int best = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << g.n); ++s)
        if (is_independent(g, s)) best = std::max(best, mishit::popcount(s));
    return best;
}

inline int brute_omega(const Graph& g) {
    int best = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << g.n); ++s)
        if (is_clique(g, s)) best = std::max(best, mishit::popcount(s));
    return best;
}

inline std::vector<uint64_t> brute_max_is_family(const Graph& g) {
    int a = brute_alpha(g);
    std::vector<uint64_t> out;
    for (uint64_t s = 0; s < (uint64_t{1} << g.n); ++s)
        if (mishit::popcount(s) == a && is_independent(g, s)) out.push_back(s);
    return out;  // ascending masks; caller sorts if lex order matters
}

// Largest set of pairwise disjoint edges with no other edges among their
// endpoints, by enumerating subsets of the edge list.
inline int brute_induced_matching(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    int best = 0;
    for (uint64_t pick = 0; pick < (uint64_t{1} << edges.size()); ++pick) {
        uint64_t verts = 0;
        int count = 0;
        bool ok = true;
        for (size_t i = 0; ok && i < edges.size(); ++i) {
            if (!((pick >> i) & 1)) continue;
            uint64_t pair = bit(edges[i].first) | bit(edges[i].second);
            if (verts & pair) ok = false;
            verts |= pair;
            ++count;
        }
        if (!ok || count <= best) continue;
        int induced = 0;
        for (auto [u, v] : edges)
            if ((verts & bit(u)) && (verts & bit(v))) ++induced;
        if (induced == count) best = count;
    }
    return best;
}

inline int brute_hitting_number(const std::vector<uint64_t>& family, int n) {
    int best = n + 1;
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
        if (mishit::popcount(s) >= best) continue;
        bool hits = true;
        for (uint64_t f : family)
            if (!(f & s)) {
                hits = false;
                break;
            }
        if (hits) best = mishit::popcount(s);
    }
    return best;
}

inline bool brute_is_shattered(const std::vector<uint64_t>& family, uint64_t s) {
    std::vector<int> verts = mishit::set_to_vertices(s);
    for (uint64_t pick = 0; pick < (uint64_t{1} << verts.size()); ++pick) {
        uint64_t want = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            if ((pick >> i) & 1) want |= bit(verts[i]);
        bool found = false;
        for (uint64_t f : family)
            if ((f & s) == want) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

inline int brute_vc_dimension(const std::vector<uint64_t>& family, int n) {
    int best = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s)
        if (mishit::popcount(s) > best && brute_is_shattered(family, s))
            best = mishit::popcount(s);
    return best;
}

inline bool brute_colorable(const Graph& g, int k, std::vector<int>& colors, int v) {
    if (v == g.n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (uint64_t m = g.adj[v] & (bit(v) - 1); ok && m;)
            if (colors[mishit::pop_lowest(m)] == c) ok = false;
        if (!ok) continue;
        colors[v] = c;
        if (brute_colorable(g, k, colors, v + 1)) return true;
    }
    return false;
}

inline bool brute_colorable(const Graph& g, int k) {
    std::vector<int> colors(g.n, -1);
    return brute_colorable(g, k, colors, 0);
}

// Independent graph6 encoder: collects upper-triangle bits into a flat list
// and packs it 6 at a time, following the format text rather than sharing
// any code with the production encoder.
inline std::string reference_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>((g.n >> 12) % 64 + 63));
        out.push_back(static_cast<char>((g.n >> 6) % 64 + 63));
        out.push_back(static_cast<char>(g.n % 64 + 63));
    }
    std::vector<int> bits;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push_back(g.has_edge(row, col) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

}  // namespace oracles

#endif
