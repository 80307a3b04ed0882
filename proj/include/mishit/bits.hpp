#ifndef MISHIT_BITS_HPP
#define MISHIT_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mishit {

// Vertex sets are single machine words: bit v set <=> vertex v in the set.

inline constexpr uint64_t bit(int v) { return uint64_t{1} << v; }

inline int popcount(uint64_t s) { return std::popcount(s); }

inline int lowest(uint64_t s) { return std::countr_zero(s); }

// Removes and returns the lowest set bit's index.
inline int pop_lowest(uint64_t& s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    return v;
}

inline std::vector<int> set_to_vertices(uint64_t s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s) out.push_back(pop_lowest(s));
    return out;
}

// Lexicographic order on the ascending vertex sequences, so {0,3} < {1,2}
// and a proper prefix sorts first. This is the normalization order used for
// families and witnesses.
inline bool lex_less(uint64_t a, uint64_t b) {
    while (a && b) {
        int va = pop_lowest(a);
        int vb = pop_lowest(b);
        if (va != vb) return va < vb;
    }
    return !a && b;
}

// "{0,2,4}"; "{}" for the empty set.
inline std::string format_set(uint64_t s) {
    std::string out = "{";
    bool first = true;
    while (s) {
        if (!first) out += ',';
        out += std::to_string(pop_lowest(s));
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace mishit

#endif
