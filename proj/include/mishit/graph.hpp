#ifndef MISHIT_GRAPH_HPP
#define MISHIT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mishit/bits.hpp"

namespace mishit {

inline constexpr int kMaxVertices = 64;

// Undirected simple graph on 1..64 vertices. One adjacency word per vertex;
// immutable after construction by convention, so values are freely shared
// across threads.
struct Graph {
    int n = 0;
    std::array<uint64_t, kMaxVertices> adj{};

    uint64_t vertex_mask() const {
        return n == 64 ? ~uint64_t{0} : bit(n) - 1;
    }
    uint64_t neighbors(int v) const { return adj[v]; }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    int degree(int v) const { return popcount(adj[v]); }
    int edge_count() const;

    bool operator==(const Graph& other) const {
        return n == other.n && adj == other.adj;
    }

    // Throws std::invalid_argument if the adjacency structure violates the
    // type's invariants (symmetry, no loops, no bits at or above n).
    void validate() const;
};

Graph empty_graph(int n);

// Headerless graph6 record -> labeled graph, bit-exact per the format
// specification (column-major upper triangle, 6 bits per payload byte,
// each byte offset by 63). Throws ParseError on malformed records:
// characters outside [63,126], n == 0 or n > 64, wrong payload length,
// nonzero padding bits.
Graph parse_graph6(std::string_view line);

// Inverse of parse_graph6; n <= 62 uses the one-byte form, 63..64 the
// extended '~' form.
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);

// Vertices of s relabeled 0..|s|-1 in ascending order, adjacency restricted.
// Throws std::invalid_argument for an empty s or bits outside the graph.
Graph induced_subgraph(const Graph& g, uint64_t s);

struct GeneratorSpec {
    enum class Family { cycle, complete, empty, kneser, complete_multipartite, random };
    Family family = Family::empty;
    std::vector<int> params;   // n; or m,k; or part sizes; or n (random)
    int64_t p_num = 1, p_den = 2;  // edge probability, random family only
    uint64_t seed = 0;             // random family only

    // Text form "family:params", e.g. "cycle:5", "kneser:5,2",
    // "complete_multipartite:3,3,3", "random:10,1/2". The random family's
    // seed comes from the caller, not the text.
    static GeneratorSpec parse(std::string_view text);
    std::string describe() const;
};

// Deterministic: a fixed spec (including seed) always yields the same graph.
Graph generate(const GeneratorSpec& spec);

// Yields all 2^(n(n-1)/2) labeled graphs on n vertices exactly once, in
// ascending edge-mask order (bit k of the mask is the k-th upper-triangle
// pair in graph6 order). Refuses n > 7.
class AllGraphsStream {
public:
    explicit AllGraphsStream(int n);
    bool has_next() const { return next_ < total_; }
    Graph next();
    uint64_t total() const { return total_; }
    // The stream is a pure function of (n, index); usable for parallel scans.
    static Graph graph_at(int n, uint64_t edge_mask);

private:
    int n_;
    uint64_t next_ = 0;
    uint64_t total_;
};

}  // namespace mishit

#endif
