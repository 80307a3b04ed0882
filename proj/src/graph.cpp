#include "mishit/graph.hpp"

#include <random>
#include <stdexcept>

#include "mishit/errors.hpp"

namespace mishit {

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += popcount(adj[v]);
    return twice / 2;
}

void Graph::validate() const {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count out of range");
    for (int v = 0; v < n; ++v) {
        if (adj[v] & ~vertex_mask())
            throw std::invalid_argument("graph: adjacency bit at or above n");
        if (adj[v] & bit(v))
            throw std::invalid_argument("graph: self-loop");
    }
    for (int v = 0; v < n; ++v)
        for (uint64_t m = adj[v]; m;)
            if (!(adj[pop_lowest(m)] & bit(v)))
                throw std::invalid_argument("graph: asymmetric adjacency");
}

Graph empty_graph(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count out of range");
    Graph g;
    g.n = n;
    return g;
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_payload_len(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty record");
    for (char c : line)
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6: character out of range [63,126]");

    size_t pos = 0;
    long n;
    if (line[0] == '~') {
        // Extended form: '~' then three 6-bit digits, big-endian.
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6: declared n > 64");
        if (line.size() < 4) throw ParseError("graph6: truncated extended n");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kG6Lo);
        pos = 4;
    } else {
        n = line[0] - kG6Lo;
        pos = 1;
    }
    if (n == 0) throw ParseError("graph6: n = 0 unsupported (need n >= 1)");
    if (n > kMaxVertices) throw ParseError("graph6: declared n > 64");

    size_t need = static_cast<size_t>(g6_payload_len(static_cast<int>(n)));
    if (line.size() - pos != need)
        throw ParseError("graph6: record length inconsistent with n");

    Graph g = empty_graph(static_cast<int>(n));
    int bit_index = 0;
    const int nbits = static_cast<int>(n) * (static_cast<int>(n) - 1) / 2;
    for (size_t i = pos; i < line.size(); ++i) {
        int word = line[i] - kG6Lo;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int on = (word >> b) & 1;
            if (bit_index >= nbits) {
                if (on) throw ParseError("graph6: nonzero padding bits");
                continue;
            }
            if (on) {
                // bit k is pair (u, v): column-major upper triangle.
                int k = bit_index, v = 1;
                while (k >= v) k -= v++;
                g.add_edge(k, v);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    g.validate();
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + kG6Lo));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((g.n & 63) + kG6Lo));
    }
    int word = 0, filled = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            word = (word << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kG6Lo));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((word << (6 - filled)) + kG6Lo));
    return out;
}

Graph complement(const Graph& g) {
    Graph c = empty_graph(g.n);
    for (int v = 0; v < g.n; ++v) c.adj[v] = ~g.adj[v] & g.vertex_mask() & ~bit(v);
    return c;
}

Graph induced_subgraph(const Graph& g, uint64_t s) {
    if (!s) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if (s & ~g.vertex_mask())
        throw std::invalid_argument("induced_subgraph: vertex outside graph");
    std::vector<int> verts = set_to_vertices(s);
    Graph h = empty_graph(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

namespace {

const char* family_name(GeneratorSpec::Family f) {
    switch (f) {
        case GeneratorSpec::Family::cycle: return "cycle";
        case GeneratorSpec::Family::complete: return "complete";
        case GeneratorSpec::Family::empty: return "empty";
        case GeneratorSpec::Family::kneser: return "kneser";
        case GeneratorSpec::Family::complete_multipartite: return "complete_multipartite";
        case GeneratorSpec::Family::random: return "random";
    }
    return "?";
}

int64_t parse_int(std::string_view s) {
    if (s.empty()) throw ParseError("generator: empty integer");
    int64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("generator: bad integer '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
        if (v > (int64_t{1} << 40)) throw ParseError("generator: integer too large");
    }
    return v;
}

// "p/q", "0.375", "0" or "1" -> exact rational.
void parse_probability(std::string_view s, int64_t& num, int64_t& den) {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = parse_int(s.substr(0, slash));
        den = parse_int(s.substr(slash + 1));
        if (den == 0) throw ParseError("generator: zero denominator");
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 9) throw ParseError("generator: probability too precise");
        int64_t scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        num = parse_int(s.substr(0, dot)) * scale + (frac.empty() ? 0 : parse_int(frac));
        den = scale;
    } else {
        num = parse_int(s);
        den = 1;
    }
    if (num > den) throw ParseError("generator: probability above 1");
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("generator: expected family:params");
    std::string_view fam = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    GeneratorSpec spec;
    if (fam == "cycle") spec.family = Family::cycle;
    else if (fam == "complete") spec.family = Family::complete;
    else if (fam == "empty") spec.family = Family::empty;
    else if (fam == "kneser") spec.family = Family::kneser;
    else if (fam == "complete_multipartite") spec.family = Family::complete_multipartite;
    else if (fam == "random") spec.family = Family::random;
    else throw ParseError("generator: unknown family '" + std::string(fam) + "'");

    std::vector<std::string_view> parts;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        parts.push_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (parts.empty()) throw ParseError("generator: missing parameters");

    if (spec.family == Family::random) {
        if (parts.size() != 2) throw ParseError("generator: random needs n,p");
        spec.params.push_back(static_cast<int>(parse_int(parts[0])));
        parse_probability(parts[1], spec.p_num, spec.p_den);
    } else {
        for (auto p : parts) spec.params.push_back(static_cast<int>(parse_int(p)));
    }
    return spec;
}

std::string GeneratorSpec::describe() const {
    std::string out = family_name(family);
    out += ':';
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    if (family == Family::random) {
        out += ',';
        out += std::to_string(p_num) + "/" + std::to_string(p_den);
    }
    return out;
}

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw ParseError(msg);
}

Graph gen_kneser(int m, int k) {
    require(k >= 1 && m >= 2 * k, "generator: kneser requires m >= 2k >= 2");
    // k-subsets of {0..m-1} in lexicographic order.
    std::vector<uint64_t> subsets;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        uint64_t s = 0;
        for (int v : c) s |= bit(v);
        subsets.push_back(s);
        int i = k - 1;
        while (i >= 0 && c[i] == m - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    require(subsets.size() <= kMaxVertices, "generator: kneser graph exceeds 64 vertices");
    Graph g = empty_graph(static_cast<int>(subsets.size()));
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if (!(subsets[i] & subsets[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph gen_random(int n, int64_t p_num, int64_t p_den, uint64_t seed) {
    require(n >= 1 && n <= kMaxVertices, "generator: n out of range");
    require(p_den > 0 && p_num >= 0 && p_num <= p_den, "generator: p outside [0,1]");
    Graph g = empty_graph(n);
    std::mt19937_64 rng(seed);
    // Exact threshold floor(p * 2^64); p == 1 always draws an edge. One draw
    // per pair in graph6 bit order, so the graph is a pure function of seed.
    const bool always = p_num == p_den;
    const uint64_t threshold = always
        ? 0
        : static_cast<uint64_t>((static_cast<unsigned __int128>(p_num) << 64) /
                                static_cast<unsigned __int128>(p_den));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            uint64_t r = rng();
            if (always || r < threshold) g.add_edge(u, v);
        }
    return g;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    using F = GeneratorSpec::Family;
    switch (spec.family) {
        case F::cycle: {
            require(spec.params.size() == 1, "generator: cycle needs n");
            int n = spec.params[0];
            require(n >= 3 && n <= kMaxVertices, "generator: cycle requires 3 <= n <= 64");
            Graph g = empty_graph(n);
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            return g;
        }
        case F::complete: {
            require(spec.params.size() == 1, "generator: complete needs n");
            int n = spec.params[0];
            require(n >= 1 && n <= kMaxVertices, "generator: n out of range");
            return complement(empty_graph(n));
        }
        case F::empty: {
            require(spec.params.size() == 1, "generator: empty needs n");
            int n = spec.params[0];
            require(n >= 1 && n <= kMaxVertices, "generator: n out of range");
            return empty_graph(n);
        }
        case F::kneser: {
            require(spec.params.size() == 2, "generator: kneser needs m,k");
            return gen_kneser(spec.params[0], spec.params[1]);
        }
        case F::complete_multipartite: {
            require(!spec.params.empty(), "generator: multipartite needs part sizes");
            int n = 0;
            for (int p : spec.params) {
                require(p >= 1, "generator: part size must be positive");
                n += p;
            }
            require(n <= kMaxVertices, "generator: total size exceeds 64");
            Graph g = empty_graph(n);
            int start = 0;
            for (size_t a = 0; a < spec.params.size(); ++a) {
                int next = start + spec.params[a];
                for (int u = 0; u < start; ++u)
                    for (int v = start; v < next; ++v) g.add_edge(u, v);
                start = next;
            }
            return g;
        }
        case F::random:
            require(spec.params.size() == 1, "generator: random needs n,p");
            return gen_random(spec.params[0], spec.p_num, spec.p_den, spec.seed);
    }
    throw ParseError("generator: unknown family");
}

AllGraphsStream::AllGraphsStream(int n) : n_(n) {
    if (n < 1 || n > 7)
        throw BudgetError("all_graphs_stream: n must be in [1,7]");
    total_ = uint64_t{1} << (n * (n - 1) / 2);
}

Graph AllGraphsStream::graph_at(int n, uint64_t edge_mask) {
    Graph g = empty_graph(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((edge_mask >> k) & 1) g.add_edge(u, v);
    return g;
}

Graph AllGraphsStream::next() {
    if (!has_next()) throw std::out_of_range("all_graphs_stream exhausted");
    return graph_at(n_, next_++);
}

}  // namespace mishit
