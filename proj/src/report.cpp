#include "mishit/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>
#include <vector>

#include "mishit/errors.hpp"
#include "mishit/invariants.hpp"

namespace mishit {

std::string format_rational(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

uint64_t stream_seed(uint64_t seed, uint64_t index) {
    // SplitMix64 finalizer over seed + (index+1)*golden; each stream item is
    // derivable independently, which keeps parallel scans order-free.
    uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

const char* base_name(LogBase b) { return b == LogBase::natural ? "natural" : "binary"; }

const char* status_name(LinkStatus s) {
    switch (s) {
        case LinkStatus::pass: return "pass";
        case LinkStatus::fail: return "fail";
        case LinkStatus::skip: return "skip";
    }
    return "?";
}

// Error text for record lines: lowercase kebab, no spaces or colons.
std::string kebab(std::string_view text) {
    std::string out;
    bool dash = false;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            dash = false;
        } else if (!dash && !out.empty()) {
            out += '-';
            dash = true;
        }
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out.empty() ? "error" : out;
}

std::string format_int_list(const std::vector<int>& xs) {
    std::string out = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + ")";
}

struct InputLine {
    int line_no = 0;
    std::string text;
};

// One input source, already validated: either explicit graph6 lines or a
// generator stream addressed by index.
struct Source {
    std::vector<InputLine> lines;
    std::optional<GeneratorSpec> gen;
    uint64_t gen_count = 0;
    int sweep_n = 0;  // nonzero: exhaustive stream on this many vertices
    uint64_t total() const {
        if (sweep_n) return uint64_t{1} << (sweep_n * (sweep_n - 1) / 2);
        if (gen) return gen_count;
        return lines.size();
    }
};

Source resolve_source(const RunConfig& cfg) {
    Source src;
    if (cfg.command == RunConfig::Command::sweep) {
        if (cfg.sweep_n < 1 || cfg.sweep_n > 7)
            throw ParseError("sweep: --n must be in [1,7]");
        src.sweep_n = cfg.sweep_n;
        return src;
    }
    if (cfg.gen && !cfg.input.empty())
        throw ParseError("exactly one input source: --input or --gen");
    if (cfg.gen) {
        if (cfg.count < 1) throw ParseError("--count must be positive");
        if (cfg.count > 1 && cfg.gen->family != GeneratorSpec::Family::random)
            throw ParseError("--count above 1 requires the random family");
        src.gen = cfg.gen;
        src.gen_count = static_cast<uint64_t>(cfg.count);
        return src;
    }
    if (cfg.input.empty()) throw ParseError("missing input: --input or --gen");

    auto read_lines = [&src](std::istream& in) {
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.rfind(">>", 0) == 0) continue;  // graph6 header
            src.lines.push_back({no, line});
        }
    };
    if (cfg.input == "-") {
        read_lines(std::cin);
    } else if (std::ifstream file(cfg.input); file.good()) {
        read_lines(file);
    } else {
        src.lines.push_back({0, cfg.input});  // graph6 literal
    }
    return src;
}

// Obtains the index-th graph of the source; ParseError propagates to the
// caller, which turns it into an error record.
Graph graph_at(const Source& src, const RunConfig& cfg, uint64_t index) {
    if (src.sweep_n) return AllGraphsStream::graph_at(src.sweep_n, index);
    if (src.gen) {
        GeneratorSpec spec = *src.gen;
        spec.seed = spec.family == GeneratorSpec::Family::random
                        ? stream_seed(cfg.seed, index)
                        : cfg.seed;
        return generate(spec);
    }
    return parse_graph6(src.lines[index].text);
}

std::string chain_values(const std::string& g6, const ChainReport& r) {
    std::ostringstream os;
    os << "graph:" << g6 << " n:" << r.n << " alpha:" << r.alpha << " omega:" << r.omega
       << " chi:";
    if (r.chi) os << *r.chi;
    else os << "skipped";
    os << " im:" << r.im << " t:" << r.t << " family:" << r.family_size << " h:" << r.h
       << " tau_star:" << format_rational(r.tau_star) << " vc:" << r.vc_d;
    return os.str();
}

std::string invariants_record(const std::string& g6, const ChainReport& r) {
    return "record:invariants " + chain_values(g6, r);
}

std::string verify_record(const std::string& g6, const ChainReport& r) {
    std::ostringstream os;
    os << "record:verify " << chain_values(g6, r)
       << " n_over_alpha:" << format_rational(r.n_over_alpha)
       << " wagon:" << r.bound_wagon.get_str() << " ramsey:" << r.bound_ramsey.get_str()
       << " hw_bound:" << format_real(r.bound_hw) << " main_bound:"
       << (r.bound_main ? format_real(*r.bound_main) : "-")
       << " log_base:" << base_name(r.log_base);
    std::string notes;
    for (int i = 0; i < 7; ++i) {
        os << " L" << (i + 1) << ":" << status_name(r.links[i].status);
        if (!r.links[i].note.empty()) {
            if (!notes.empty()) notes += ',';
            notes += "L" + std::to_string(i + 1) + "-" + kebab(r.links[i].note);
        }
    }
    os << " notes:" << (notes.empty() ? "-" : notes);
    return os.str();
}

std::string error_record(int line_no, const std::string& input, const std::string& what) {
    std::ostringstream os;
    os << "record:error line:" << line_no << " input:" << (input.empty() ? "-" : input)
       << " message:" << kebab(what);
    return os.str();
}

// Everything one stream item produces; rows are computed in parallel and
// consumed strictly in index order, so output never depends on scheduling.
struct Row {
    std::string record;
    std::string diag;  // stderr
    bool link_failure = false;
    bool parse_error = false;
    bool budget_error = false;
    // scan aggregation payload
    bool has_profile = false;
    int omega = 0, t = 0, h = 0, d = 0;
    bool main_ok = false, hw_ok = false;
    double ratio_main = 0.0, ratio_hw = 0.0;
    bool degenerate = false, chi_skipped = false;
    std::string g6;
};

template <typename MakeRow>
void run_rows(uint64_t total, int workers, MakeRow make, const std::function<void(Row&&)>& consume) {
    constexpr uint64_t kChunk = 1024;
    std::vector<Row> rows;
    for (uint64_t lo = 0; lo < total; lo += kChunk) {
        uint64_t hi = std::min(total, lo + kChunk);
        rows.assign(hi - lo, Row{});
        int w = static_cast<int>(std::min<uint64_t>(workers, hi - lo));
        if (w <= 1) {
            for (uint64_t i = lo; i < hi; ++i) rows[i - lo] = make(i);
        } else {
            std::atomic<uint64_t> next{lo};
            std::vector<std::thread> pool;
            pool.reserve(w);
            for (int k = 0; k < w; ++k)
                pool.emplace_back([&] {
                    for (uint64_t i; (i = next.fetch_add(1)) < hi;)
                        rows[i - lo] = make(i);
                });
            for (auto& th : pool) th.join();
        }
        for (auto& row : rows) consume(std::move(row));
    }
}

std::string replication_hint(const RunConfig& cfg, const std::string& g6) {
    std::string cmd = "mis-hitter verify --input " + g6 + " --log-base " +
                      base_name(cfg.log_base);
    if (cfg.t_override) cmd += " --t " + std::to_string(*cfg.t_override);
    return cmd;
}

Row stream_row(const Source& src, const RunConfig& cfg, uint64_t index) {
    Row row;
    int line_no = src.lines.empty() ? static_cast<int>(index + 1)
                                    : src.lines[index].line_no;
    const std::string* text = src.lines.empty() ? nullptr : &src.lines[index].text;
    Graph g;
    try {
        g = graph_at(src, cfg, index);
    } catch (const std::exception& e) {
        row.parse_error = true;
        row.record = error_record(line_no, text ? *text : "", e.what());
        row.diag = std::string("input error: ") + e.what();
        return row;
    }
    row.g6 = to_graph6(g);
    try {
        ChainReport rep = verify_chain(g, cfg.log_base, cfg.t_override, cfg.family_cap);
        row.has_profile = true;
        row.omega = rep.omega;
        row.t = rep.t;
        row.h = rep.h;
        row.d = rep.vc_d;
        row.degenerate = rep.omega < 2;
        row.chi_skipped = !rep.chi.has_value();
        if (rep.bound_main && *rep.bound_main > 0) {
            row.main_ok = true;
            row.ratio_main = rep.h / *rep.bound_main;
        }
        if (rep.vc_d >= 1 && rep.bound_hw > 0) {
            row.hw_ok = true;
            row.ratio_hw = rep.h / rep.bound_hw;
        }
        row.link_failure = !rep.all_pass();
        switch (cfg.command) {
            case RunConfig::Command::invariants:
                row.record = invariants_record(row.g6, rep);
                break;
            case RunConfig::Command::verify:
                row.record = verify_record(row.g6, rep);
                break;
            default:  // scan & sweep report failures only
                if (row.link_failure) row.record = verify_record(row.g6, rep);
                break;
        }
        if (row.link_failure)
            row.diag = "LINK FAILURE (counterexample candidate!): " +
                       replication_hint(cfg, row.g6) + "\n" + verify_record(row.g6, rep);
    } catch (const BudgetError& e) {
        row.budget_error = true;
        row.record = error_record(line_no, row.g6, e.what());
        row.diag = std::string("budget exceeded: ") + e.what();
    } catch (const std::exception& e) {
        row.parse_error = true;
        row.record = error_record(line_no, row.g6, e.what());
        row.diag = std::string("input error: ") + e.what();
    }
    return row;
}

struct Aggregate {
    uint64_t graphs = 0, link_failures = 0, parse_errors = 0, budget_errors = 0;
    uint64_t degenerate = 0, chi_skipped = 0;
    bool have_main = false, have_hw = false;
    double max_main = 0.0, max_hw = 0.0;
    std::string arg_main, arg_hw;
    std::map<std::tuple<int, int, int, int>, uint64_t> histogram;

    void add(const Row& row) {
        if (row.parse_error) ++parse_errors;
        if (row.budget_error) ++budget_errors;
        if (!row.has_profile) return;
        ++graphs;
        if (row.link_failure) ++link_failures;
        if (row.degenerate) ++degenerate;
        if (row.chi_skipped) ++chi_skipped;
        if (row.main_ok && (!have_main || row.ratio_main > max_main)) {
            have_main = true;
            max_main = row.ratio_main;
            arg_main = row.g6;
        }
        if (row.hw_ok && (!have_hw || row.ratio_hw > max_hw)) {
            have_hw = true;
            max_hw = row.ratio_hw;
            arg_hw = row.g6;
        }
        ++histogram[{row.omega, row.t, row.h, row.d}];
    }

    void print(std::ostream& out, const char* record_name, int sweep_n) const {
        out << "record:" << record_name;
        if (sweep_n) out << " n:" << sweep_n;
        out << " graphs:" << graphs << " link_failures:" << link_failures
            << " parse_errors:" << parse_errors << " budget_errors:" << budget_errors
            << " degenerate:" << degenerate << " chi_skipped:" << chi_skipped
            << " max_h_over_main:" << (have_main ? format_real(max_main) : "-")
            << " arg_main:" << (have_main ? arg_main : "-")
            << " max_h_over_hw:" << (have_hw ? format_real(max_hw) : "-")
            << " arg_hw:" << (have_hw ? arg_hw : "-") << "\n";
        for (const auto& [key, count] : histogram) {
            auto [w, t, h, d] = key;
            out << "record:histogram omega:" << w << " t:" << t << " h:" << h
                << " d:" << d << " count:" << count << "\n";
        }
    }
};

int exit_code(const Aggregate& agg) {
    if (agg.link_failures) return kExitLinkFail;
    if (agg.budget_errors) return kExitBudget;
    if (agg.parse_errors && agg.graphs == 0) return kExitInputError;
    return kExitOk;
}

int run_stream(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Source src = resolve_source(cfg);
    Aggregate agg;
    run_rows(src.total(), cfg.workers,
             [&](uint64_t i) { return stream_row(src, cfg, i); },
             [&](Row&& row) {
                 agg.add(row);
                 if (!row.record.empty()) out << row.record << "\n";
                 if (!row.diag.empty()) err << row.diag << "\n";
             });
    if (cfg.command == RunConfig::Command::scan) agg.print(out, "scan-summary", 0);
    if (cfg.command == RunConfig::Command::sweep) agg.print(out, "sweep-summary", cfg.sweep_n);
    return exit_code(agg);
}

// Resolves a source that must contain exactly one graph.
Graph single_graph(const RunConfig& cfg, std::string& g6) {
    Source src = resolve_source(cfg);
    if (src.total() != 1)
        throw ParseError("this command takes exactly one input graph");
    Graph g = graph_at(src, cfg, 0);
    g6 = to_graph6(g);
    return g;
}

int run_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string g6;
    Graph g;
    try {
        g = single_graph(cfg, g6);
    } catch (const std::exception& e) {
        out << error_record(0, cfg.input, e.what()) << "\n";
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        MaxISFamily fam = enumerate_max_independent_sets(g, cfg.family_cap);
        VcResult vc = vc_dimension(fam);
        int t = induced_matching_number(g).value + 1;
        ShatterWitness w = witness_from_shattered(g, fam, vc.shattered);
        uint64_t u_mask = 0;
        for (int u : w.u) u_mask |= bit(u);
        int alpha_u = u_mask ? alpha(induced_subgraph(g, u_mask)).value : 0;
        std::vector<int> s_verts = set_to_vertices(w.s);

        out << "record:witness graph:" << g6 << " n:" << g.n << " alpha:" << fam.alpha
            << " family:" << fam.size() << " t:" << t << " d:" << w.d
            << " shattered:" << format_set(w.s) << " u:" << format_int_list(w.u)
            << " u_set:" << format_set(u_mask) << " alpha_u:" << alpha_u << " matching:(";
        for (int i = 0; i < w.d; ++i) {
            if (i) out << ",";
            out << "(" << s_verts[i] << "," << w.u[i] << ")";
        }
        out << ") ok:true\n";
        for (size_t sub = 0; sub < w.realizer.size(); ++sub) {
            uint64_t subset = 0;
            for (int i = 0; i < w.d; ++i)
                if (sub & (size_t{1} << i)) subset |= bit(s_verts[i]);
            out << "record:realizer subset:" << format_set(subset)
                << " index:" << w.realizer[sub]
                << " set:" << format_set(fam.sets[w.realizer[sub]]) << "\n";
        }
        return kExitOk;
    } catch (const WitnessError& e) {
        out << "record:witness graph:" << g6 << " ok:false message:" << kebab(e.what()) << "\n";
        err << "WITNESS FAILURE (counterexample candidate!): " << e.what() << "\n";
        return kExitLinkFail;
    } catch (const BudgetError& e) {
        out << error_record(0, g6, e.what()) << "\n";
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    }
}

int run_net_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string g6;
    Graph g;
    try {
        g = single_graph(cfg, g6);
    } catch (const std::exception& e) {
        out << error_record(0, cfg.input, e.what()) << "\n";
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        MaxISFamily fam = enumerate_max_independent_sets(g, cfg.family_cap);
        RationalWeights weights = fractional_transversal(fam);
        VcResult vc = vc_dimension(fam);
        int h = hitting_number(fam).size;
        SampleResult res = epsilon_net_sample(fam, weights, vc.d, cfg.seed,
                                              cfg.max_attempts, cfg.log_base);
        bool verified = res.success;
        for (uint64_t set : fam.sets)
            if (res.success && !(set & res.transversal)) verified = false;

        out << "record:net-sample graph:" << g6 << " n:" << g.n << " family:" << fam.size()
            << " d:" << vc.d << " tau_star:" << format_rational(weights.total)
            << " m:" << res.draws << " max_attempts:" << cfg.max_attempts
            << " attempts:" << res.attempts
            << " success:" << (res.success ? "true" : "false")
            << " sample:" << format_set(res.transversal)
            << " sample_size:" << popcount(res.transversal) << " h:" << h
            << " verified:" << (verified ? "true" : "false")
            << " miss_counts:" << format_int_list(res.miss_counts) << "\n";
        if (!res.success) {
            err << "sampler exhausted " << cfg.max_attempts << " attempts\n";
            return kExitBudget;
        }
        return kExitOk;
    } catch (const BudgetError& e) {
        out << error_record(0, g6, e.what()) << "\n";
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case RunConfig::Command::invariants:
            case RunConfig::Command::verify:
            case RunConfig::Command::scan:
            case RunConfig::Command::sweep:
                return run_stream(cfg, out, err);
            case RunConfig::Command::witness:
                return run_witness(cfg, out, err);
            case RunConfig::Command::net_sample:
                return run_net_sample(cfg, out, err);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitInputError;
}

}  // namespace mishit
