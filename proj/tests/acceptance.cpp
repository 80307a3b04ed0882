// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// each; exits nonzero if any fails. Heavier campaigns use the same drivers
// as the CLI so the checked behavior is the shipped behavior.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "mishit/invariants.hpp"
#include "mishit/proof.hpp"
#include "mishit/report.hpp"
#include "oracles.hpp"

using namespace mishit;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s %d %s%s%s\n", ok ? "PASS" : "FAIL", index, what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string run_capture(const RunConfig& cfg, int& exit_code) {
    std::ostringstream out, err;
    exit_code = run(cfg, out, err);
    return out.str();
}

// 1. Exhaustive chain verification over all 32768 labeled 6-vertex graphs.
void criterion_exhaustive_6() {
    RunConfig cfg;
    cfg.command = RunConfig::Command::sweep;
    cfg.sweep_n = 6;
    cfg.workers = 1;
    auto start = std::chrono::steady_clock::now();
    int code;
    std::string out = run_capture(cfg, code);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = code == kExitOk &&
              out.find("graphs:32768 link_failures:0") != std::string::npos;
    char detail[128];
    std::snprintf(detail, sizeof detail, "exit=%d, %.1fs single-threaded", code, secs);
    report(1, "exhaustive 6-vertex chain verification (32768 graphs)", ok, detail);
}

// 2. Solver outputs equal naive oracles: every quantity on every graph with
// <= 5 vertices, plus alpha/omega/im/h/vc on all 6-vertex graphs.
void criterion_oracle_equivalence() {
    uint64_t graphs = 0, mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
        AllGraphsStream stream(n);
        while (stream.has_next()) {
            Graph g = stream.next();
            ++graphs;
            bool ok = alpha(g).value == oracles::brute_alpha(g) &&
                      omega(g).value == oracles::brute_omega(g) &&
                      induced_matching_number(g).value == oracles::brute_induced_matching(g);
            MaxISFamily fam = enumerate_max_independent_sets(g);
            ok = ok && hitting_number(fam).size ==
                           oracles::brute_hitting_number(fam.sets, g.n);
            ok = ok && vc_dimension(fam).d == oracles::brute_vc_dimension(fam.sets, g.n);
            if (n <= 5) {
                ok = ok && fam.size() == oracles::brute_max_is_family(g).size();
                // tau*: certificate equality stands in for subset enumeration.
                RationalWeights w = fractional_transversal(fam);
                mpq_class primal = 0, dual = 0;
                for (const auto& x : w.weights) primal += x;
                for (const auto& y : w.dual) dual += y;
                ok = ok && primal == w.total && dual == w.total;
            }
            if (!ok) ++mismatches;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%llu graphs, %llu mismatches",
                  (unsigned long long)graphs, (unsigned long long)mismatches);
    report(2, "oracle equivalence (all quantities <= 5 vertices; alpha/omega/im/h/vc <= 6)",
           mismatches == 0, detail);
}

// 3. The C5 fixed-point record, exact values and 1e-6 bound tolerances.
void criterion_c5_record() {
    ChainReport r = verify_chain(parse_graph6("Dhc"));
    bool ok = r.alpha == 2 && r.omega == 2 && r.chi && *r.chi == 3 && r.im == 1 &&
              r.t == 2 && r.family_size == 5 && r.h == 3 &&
              r.tau_star == mpq_class(5, 2) && r.vc_d == 2;
    ok = ok && std::abs(r.bound_hw - 33.141860046725256) < 1e-6;
    ok = ok && r.bound_main && std::abs(*r.bound_main - 221.8070977791825) < 1e-6;
    ok = ok && r.all_pass();
    report(3, "C5 fixed-point record (alpha,omega,chi,im,t,|F|,h,tau*,d + bounds)", ok);
}

// 4. 10000 seeded G(n,1/2) per n in {10,12,14}: no link failures and a
// byte-identical summary on rerun.
void criterion_random_campaign() {
    for (int n : {10, 12, 14}) {
        RunConfig cfg;
        cfg.command = RunConfig::Command::scan;
        cfg.gen = GeneratorSpec::parse("random:" + std::to_string(n) + ",1/2");
        cfg.count = 10000;
        cfg.seed = 20250809;
        cfg.workers = 2;
        auto start = std::chrono::steady_clock::now();
        int code1, code2;
        std::string first = run_capture(cfg, code1);
        std::string second = run_capture(cfg, code2);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = code1 == kExitOk && code2 == kExitOk && first == second &&
                  first.find("link_failures:0") != std::string::npos;
        char what[96], detail[96];
        std::snprintf(what, sizeof what, "random campaign n=%d (10000 graphs, rerun identical)", n);
        std::snprintf(detail, sizeof detail, "%.1fs for both runs", secs);
        report(4, what, ok, detail);
    }
}

// 5. Closing inequality on the whole (t, omega) grid, both log bases.
void criterion_final_grid() {
    int bad = 0;
    for (int t = 2; t <= 6; ++t)
        for (int w = 2; w <= 50; ++w) {
            if (!check_final_arithmetic(t, w, LogBase::natural)) ++bad;
            if (!check_final_arithmetic(t, w, LogBase::binary)) ++bad;
        }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d failing cells of 490", bad);
    report(5, "closing inequality grid 2<=t<=6, 2<=omega<=50, both bases", bad == 0, detail);
}

// 6. Witness construction succeeds on a maximum shattered set of every
// graph with <= 6 vertices, and its u-set has independence below t.
void criterion_witness_soundness() {
    uint64_t graphs = 0, bad = 0;
    for (int n = 1; n <= 6; ++n) {
        AllGraphsStream stream(n);
        while (stream.has_next()) {
            Graph g = stream.next();
            ++graphs;
            try {
                MaxISFamily fam = enumerate_max_independent_sets(g);
                VcResult vc = vc_dimension(fam);
                ShatterWitness w = witness_from_shattered(g, fam, vc.shattered);
                int t = induced_matching_number(g).value + 1;
                uint64_t u_mask = 0;
                for (int u : w.u) u_mask |= bit(u);
                if (u_mask && alpha(induced_subgraph(g, u_mask)).value > t - 1) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%llu graphs, %llu construction failures",
                  (unsigned long long)graphs, (unsigned long long)bad);
    report(6, "witness soundness on all graphs with <= 6 vertices", bad == 0, detail);
}

// 7. Sampler success rate: C5 and 100 seeded G(10,1/2), 50-attempt budget,
// >= 99% success, every returned set re-verified.
void criterion_sampler() {
    int total = 0, succeeded = 0, unverified = 0;
    auto attempt = [&](const Graph& g, uint64_t seed) {
        ++total;
        MaxISFamily fam = enumerate_max_independent_sets(g);
        RationalWeights w = fractional_transversal(fam);
        SampleResult res = epsilon_net_sample(fam, w, vc_dimension(fam).d, seed, 50);
        if (!res.success) return;
        ++succeeded;
        for (uint64_t s : fam.sets)
            if (!(s & res.transversal)) ++unverified;
    };
    attempt(parse_graph6("Dhc"), 1);
    for (uint64_t seed = 0; seed < 100; ++seed) {
        GeneratorSpec spec = GeneratorSpec::parse("random:10,1/2");
        spec.seed = stream_seed(4242, seed);
        attempt(generate(spec), seed);
    }
    bool ok = succeeded >= (total * 99 + 99) / 100 && unverified == 0;
    char detail[96];
    std::snprintf(detail, sizeof detail, "%d/%d within 50 attempts, %d verification misses",
                  succeeded, total, unverified);
    report(7, "epsilon-net sampler success rate and verification", ok, detail);
}

// 8. graph6 conformance: round-trip over both exhaustive ranges plus
// reference-encoder agreement on 1000 random graphs.
void criterion_graph6_conformance() {
    uint64_t bad = 0;
    for (int n = 1; n <= 6; ++n) {
        AllGraphsStream stream(n);
        while (stream.has_next()) {
            Graph g = stream.next();
            if (!(parse_graph6(to_graph6(g)) == g)) ++bad;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(stream_seed(777, i) % 64);
        GeneratorSpec spec = GeneratorSpec::parse("random:" + std::to_string(n) + ",1/2");
        spec.seed = stream_seed(778, i);
        Graph g = generate(spec);
        std::string rec = to_graph6(g);
        if (rec != oracles::reference_graph6(g)) ++bad;
        if (!(parse_graph6(rec) == g)) ++bad;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%llu disagreements", (unsigned long long)bad);
    report(8, "graph6 round-trip and reference-encoder agreement", bad == 0, detail);
}

}  // namespace

int main() {
    criterion_exhaustive_6();
    criterion_oracle_equivalence();
    criterion_c5_record();
    criterion_random_campaign();
    criterion_final_grid();
    criterion_witness_soundness();
    criterion_sampler();
    criterion_graph6_conformance();
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return failures ? 1 : 0;
}
