#ifndef MISHIT_REPORT_HPP
#define MISHIT_REPORT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "mishit/graph.hpp"
#include "mishit/proof.hpp"

namespace mishit {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;          // all links passed / nothing failed
inline constexpr int kExitLinkFail = 1;    // a chain link or witness failed
inline constexpr int kExitInputError = 2;  // only input/parse problems, no graph processed
inline constexpr int kExitBudget = 3;      // a budget or cap was exhausted

struct RunConfig {
    enum class Command { invariants, verify, scan, witness, net_sample, sweep };
    Command command = Command::invariants;

    // Exactly one input source: a graph6 literal / file path / "-" (stdin),
    // or a generator spec. sweep instead enumerates all graphs on sweep_n
    // vertices.
    std::string input;
    std::optional<GeneratorSpec> gen;
    int count = 1;  // generator stream length (random family only)
    int sweep_n = 0;

    LogBase log_base = LogBase::natural;
    std::optional<int> t_override;
    uint64_t seed = 0;
    int workers = 1;
    size_t family_cap = kDefaultFamilyCap;
    int max_attempts = 50;
};

// Runs one command; returns the process exit code. Records go to `out` (one
// self-contained line each, fixed key order, byte-identical for identical
// configs); human diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Stable serializations used across records.
std::string format_rational(const mpq_class& q);  // "p/q", denominator always shown
std::string format_real(double x);                // %.9g

// Stream item i of a random-family generator uses this derived seed, so a
// scan is a pure function of (spec, seed, i) independent of worker count.
uint64_t stream_seed(uint64_t seed, uint64_t index);

}  // namespace mishit

#endif
