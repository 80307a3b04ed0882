#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "mishit/errors.hpp"
#include "mishit/report.hpp"

namespace {

struct CliOptions {
    std::string input;
    std::string gen;
    int count = 1;
    uint64_t seed = 0;
    std::string log_base = "natural";
    int t_override = -1;
    int workers = 1;
    uint64_t family_cap = mishit::kDefaultFamilyCap;
    int max_attempts = 50;
    int sweep_n = 0;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--input", opt.input, "graph6 literal, file path, or - for stdin");
    cmd->add_option("--gen", opt.gen,
                    "generator spec, e.g. cycle:5, kneser:5,2, random:10,1/2");
    cmd->add_option("--count", opt.count, "stream length for --gen random");
    cmd->add_option("--seed", opt.seed, "deterministic seed (no ambient entropy)");
    cmd->add_option("--log-base", opt.log_base, "natural|binary")
        ->check(CLI::IsMember({"natural", "binary"}));
    cmd->add_option("--t", opt.t_override, "override t (must exceed im(G))");
    cmd->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--family-cap", opt.family_cap, "maximum family size");
    cmd->add_option("--max-attempts", opt.max_attempts, "sampling attempt budget");
}

int dispatch(mishit::RunConfig::Command command, const CliOptions& opt) {
    mishit::RunConfig cfg;
    cfg.command = command;
    cfg.input = opt.input;
    if (!opt.gen.empty()) cfg.gen = mishit::GeneratorSpec::parse(opt.gen);
    cfg.count = opt.count;
    cfg.seed = opt.seed;
    cfg.log_base = opt.log_base == "binary" ? mishit::LogBase::binary
                                            : mishit::LogBase::natural;
    if (opt.t_override >= 0) cfg.t_override = opt.t_override;
    cfg.workers = opt.workers;
    cfg.family_cap = opt.family_cap;
    cfg.max_attempts = opt.max_attempts;
    cfg.sweep_n = opt.sweep_n;
    return mishit::run(cfg, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for hitting all maximum independent sets"};
    app.require_subcommand(1);

    CliOptions opt;
    auto* invariants = app.add_subcommand(
        "invariants", "per-graph record of alpha, omega, chi, im, t, |F|, h, tau*, d");
    add_common(invariants, opt);
    auto* verify = app.add_subcommand(
        "verify", "check every inequality link of the bound chain per graph");
    add_common(verify, opt);
    auto* scan = app.add_subcommand(
        "scan", "verify a stream and report a tightness summary and histogram");
    add_common(scan, opt);
    auto* witness = app.add_subcommand(
        "witness", "extract the shattered-set witness of one graph");
    add_common(witness, opt);
    auto* net = app.add_subcommand(
        "net-sample", "draw a transversal by weighted sampling on one graph");
    add_common(net, opt);
    auto* sweep = app.add_subcommand(
        "sweep", "verify all labeled graphs on --n vertices (n <= 7)");
    add_common(sweep, opt);
    sweep->add_option("--n", opt.sweep_n, "vertex count")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        using Command = mishit::RunConfig::Command;
        if (invariants->parsed()) return dispatch(Command::invariants, opt);
        if (verify->parsed()) return dispatch(Command::verify, opt);
        if (scan->parsed()) return dispatch(Command::scan, opt);
        if (witness->parsed()) return dispatch(Command::witness, opt);
        if (net->parsed()) return dispatch(Command::net_sample, opt);
        if (sweep->parsed()) return dispatch(Command::sweep, opt);
    } catch (const mishit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mishit::kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mishit::kExitInputError;
    }
    return mishit::kExitInputError;
}
