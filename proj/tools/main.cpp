// ym2d: Wilson-loop expectations of the planar large-N master field, with a
// finite-N Monte Carlo cross-check.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 validation (geometry or
// engine caps), 3 hard statistical failure (|z| > 5).
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ym2d/cli.hpp"
#include "ym2d/error.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int exit_code_for(const ym2d::Error& e) {
    switch (e.code()) {
    case ym2d::errc::parse_error:
    case ym2d::errc::unknown_loop:
        return 1;
    default:
        return 2;
    }
}

struct McFlags {
    std::int64_t k = 1;
    ym2d::McConfig config;
    ym2d::cli::EngineOpts engine;
};

void add_engine_flags(CLI::App* cmd, ym2d::cli::EngineOpts& opts) {
    cmd->add_option("--alt-cap", opts.alternation_cap,
                    "alternation cap for the word-moment engine");
    cmd->add_option("--pk-cap", opts.pk_cap, "maximum moment order");
}

void add_mc_flags(CLI::App* cmd, McFlags& f) {
    cmd->add_option("--k", f.k, "power of the holonomy");
    cmd->add_option("--N", f.config.N, "matrix size");
    cmd->add_option("--samples", f.config.samples, "Monte Carlo sample count");
    cmd->add_option("--seed", f.config.seed, "RNG seed (fixed default for reproducibility)");
    cmd->add_option("--steps-per-area", f.config.steps_per_unit_area,
                    "integrator steps per unit area");
    cmd->add_option("--threads", f.config.threads, "worker threads (0 = all cores)");
    add_engine_flags(cmd, f.engine);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wilson loops of two-dimensional Yang-Mills on the plane: exact large-N "
                 "values and finite-N Monte Carlo checks"};
    app.require_subcommand(1);

    // pk
    int kmax = 8;
    std::vector<double> ts{1.0};
    int pk_cap = ym2d::kDefaultPkCap;
    auto* pk = app.add_subcommand("pk", "print P_k(t) by three evaluation routes");
    pk->add_option("--kmax", kmax, "largest k");
    pk->add_option("--t", ts, "t values");
    pk->add_option("--pk-cap", pk_cap, "maximum moment order");

    // expect
    std::string expect_file, expect_loop;
    std::int64_t expect_k = 1;
    ym2d::cli::EngineOpts expect_engine;
    auto* expect = app.add_subcommand("expect", "exact Wilson loop expectation tau(u_c^k)");
    expect->add_option("file", expect_file, "loop DSL file")->required();
    expect->add_option("loop", expect_loop, "loop name")->required();
    expect->add_option("--k", expect_k, "power of the holonomy");
    add_engine_flags(expect, expect_engine);

    // mc
    std::string mc_file, mc_loop;
    McFlags mc_flags;
    auto* mc = app.add_subcommand("mc", "Monte Carlo check of a Wilson loop expectation");
    mc->add_option("file", mc_file, "loop DSL file")->required();
    mc->add_option("loop", mc_loop, "loop name")->required();
    add_mc_flags(mc, mc_flags);

    // scan
    std::string scan_file, scan_loop, scan_out;
    McFlags scan_flags;
    std::vector<int> scan_Ns{8, 32, 128};
    auto* scan = app.add_subcommand("scan", "convergence scan over matrix sizes (CSV)");
    scan->add_option("file", scan_file, "loop DSL file")->required();
    scan->add_option("loop", scan_loop, "loop name")->required();
    scan->add_option("--Ns", scan_Ns, "matrix sizes");
    scan->add_option("--out", scan_out, "CSV output path (stdout when omitted)");
    add_mc_flags(scan, scan_flags);

    // reduce
    std::string reduce_file, reduce_loop;
    auto* reduce = app.add_subcommand("reduce", "backtrack reduction and lasso decomposition");
    reduce->add_option("file", reduce_file, "loop DSL file")->required();
    reduce->add_option("loop", reduce_loop, "loop name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    auto t0 = Clock::now();
    int code = 0;
    try {
        if (*pk) {
            std::cout << ym2d::cli::cmd_pk(kmax, ts, pk_cap);
        } else if (*expect) {
            auto file = ym2d::load_dsl_file(expect_file);
            std::cout << ym2d::cli::cmd_expect(file, expect_loop, expect_k, expect_engine);
        } else if (*mc) {
            auto file = ym2d::load_dsl_file(mc_file);
            auto out = ym2d::cli::cmd_mc(file, mc_loop, mc_flags.k, mc_flags.config,
                                         mc_flags.engine);
            std::cout << out.body;
            if (out.hard_fail) code = 3;
        } else if (*scan) {
            auto file = ym2d::load_dsl_file(scan_file);
            auto out = ym2d::cli::cmd_scan(file, scan_loop, scan_flags.k, scan_Ns,
                                           scan_flags.config, scan_flags.engine);
            std::cout << out.body;
            if (scan_out.empty()) {
                std::cout << out.csv;
            } else {
                std::ofstream f(scan_out);
                if (!f) throw ym2d::Error(ym2d::errc::parse_error,
                                          "cannot write '" + scan_out + "'");
                f << out.csv;
                std::cout << "csv written to " << scan_out << "\n";
            }
        } else if (*reduce) {
            auto file = ym2d::load_dsl_file(reduce_file);
            std::cout << ym2d::cli::cmd_reduce(file, reduce_loop);
        }
    } catch (const ym2d::Error& e) {
        std::cerr << ym2d::errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    std::fprintf(stderr, "elapsed %.3f s\n", elapsed);
    return code;
}
