#ifndef YM2D_CLI_HPP_
#define YM2D_CLI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ym2d/dsl.hpp"
#include "ym2d/free_engine.hpp"
#include "ym2d/matrix_mc.hpp"

namespace ym2d::cli {

/// All floating-point output uses 9 significant digits.
std::string fmt9(double v);

struct EngineOpts {
    int alternation_cap = kDefaultNcCap;
    int pk_cap = kDefaultPkCap;
};

/// P_k(t) by the three evaluators, one table per t, with a relative
/// max-pairwise-discrepancy column.
std::string cmd_pk(int kmax, const std::vector<double>& ts, int pk_cap = kDefaultPkCap);

/// Free Wilson-loop expectation with decomposition and per-face
/// areas/windings.
std::string cmd_expect(const LoopFile& file, const std::string& loop_name, std::int64_t k,
                       const EngineOpts& opts = {});

/// Backtrack reduction and decomposition of a loop.
std::string cmd_reduce(const LoopFile& file, const std::string& loop_name);

struct McOutcome {
    std::string body;
    double z = 0.0;
    bool z_applicable = false;
    bool hard_fail = false;  // |z| > 5
};

/// Free value vs Monte Carlo estimate with a z-score verdict.
McOutcome cmd_mc(const LoopFile& file, const std::string& loop_name, std::int64_t k,
                 const McConfig& config, const EngineOpts& opts = {});

struct ScanOutcome {
    std::string body;
    std::string csv;  // header N,mean,stderr,free_value,abs_dev
};

/// Convergence scan over matrix sizes.
ScanOutcome cmd_scan(const LoopFile& file, const std::string& loop_name, std::int64_t k,
                     const std::vector<int>& Ns, const McConfig& config,
                     const EngineOpts& opts = {});

}  // namespace ym2d::cli

#endif  // YM2D_CLI_HPP_
