#ifndef YM2D_MATRIX_MC_HPP_
#define YM2D_MATRIX_MC_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "ym2d/geometry.hpp"
#include "ym2d/rng.hpp"

namespace ym2d {

/// Finite-N verification oracle: U(N)-valued lasso holonomies sampled as
/// endpoints of unitary Brownian motion, one independent endpoint per
/// distinct lasso, assembled into loop holonomies per the word.
///
/// Clock normalization: increments satisfy E[tr_N W^2] = variance with the
/// lasso area as total clock, so trace moments converge to
/// e^{-k t / 2} P_k(t) directly.
struct McConfig {
    int N = 64;
    std::int64_t samples = 1000;
    double steps_per_unit_area = 100.0;
    std::uint64_t seed = 12345;  // fixed default, never time-based
    int threads = 0;             // 0 = hardware concurrency
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample sd / sqrt(samples); NaN when samples < 2
    std::int64_t samples = 0;
    int N = 0;
    std::int64_t k = 0;
    std::int64_t used_steps = 0;
    // imaginary part of the trace, kept to check it vanishes within noise
    double im_mean = 0.0;
    double im_std_error = 0.0;
};

struct ScanRow {
    McEstimate estimate;
    double free_value = 0.0;
    double abs_dev = 0.0;
};

struct CovEstimate {
    double covariance = 0.0;
    double std_error = 0.0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    std::int64_t samples = 0;
};

/// Hermitian GUE draw normalized so E[tr_N H^2] = variance.
Eigen::MatrixXcd sample_gue(int N, double variance, Rng& rng);

/// Endpoint of the exponential (geometric Euler) scheme: the ordered product
/// of exp(i dW) over `steps` independent GUE increments of variance t/steps.
/// Each factor is exponentiated through its eigendecomposition, so the
/// result is unitary to machine precision regardless of step size.
Eigen::MatrixXcd unitary_bm_endpoint(int N, double t, int steps, Rng& rng);

/// One holonomy sample: an independent Brownian endpoint per distinct lasso
/// key (clock = its area, drawn in key order), multiplied per the word with
/// new factors accumulating on the left; negative exponents use the adjoint.
Eigen::MatrixXcd sample_word_holonomy(const LassoWord& word, const McConfig& config, Rng& rng);

/// Monte Carlo estimates of Re tr_N(h^k) for each k, sharing the holonomy
/// samples.  Bit-identical for fixed (config, word, ks) regardless of thread
/// count: per-sample RNG streams are derived from (seed, sample index) and
/// the reduction is a fixed-order pairwise sum.
std::vector<McEstimate> estimate_trace_moments(const LassoWord& word,
                                               const std::vector<std::int64_t>& ks,
                                               const McConfig& config);

McEstimate estimate_trace_moment(const LassoWord& word, std::int64_t k, const McConfig& config);

/// estimate_trace_moment per N, with deviations from the given limit value.
std::vector<ScanRow> convergence_scan(const LassoWord& word, std::int64_t k,
                                      const std::vector<int>& Ns, const McConfig& config,
                                      double free_value);

/// Sample covariance of (Re tr_N h_a, Re tr_N h_b) with the two holonomies
/// built from shared lasso draws, as loops on a common grid are.
CovEstimate estimate_trace_covariance(const LassoWord& a, const LassoWord& b,
                                      const McConfig& config);

}  // namespace ym2d

#endif  // YM2D_MATRIX_MC_HPP_
