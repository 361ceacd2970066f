#include "ym2d/matrix_mc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <thread>

#include "ym2d/error.hpp"

namespace ym2d {

namespace {

using Eigen::MatrixXcd;

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

struct MeanErr {
    double mean;
    double std_error;
};

MeanErr mean_and_error(const std::vector<double>& v) {
    const auto n = static_cast<double>(v.size());
    double mean = pairwise_sum(v) / n;
    if (v.size() < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
    double var = pairwise_sum(sq) / (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

int steps_for_area(double area, double steps_per_unit_area) {
    if (area <= 0.0) return 0;
    return std::max(1, static_cast<int>(std::ceil(area * steps_per_unit_area)));
}

struct KeyPlan {
    LassoKey key;
    double area;
    int steps;
};

// distinct keys in key order, with areas and step counts
std::vector<KeyPlan> plan_keys(const std::vector<LassoLetter>& letters,
                               const std::map<LassoKey, double>& areas, const McConfig& config) {
    std::map<LassoKey, double> used;
    for (const auto& l : letters) {
        auto it = areas.find(l.key);
        if (it == areas.end())
            throw Error(errc::missing_area, "no area for lasso " + to_string(l.key));
        used[l.key] = it->second;
    }
    std::vector<KeyPlan> plan;
    plan.reserve(used.size());
    for (const auto& [key, area] : used)
        plan.push_back({key, area, steps_for_area(area, config.steps_per_unit_area)});
    return plan;
}

std::map<LassoKey, MatrixXcd> draw_lassos(const std::vector<KeyPlan>& plan, int N, Rng& rng) {
    std::map<LassoKey, MatrixXcd> draws;
    for (const auto& kp : plan)
        draws.emplace(kp.key, unitary_bm_endpoint(N, kp.area, std::max(1, kp.steps), rng));
    return draws;
}

MatrixXcd holonomy_from_draws(const std::vector<LassoLetter>& letters,
                              const std::map<LassoKey, MatrixXcd>& draws, int N) {
    MatrixXcd h = MatrixXcd::Identity(N, N);
    for (const auto& l : letters) {
        const MatrixXcd& u = draws.at(l.key);
        MatrixXcd factor = l.exponent > 0 ? u : MatrixXcd(u.adjoint());
        const std::int64_t reps = l.exponent > 0 ? l.exponent : -l.exponent;
        MatrixXcd pow = factor;
        for (std::int64_t r = 1; r < reps; ++r) pow = factor * pow;
        h = pow * h;
    }
    return h;
}

void run_parallel(std::int64_t samples, int threads,
                  const std::function<void(std::int64_t)>& body) {
    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads < 1) n_threads = 1;
    n_threads = static_cast<int>(std::min<std::int64_t>(n_threads, samples));
    if (n_threads <= 1) {
        for (std::int64_t i = 0; i < samples; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        std::int64_t lo = samples * t / n_threads;
        std::int64_t hi = samples * (t + 1) / n_threads;
        pool.emplace_back([lo, hi, &body] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

// tr_N(h^k) for each requested k; negative k by conjugation (h unitary)
std::vector<std::complex<double>> trace_powers(const MatrixXcd& h,
                                               const std::vector<std::int64_t>& ks) {
    std::int64_t maxp = 0;
    for (auto k : ks) maxp = std::max(maxp, k > 0 ? k : -k);
    const int N = static_cast<int>(h.rows());
    // explicit powers up to ceil(maxp/2); tr(h^{a+b}) = sum (h^a)_{ij} (h^b)_{ji}
    const std::int64_t half = maxp <= 1 ? maxp : (maxp + 1) / 2;
    std::vector<MatrixXcd> pows;
    pows.reserve(static_cast<std::size_t>(half) + 1);
    pows.emplace_back(MatrixXcd::Identity(N, N));
    if (half >= 1) pows.push_back(h);
    for (std::int64_t p = 2; p <= half; ++p) pows.push_back(pows.back() * h);

    std::vector<std::complex<double>> out;
    out.reserve(ks.size());
    for (auto k : ks) {
        std::int64_t p = k > 0 ? k : -k;
        std::complex<double> tr;
        if (p <= half) {
            tr = pows[static_cast<std::size_t>(p)].trace();
        } else {
            const MatrixXcd& a = pows[static_cast<std::size_t>(p / 2)];
            const MatrixXcd& b = pows[static_cast<std::size_t>(p - p / 2)];
            tr = (a.transpose().array() * b.array()).sum();
        }
        tr /= static_cast<double>(N);
        out.push_back(k < 0 ? std::conj(tr) : tr);
    }
    return out;
}

}  // namespace

MatrixXcd sample_gue(int N, double variance, Rng& rng) {
    if (variance < 0) throw Error(errc::bad_loop, "sample_gue: negative variance");
    MatrixXcd h(N, N);
    const double sigma = std::sqrt(variance / static_cast<double>(N));
    const double off = sigma / std::numbers::sqrt2_v<double>;
    for (int i = 0; i < N; ++i) {
        h(i, i) = sigma * rng.gaussian();
        for (int j = i + 1; j < N; ++j) {
            std::complex<double> z(off * rng.gaussian(), off * rng.gaussian());
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

MatrixXcd unitary_bm_endpoint(int N, double t, int steps, Rng& rng) {
    if (steps < 1) throw Error(errc::bad_loop, "unitary_bm_endpoint: steps must be >= 1");
    if (t < 0) throw Error(errc::bad_loop, "unitary_bm_endpoint: negative clock");
    MatrixXcd h = MatrixXcd::Identity(N, N);
    if (t == 0.0) return h;
    const double dt = t / static_cast<double>(steps);
    MatrixXcd tmp(N, N);
    for (int m = 0; m < steps; ++m) {
        MatrixXcd dw = sample_gue(N, dt, rng);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(dw);
        // h <- V e^{i Lambda} V^* h
        tmp.noalias() = es.eigenvectors().adjoint() * h;
        for (int r = 0; r < N; ++r)
            tmp.row(r) *= std::complex<double>(std::cos(es.eigenvalues()(r)),
                                               std::sin(es.eigenvalues()(r)));
        h.noalias() = es.eigenvectors() * tmp;
    }
    return h;
}

MatrixXcd sample_word_holonomy(const LassoWord& word, const McConfig& config, Rng& rng) {
    std::vector<LassoLetter> normalized = normalize_lasso_letters(word.letters);
    std::vector<KeyPlan> plan = plan_keys(normalized, word.areas, config);
    auto draws = draw_lassos(plan, config.N, rng);
    return holonomy_from_draws(normalized, draws, config.N);
}

std::vector<McEstimate> estimate_trace_moments(const LassoWord& word,
                                               const std::vector<std::int64_t>& ks,
                                               const McConfig& config) {
    if (config.N < 2) throw Error(errc::bad_loop, "McConfig: N must be >= 2");
    if (config.samples < 1) throw Error(errc::bad_loop, "McConfig: samples must be >= 1");
    std::vector<LassoLetter> normalized = normalize_lasso_letters(word.letters);
    std::vector<KeyPlan> plan = plan_keys(normalized, word.areas, config);
    std::int64_t used_steps = 0;
    for (const auto& kp : plan) used_steps += kp.steps;

    const auto n = static_cast<std::size_t>(config.samples);
    std::vector<std::vector<double>> re(ks.size(), std::vector<double>(n));
    std::vector<std::vector<double>> im(ks.size(), std::vector<double>(n));
    run_parallel(config.samples, config.threads, [&](std::int64_t idx) {
        Rng rng = Rng::for_sample(config.seed, static_cast<std::uint64_t>(idx));
        auto draws = draw_lassos(plan, config.N, rng);
        MatrixXcd h = holonomy_from_draws(normalized, draws, config.N);
        auto traces = trace_powers(h, ks);
        for (std::size_t ki = 0; ki < ks.size(); ++ki) {
            re[ki][static_cast<std::size_t>(idx)] = traces[ki].real();
            im[ki][static_cast<std::size_t>(idx)] = traces[ki].imag();
        }
    });

    std::vector<McEstimate> out(ks.size());
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        MeanErr r = mean_and_error(re[ki]);
        MeanErr i = mean_and_error(im[ki]);
        out[ki] = McEstimate{r.mean,     r.std_error, config.samples, config.N,
                             ks[ki],     used_steps,  i.mean,         i.std_error};
    }
    return out;
}

McEstimate estimate_trace_moment(const LassoWord& word, std::int64_t k, const McConfig& config) {
    return estimate_trace_moments(word, {k}, config)[0];
}

std::vector<ScanRow> convergence_scan(const LassoWord& word, std::int64_t k,
                                      const std::vector<int>& Ns, const McConfig& config,
                                      double free_value) {
    if (Ns.empty()) throw Error(errc::bad_loop, "convergence_scan: empty N list");
    std::vector<ScanRow> rows;
    rows.reserve(Ns.size());
    for (int N : Ns) {
        McConfig c = config;
        c.N = N;
        McEstimate est = estimate_trace_moment(word, k, c);
        rows.push_back({est, free_value, std::abs(est.mean - free_value)});
    }
    return rows;
}

CovEstimate estimate_trace_covariance(const LassoWord& a, const LassoWord& b,
                                      const McConfig& config) {
    if (config.samples < 2) throw Error(errc::bad_loop, "McConfig: need samples >= 2");
    std::vector<LassoLetter> na = normalize_lasso_letters(a.letters);
    std::vector<LassoLetter> nb = normalize_lasso_letters(b.letters);
    // one shared draw per key in the union, as for loops on a common grid
    std::map<LassoKey, double> areas = a.areas;
    areas.insert(b.areas.begin(), b.areas.end());
    std::map<LassoKey, double> used;
    for (const auto& l : na) used[l.key] = areas.at(l.key);
    for (const auto& l : nb) used[l.key] = areas.at(l.key);
    std::vector<KeyPlan> plan;
    for (const auto& [key, area] : used)
        plan.push_back({key, area, steps_for_area(area, config.steps_per_unit_area)});

    const auto n = static_cast<std::size_t>(config.samples);
    std::vector<double> xs(n), ys(n);
    run_parallel(config.samples, config.threads, [&](std::int64_t idx) {
        Rng rng = Rng::for_sample(config.seed, static_cast<std::uint64_t>(idx));
        auto draws = draw_lassos(plan, config.N, rng);
        MatrixXcd ha = holonomy_from_draws(na, draws, config.N);
        MatrixXcd hb = holonomy_from_draws(nb, draws, config.N);
        xs[static_cast<std::size_t>(idx)] = ha.trace().real() / static_cast<double>(config.N);
        ys[static_cast<std::size_t>(idx)] = hb.trace().real() / static_cast<double>(config.N);
    });

    MeanErr mx = mean_and_error(xs);
    MeanErr my = mean_and_error(ys);
    std::vector<double> prod(n);
    for (std::size_t i = 0; i < n; ++i) prod[i] = (xs[i] - mx.mean) * (ys[i] - my.mean);
    double cov = pairwise_sum(prod) / (static_cast<double>(n) - 1.0);
    MeanErr pe = mean_and_error(prod);
    return CovEstimate{cov, pe.std_error, mx.mean, my.mean, config.samples};
}

}  // namespace ym2d
