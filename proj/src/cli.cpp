#include "ym2d/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ym2d/error.hpp"

namespace ym2d::cli {

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

std::string lasso_word_str(const LassoWord& word) {
    if (word.letters.empty()) return "(empty)";
    std::string out;
    for (const auto& l : word.letters) {
        if (!out.empty()) out += ' ';
        out += to_string(l.key) + "^" + std::to_string(l.exponent);
    }
    return out;
}

std::string loop_word_str(const LoopWord& word) {
    if (word.letters.empty()) return "(empty)";
    std::string out;
    for (const auto& l : word.letters) {
        if (!out.empty()) out += ' ';
        out += (l.sign > 0 ? "+" : "-") + l.arc;
    }
    return out;
}

std::string config_line(const McConfig& c, const EngineOpts& o) {
    std::ostringstream os;
    os << "config: N=" << c.N << " samples=" << c.samples
       << " steps-per-area=" << fmt9(c.steps_per_unit_area) << " seed=" << c.seed
       << " alternation-cap=" << o.alternation_cap << " pk-cap=" << o.pk_cap;
    return os.str();
}

}  // namespace

std::string cmd_pk(int kmax, const std::vector<double>& ts, int pk_cap) {
    if (kmax < 1 || kmax > pk_cap)
        throw Error(errc::k_too_large,
                    "cmd_pk: kmax must be in [1, " + std::to_string(pk_cap) + "]");
    std::ostringstream os;
    os << "P_k(t) by recursion, closed form, and Laguerre recurrence\n";
    for (double t : ts) {
        os << "t = " << fmt9(t) << "\n";
        os << "  k  recursion       closed          laguerre        rel-disc\n";
        for (int k = 1; k <= kmax; ++k) {
            double rec = pk_recursion(k, t, pk_cap);
            double clo = pk_closed(k, t);
            double lag = pk_laguerre(k, t);
            double scale = std::max(1.0, std::abs(rec));
            double disc = std::max({std::abs(rec - clo), std::abs(rec - lag),
                                    std::abs(clo - lag)}) /
                          scale;
            char line[160];
            std::snprintf(line, sizeof(line), "%3d  %-15.9g %-15.9g %-15.9g %.3g\n", k, rec,
                          clo, lag, disc);
            os << line;
        }
    }
    return os.str();
}

std::string cmd_expect(const LoopFile& file, const std::string& loop_name, std::int64_t k,
                       const EngineOpts& opts) {
    const LoopWord& loop = file.loop(loop_name);
    Grid grid = file.make_grid();
    FreeEngine engine(EngineConfig{opts.pk_cap, opts.alternation_cap});
    LassoWord word = decompose(loop, grid);
    double value = engine.word_moment(word, k);
    auto windings = face_windings(loop, grid);

    std::ostringstream os;
    os << "expect loop=" << loop_name << " k=" << k << "\n";
    os << "engine: alternation-cap=" << opts.alternation_cap << " pk-cap=" << opts.pk_cap
       << "\n";
    os << "word: " << loop_word_str(loop) << "\n";
    os << "decomposition: " << lasso_word_str(word) << "\n";
    os << "faces:\n";
    for (const auto& [key, area] : grid.lasso_areas()) {
        os << "  " << to_string(key) << " area=" << fmt9(area);
        if (auto it = windings.find(key); it != windings.end())
            os << " winding=" << it->second;
        else
            os << " winding=~ (degenerate)";
        os << "\n";
    }
    os << "tau(u_c^" << k << ") = " << fmt9(value) << "\n";
    return os.str();
}

std::string cmd_reduce(const LoopFile& file, const std::string& loop_name) {
    const LoopWord& loop = file.loop(loop_name);
    Grid grid = file.make_grid();
    LoopWord reduced = backtrack_reduce(loop);
    LassoWord word = decompose(reduced, grid);

    std::ostringstream os;
    os << "reduce loop=" << loop_name << "\n";
    os << "original (" << loop.letters.size() << " letters): " << loop_word_str(loop) << "\n";
    os << "reduced  (" << reduced.letters.size() << " letters): " << loop_word_str(reduced)
       << "\n";
    os << "decomposition: " << lasso_word_str(word) << "\n";
    os << "net exponents:";
    auto net = net_exponents(word);
    if (net.empty()) os << " (none)";
    for (const auto& [key, e] : net) os << " " << to_string(key) << ":" << e;
    os << "\n";
    return os.str();
}

McOutcome cmd_mc(const LoopFile& file, const std::string& loop_name, std::int64_t k,
                 const McConfig& config, const EngineOpts& opts) {
    const LoopWord& loop = file.loop(loop_name);
    Grid grid = file.make_grid();
    FreeEngine engine(EngineConfig{opts.pk_cap, opts.alternation_cap});
    LassoWord word = decompose(loop, grid);
    double free_value = engine.word_moment(word, k);
    McEstimate est = estimate_trace_moment(word, k, config);
    double dev = est.mean - free_value;

    McOutcome out;
    out.z_applicable = est.samples >= 2 && est.std_error > 0.0;
    out.z = out.z_applicable ? dev / est.std_error : 0.0;
    out.hard_fail = out.z_applicable && std::abs(out.z) > 5.0;

    std::ostringstream os;
    os << "mc loop=" << loop_name << " k=" << k << "\n";
    os << config_line(config, opts) << "\n";
    os << "decomposition: " << lasso_word_str(word) << "\n";
    os << "used steps: " << est.used_steps << "\n";
    os << "free value = " << fmt9(free_value) << "\n";
    os << "mc mean    = " << fmt9(est.mean) << "\n";
    if (out.z_applicable) {
        os << "mc stderr  = " << fmt9(est.std_error) << "\n";
        os << "deviation  = " << fmt9(dev) << " (z = " << fmt9(out.z) << ")\n";
        if (out.hard_fail)
            os << "verdict: FAIL (|z| > 5)\n";
        else if (std::abs(out.z) > 3.0)
            os << "verdict: WARN (3 < |z| <= 5)\n";
        else
            os << "verdict: OK (|z| <= 3)\n";
    } else {
        os << "mc stderr  = n/a\n";
        os << "deviation  = " << fmt9(dev) << "\n";
        os << "verdict: n/a (z-test needs samples >= 2 and nonzero spread)\n";
    }
    out.body = os.str();
    return out;
}

ScanOutcome cmd_scan(const LoopFile& file, const std::string& loop_name, std::int64_t k,
                     const std::vector<int>& Ns, const McConfig& config,
                     const EngineOpts& opts) {
    const LoopWord& loop = file.loop(loop_name);
    Grid grid = file.make_grid();
    FreeEngine engine(EngineConfig{opts.pk_cap, opts.alternation_cap});
    LassoWord word = decompose(loop, grid);
    double free_value = engine.word_moment(word, k);
    auto rows = convergence_scan(word, k, Ns, config, free_value);

    ScanOutcome out;
    std::ostringstream body, csv;
    body << "scan loop=" << loop_name << " k=" << k << "\n";
    body << config_line(config, opts) << "\n";
    body << "free value = " << fmt9(free_value) << "\n";
    csv << "N,mean,stderr,free_value,abs_dev\n";
    for (const auto& r : rows) {
        csv << r.estimate.N << "," << fmt9(r.estimate.mean) << "," << fmt9(r.estimate.std_error)
            << "," << fmt9(r.free_value) << "," << fmt9(r.abs_dev) << "\n";
        body << "  N=" << r.estimate.N << " mean=" << fmt9(r.estimate.mean)
             << " stderr=" << fmt9(r.estimate.std_error) << " abs_dev=" << fmt9(r.abs_dev)
             << "\n";
    }
    out.body = body.str();
    out.csv = csv.str();
    return out;
}

}  // namespace ym2d::cli
