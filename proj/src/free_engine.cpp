#include "ym2d/free_engine.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ym2d/error.hpp"

namespace {
// subset enumeration over same-generator positions keeps this many bits
constexpr int kMaxSubsetBits = 25;
}  // namespace

namespace ym2d {

double FreeEngine::kappa(double t, const std::vector<std::int64_t>& exps) {
    auto key = std::make_pair(t, exps);
    if (auto it = kappa_memo_.find(key); it != kappa_memo_.end()) return it->second;

    MscLaw law{t, cfg_.pk_cap};
    const int m = static_cast<int>(exps.size());
    if (m - 1 > kMaxSubsetBits)
        throw Error(errc::word_too_long,
                    "free cumulant of " + std::to_string(m) + " arguments is out of reach");
    double result;
    if (m == 1) {
        result = law.moment(exps[0]);
    } else {
        std::int64_t sum = 0;
        for (auto e : exps) sum += e;
        result = law.moment(sum);
        // subtract every partition whose block of the first letter is proper:
        // kappa(block) times the plain moment of each gap (a gap's moment is
        // the sum over its own partitions, which collapses to the moment of
        // its exponent sum for a single generator)
        const std::uint32_t full = (1u << (m - 1)) - 1u;
        std::vector<std::int64_t> block;
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            block.assign(1, exps[0]);
            double gaps = 1.0;
            std::int64_t run = 0;
            for (int b = 0; b < m - 1; ++b) {
                if (mask & (1u << b)) {
                    if (run != 0) {
                        gaps *= law.moment(run);
                        run = 0;
                    }
                    block.push_back(exps[static_cast<std::size_t>(b + 1)]);
                } else {
                    run += exps[static_cast<std::size_t>(b + 1)];
                }
            }
            if (run != 0) gaps *= law.moment(run);
            result -= kappa(t, block) * gaps;
        }
    }
    kappa_memo_.emplace(std::move(key), result);
    return result;
}

double FreeEngine::free_cumulant(const MscLaw& law, const std::vector<std::int64_t>& exponents) {
    if (exponents.empty())
        throw Error(errc::bad_loop, "free_cumulant: empty exponent list");
    if (static_cast<int>(exponents.size()) > cfg_.alternation_cap)
        throw Error(errc::n_too_large,
                    "free_cumulant: " + std::to_string(exponents.size()) +
                        " arguments exceed alternation cap " +
                        std::to_string(cfg_.alternation_cap));
    return kappa(law.t, exponents);
}

namespace {

struct WordEval {
    const std::vector<LassoLetter>& w;
    const std::map<LassoKey, double>& areas;
    std::function<double(double, const std::vector<std::int64_t>&)> kap;
    int n;
    std::vector<double> memo;
    std::vector<char> computed;

    double moment(int i, int j) {
        if (i > j) return 1.0;
        const std::size_t slot = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(j);
        if (computed[slot]) return memo[slot];
        const LassoKey key = w[static_cast<std::size_t>(i)].key;
        const double t = areas.at(key);
        std::vector<int> pos{i};
        for (int q = i + 1; q <= j; ++q)
            if (w[static_cast<std::size_t>(q)].key == key) pos.push_back(q);
        const int extra = static_cast<int>(pos.size()) - 1;
        if (extra > kMaxSubsetBits)
            throw Error(errc::word_too_long,
                        "word_moment: a generator occurs " + std::to_string(extra + 1) +
                            " times; out of reach");
        double total = 0.0;
        std::vector<std::int64_t> exps;
        for (std::uint32_t mask = 0; mask < (1u << extra); ++mask) {
            exps.assign(1, w[static_cast<std::size_t>(i)].exponent);
            double prod = 1.0;
            int prev = i;
            for (int b = 0; b < extra; ++b) {
                if (mask & (1u << b)) {
                    int p = pos[static_cast<std::size_t>(b + 1)];
                    prod *= moment(prev + 1, p - 1);
                    exps.push_back(w[static_cast<std::size_t>(p)].exponent);
                    prev = p;
                }
            }
            prod *= moment(prev + 1, j);
            total += kap(t, exps) * prod;
        }
        computed[slot] = 1;
        memo[slot] = total;
        return total;
    }
};

}  // namespace

double FreeEngine::word_moment(const LassoWord& word, std::int64_t power) {
    std::vector<LassoLetter> base = normalize_lasso_letters(word.letters);
    if (power == 0 || base.empty()) return 1.0;

    std::vector<LassoLetter> unit = base;
    if (power < 0) {
        std::reverse(unit.begin(), unit.end());
        for (auto& l : unit) l.exponent = -l.exponent;
    }
    const std::int64_t reps = power < 0 ? -power : power;
    std::vector<LassoLetter> expanded;
    expanded.reserve(unit.size() * static_cast<std::size_t>(reps));
    for (std::int64_t r = 0; r < reps; ++r)
        expanded.insert(expanded.end(), unit.begin(), unit.end());
    expanded = normalize_lasso_letters(expanded);

    const int n = static_cast<int>(expanded.size());
    if (n == 0) return 1.0;
    if (n > cfg_.alternation_cap)
        throw Error(errc::word_too_long,
                    "word_moment: normalized word has " + std::to_string(n) +
                        " letters, exceeding alternation cap " +
                        std::to_string(cfg_.alternation_cap));
    for (const auto& l : expanded)
        if (!word.areas.count(l.key))
            throw Error(errc::unknown_lasso_key,
                        "word_moment: no area for lasso " + to_string(l.key));

    WordEval eval{expanded,
                  word.areas,
                  [this](double t, const std::vector<std::int64_t>& e) { return kappa(t, e); },
                  n,
                  std::vector<double>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0),
                  std::vector<char>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)};
    return eval.moment(0, n - 1);
}

double FreeEngine::wilson_loop(const LoopWord& loop, const Grid& grid, std::int64_t power) {
    return word_moment(decompose(loop, grid), power);
}

}  // namespace ym2d
