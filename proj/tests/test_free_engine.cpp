#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"
#include "ym2d/error.hpp"
#include "ym2d/free_engine.hpp"
#include "ym2d/nc.hpp"

using namespace ym2d;
using namespace ym2d::testutil;

namespace {

LassoWord make_word(std::vector<LassoLetter> letters, std::map<LassoKey, double> areas) {
    return LassoWord{std::move(letters), std::move(areas)};
}

// Literal evaluation of the monochromatic non-crossing moment formula:
// sum over NC(n) partitions, zero for any block mixing generators.  The
// independent route for small words (shares only the cumulant primitive).
double literal_nc_moment(FreeEngine& engine, const std::vector<LassoLetter>& w,
                         const std::map<LassoKey, double>& areas) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return 1.0;
    double total = 0.0;
    for_each_nc(n, [&](const NcPartition& part) {
        double prod = 1.0;
        for (const auto& blk : part.blocks) {
            const LassoKey key = w[static_cast<std::size_t>(blk.front() - 1)].key;
            std::vector<std::int64_t> exps;
            for (int pos : blk) {
                if (w[static_cast<std::size_t>(pos - 1)].key != key) {
                    prod = 0.0;
                    break;
                }
                exps.push_back(w[static_cast<std::size_t>(pos - 1)].exponent);
            }
            if (prod == 0.0) break;
            prod *= engine.free_cumulant(MscLaw{areas.at(key)}, exps);
        }
        total += prod;
    });
    return total;
}

}  // namespace

TEST_CASE("first cumulant is the mean") {
    FreeEngine engine;
    for (double t : {0.3, 1.0, 2.2})
        CHECK(engine.free_cumulant(MscLaw{t}, {1}) == msc_moment(t, 1));
}

TEST_CASE("kappa(u, u*) = 1 - e^{-t}") {
    FreeEngine engine;
    for (double t : {0.25, 0.7, 1.0, 1.9})
        CHECK(engine.free_cumulant(MscLaw{t}, {1, -1}) ==
              doctest::Approx(1.0 - std::exp(-t)).epsilon(1e-13));
}

TEST_CASE("kappa(u, u) at t=1 is -1/e") {
    FreeEngine engine;
    CHECK(engine.free_cumulant(MscLaw{1.0}, {1, 1}) ==
          doctest::Approx(-std::exp(-1.0)).epsilon(1e-13));
    double m2 = msc_moment(1.0, 2), m1 = msc_moment(1.0, 1);
    CHECK(engine.free_cumulant(MscLaw{1.0}, {1, 1}) ==
          doctest::Approx(m2 - m1 * m1).epsilon(1e-13));
}

TEST_CASE("single-letter word reduces to msc_moment") {
    FreeEngine engine;
    LassoWord w = make_word({{{1, 1}, 1}}, {{{1, 1}, 1.0}});
    CHECK(engine.word_moment(w, 1) == doctest::Approx(0.6065306597126334).epsilon(1e-12));
    CHECK(engine.word_moment(w, 2) == doctest::Approx(msc_moment(1.0, 2)).epsilon(1e-13));
    CHECK(engine.word_moment(w, -3) == engine.word_moment(w, 3));
}

TEST_CASE("freeness factorizes the mean of a product") {
    FreeEngine engine;
    double s = 0.6, t = 1.3;
    LassoWord w = make_word({{{1, 1}, 1}, {{2, 1}, 1}}, {{{1, 1}, s}, {{2, 1}, t}});
    CHECK(engine.word_moment(w, 1) ==
          doctest::Approx(std::exp(-s / 2) * std::exp(-t / 2)).epsilon(1e-13));
}

TEST_CASE("tau(u1 u2 u1 u2) = e^{-(s+t)}(1-s-t) = msc_moment(s+t, 2)") {
    FreeEngine engine;
    for (auto [s, t] : std::vector<std::pair<double, double>>{{0.5, 0.5}, {0.2, 1.1}, {1.0, 1.0}}) {
        LassoWord w = make_word({{{1, 1}, 1}, {{2, 1}, 1}}, {{{1, 1}, s}, {{2, 1}, t}});
        double got = engine.word_moment(w, 2);
        CHECK(got == doctest::Approx(std::exp(-(s + t)) * (1 - s - t)).epsilon(1e-12));
        CHECK(got == doctest::Approx(msc_moment(s + t, 2)).epsilon(1e-12));
    }
}

TEST_CASE("commutator tau(u1 u2 u1* u2*) = e^{-s} + e^{-t} - e^{-s-t}") {
    FreeEngine engine;
    for (auto [s, t] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.4, 0.9}}) {
        LassoWord w = make_word({{{1, 1}, 1}, {{2, 1}, 1}, {{1, 1}, -1}, {{2, 1}, -1}},
                                {{{1, 1}, s}, {{2, 1}, t}});
        CHECK(engine.word_moment(w, 1) ==
              doctest::Approx(std::exp(-s) + std::exp(-t) - std::exp(-s - t)).epsilon(1e-12));
    }
}

TEST_CASE("matches the literal NC(n) sum on random small words") {
    std::mt19937_64 rng(99);
    FreeEngine engine;
    std::uniform_real_distribution<double> area(0.1, 1.5);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + static_cast<int>(rng() % 6);  // expanded length <= 8
        std::map<LassoKey, double> areas;
        std::vector<LassoLetter> letters;
        int n_keys = 1 + static_cast<int>(rng() % 3);
        for (int k = 1; k <= n_keys; ++k) areas[{1, k}] = area(rng);
        for (int i = 0; i < n; ++i) {
            LassoKey key{1, 1 + static_cast<int>(rng() % n_keys)};
            std::int64_t e = 1 + static_cast<std::int64_t>(rng() % 2);
            if (rng() % 2) e = -e;
            letters.push_back({key, e});
        }
        letters = normalize_lasso_letters(letters);
        double lit = literal_nc_moment(engine, letters, areas);
        double got = engine.word_moment(make_word(letters, areas), 1);
        CHECK(got == doctest::Approx(lit).epsilon(1e-11));
    }
}

TEST_CASE("traciality: invariant under cyclic rotation") {
    std::mt19937_64 rng(123);
    FreeEngine engine(EngineConfig{64, 24});
    std::uniform_real_distribution<double> area(0.1, 1.5);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::map<LassoKey, double> areas;
        for (int k = 1; k <= 3; ++k) areas[{1, k}] = area(rng);
        std::vector<LassoLetter> letters;
        for (int i = 0; i < n; ++i) {
            std::int64_t e = 1 + static_cast<std::int64_t>(rng() % 3);
            if (rng() % 2) e = -e;
            letters.push_back({{1, 1 + static_cast<int>(rng() % 3)}, e});
        }
        double base = engine.word_moment(make_word(letters, areas), 1);
        for (std::size_t r = 1; r < letters.size(); ++r) {
            std::vector<LassoLetter> rot(letters.begin() + static_cast<std::ptrdiff_t>(r),
                                         letters.end());
            rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
            double v = engine.word_moment(make_word(rot, areas), 1);
            CHECK(std::abs(v - base) <= 1e-12 * std::max(1.0, std::abs(base)));
        }
    }
}

TEST_CASE("unitarity: tau(w w*) == 1 exactly") {
    FreeEngine engine;
    // single generator
    for (std::int64_t e : {1, 2, 5}) {
        LassoWord w = make_word({{{1, 1}, e}, {{1, 1}, -e}}, {{{1, 1}, 0.8}});
        CHECK(engine.word_moment(w, 1) == 1.0);
    }
    // longer word: w w* cancels letter by letter
    LassoWord ww = make_word({{{1, 1}, 2}, {{1, 2}, -1}, {{1, 3}, 1},
                              {{1, 3}, -1}, {{1, 2}, 1}, {{1, 1}, -2}},
                             {{{1, 1}, 0.5}, {{1, 2}, 0.9}, {{1, 3}, 1.4}});
    CHECK(engine.word_moment(ww, 1) == 1.0);
}

TEST_CASE("word moments are bounded by 1 in modulus") {
    std::mt19937_64 rng(31);
    FreeEngine engine(EngineConfig{64, 20});
    std::uniform_real_distribution<double> area(0.05, 2.0);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::map<LassoKey, double> areas;
        for (int k = 1; k <= 4; ++k) areas[{1, k}] = area(rng);
        std::vector<LassoLetter> letters;
        for (int i = 0; i < n; ++i) {
            std::int64_t e = 1 + static_cast<std::int64_t>(rng() % 3);
            if (rng() % 2) e = -e;
            letters.push_back({{1, 1 + static_cast<int>(rng() % 4)}, e});
        }
        std::int64_t power = 1 + static_cast<std::int64_t>(rng() % 2);
        double v = engine.word_moment(make_word(letters, areas), power);
        CHECK(std::abs(v) <= 1.0 + 1e-11);
    }
}

TEST_CASE("semigroup law: tau((g1...gm)^k) = msc_moment(t1+...+tm, k)") {
    std::mt19937_64 rng(47);
    FreeEngine engine(EngineConfig{64, 20});
    std::uniform_real_distribution<double> area(0.1, 1.2);
    for (int m = 1; m <= 3; ++m) {
        for (int rep = 0; rep < 4; ++rep) {
            std::map<LassoKey, double> areas;
            std::vector<LassoLetter> letters;
            double sum = 0.0;
            for (int i = 1; i <= m; ++i) {
                double t = area(rng);
                areas[{1, i}] = t;
                sum += t;
                letters.push_back({{1, i}, 1});
            }
            LassoWord w = make_word(letters, areas);
            for (std::int64_t k = 1; k <= 5; ++k)
                CHECK(engine.word_moment(w, k) ==
                      doctest::Approx(msc_moment(sum, k)).epsilon(1e-9));
        }
    }
}

TEST_CASE("alternation cap") {
    FreeEngine engine;  // default cap 14
    std::map<LassoKey, double> areas{{{1, 1}, 0.4}, {{1, 2}, 0.7}};
    LassoWord w = make_word({{{1, 1}, 1}, {{1, 2}, 1}}, areas);
    CHECK_THROWS_AS(engine.word_moment(w, 8), Error);  // expands to 16 letters
    try {
        engine.word_moment(w, 8);
    } catch (const Error& e) {
        CHECK(e.code() == errc::word_too_long);
    }
    FreeEngine wide(EngineConfig{64, 16});
    CHECK_NOTHROW(wide.word_moment(w, 8));
    CHECK(engine.word_moment(w, 7) == wide.word_moment(w, 7));
}

TEST_CASE("missing area raises UnknownLassoKey") {
    FreeEngine engine;
    LassoWord w = make_word({{{1, 1}, 1}, {{2, 1}, 1}}, {{{1, 1}, 0.5}});
    CHECK_THROWS_AS(engine.word_moment(w, 1), Error);
    try {
        engine.word_moment(w, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_lasso_key);
    }
}

TEST_CASE("power zero and empty words give 1") {
    FreeEngine engine;
    LassoWord w = make_word({{{1, 1}, 1}}, {{{1, 1}, 1.0}});
    CHECK(engine.word_moment(w, 0) == 1.0);
    CHECK(engine.word_moment(LassoWord{}, 3) == 1.0);
}

TEST_CASE("wilson_loop: two-sector circle") {
    Grid g = Grid::validate({0.0, std::numbers::pi_v<double>, kTwoPi},
                            {{"a1", 1, {1.0, 1.0}}, {"a2", 2, {1.0, 1.0}}});
    FreeEngine engine;
    // area pi: tau(u) = e^{-pi/2}, tau(u^2) = e^{-pi}(1 - pi)
    CHECK(engine.wilson_loop(LoopWord{{{"a1", 1}, {"a2", 1}}}, g, 1) ==
          doctest::Approx(0.20787957635076193).epsilon(1e-12));
    CHECK(engine.wilson_loop(LoopWord{{{"a1", 1}, {"a2", 1}}}, g, 2) ==
          doctest::Approx(std::exp(-std::numbers::pi_v<double>) *
                          (1 - std::numbers::pi_v<double>))
              .epsilon(1e-12));
    // fully backtracking loop
    CHECK(engine.wilson_loop(LoopWord{{{"a1", 1}, {"a1", -1}}}, g, 5) == 1.0);
}

TEST_CASE("engine value is invariant under backtrack injection") {
    std::mt19937_64 rng(61);
    FreeEngine engine(EngineConfig{64, 40});
    for (int rep = 0; rep < 15; ++rep) {
        GridSpec spec = make_grid_spec(rng, 3, 2, 3);
        Grid g = Grid::validate(spec.angles, spec.arcs);
        LoopWord w = make_random_word(rng, g, 4);
        LoopWord wb = inject_backtracks(rng, g, w, 3);
        CHECK(engine.wilson_loop(w, g, 1) == engine.wilson_loop(wb, g, 1));
        CHECK(engine.wilson_loop(w, g, 2) == engine.wilson_loop(wb, g, 2));
    }
}
