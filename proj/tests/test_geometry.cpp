#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"
#include "ym2d/error.hpp"
#include "ym2d/geometry.hpp"

using namespace ym2d;
using namespace ym2d::testutil;

namespace {

const double kPi = std::numbers::pi_v<double>;

Grid two_sector_circle() {
    return Grid::validate({0.0, kPi, kTwoPi},
                          {{"a1", 1, {1.0, 1.0}}, {"a2", 2, {1.0, 1.0}}});
}

}  // namespace

TEST_CASE("two-sector unit circle grid has two faces of area pi/2") {
    Grid g = two_sector_circle();
    CHECK(g.sector_count() == 2);
    CHECK(g.lasso_area({1, 1}) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(g.lasso_area({2, 1}) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(g.key_of("a1") == LassoKey{1, 1});
    CHECK(g.key_of("a2") == LassoKey{2, 1});
}

TEST_CASE("degenerate zero arc gives a zero-area lasso") {
    Grid g = Grid::validate({0.0, kTwoPi}, {{"z", 1, {0.0, 0.0}}});
    CHECK(g.lasso_area({1, 1}) == 0.0);
}

TEST_CASE("crossing arcs are rejected") {
    CHECK_THROWS_AS(Grid::validate({0.0, kTwoPi},
                                   {{"a", 1, {0.2, 0.8}}, {"b", 1, {0.8, 0.2}}}),
                    Error);
    try {
        Grid::validate({0.0, kTwoPi}, {{"a", 1, {0.2, 0.8}}, {"b", 1, {0.8, 0.2}}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::crossing_arcs);
    }
    // interior tangency also violates the grid contract
    CHECK_THROWS_AS(Grid::validate({0.0, kTwoPi},
                                   {{"a", 1, {0.2, 0.5, 0.2}}, {"b", 1, {0.5, 0.5, 0.5}}}),
                    Error);
    // duplicates
    CHECK_THROWS_AS(Grid::validate({0.0, kTwoPi},
                                   {{"a", 1, {0.4, 0.4}}, {"b", 1, {0.4, 0.4}}}),
                    Error);
}

TEST_CASE("angle list validation") {
    CHECK_THROWS_AS(Grid::validate({0.0, 2.0, 1.0, kTwoPi}, {}), Error);
    CHECK_THROWS_AS(Grid::validate({0.1, kTwoPi}, {}), Error);
    CHECK_THROWS_AS(Grid::validate({0.0, 3.0}, {}), Error);
    CHECK_THROWS_AS(Grid::validate({0.0}, {}), Error);
    try {
        Grid::validate({0.0, 3.0}, {});
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_angles);
    }
}

TEST_CASE("negative radius is rejected") {
    CHECK_THROWS_AS(Grid::validate({0.0, kTwoPi}, {{"a", 1, {0.5, -0.1}}}), Error);
    try {
        Grid::validate({0.0, kTwoPi}, {{"a", 1, {0.5, -0.1}}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::negative_radius);
    }
}

TEST_CASE("arcs are sorted into levels regardless of input order") {
    Grid g = Grid::validate({0.0, kTwoPi},
                            {{"outer", 1, {0.9, 0.8}}, {"inner", 1, {0.3, 0.2}}, {"mid", 1, {0.6, 0.5}}});
    CHECK(g.key_of("inner") == LassoKey{1, 1});
    CHECK(g.key_of("mid") == LassoKey{1, 2});
    CHECK(g.key_of("outer") == LassoKey{1, 3});
    CHECK(g.levels(1) == 3);
}

TEST_CASE("backtrack_reduce erases inverse pairs") {
    LoopWord w1{{{"a1", 1}, {"a1", -1}}};
    CHECK(backtrack_reduce(w1).letters.empty());

    LoopWord w2{{{"a1", 1}, {"a2", 1}, {"a2", -1}, {"a3", 1}}};
    LoopWord expect2{{{"a1", 1}, {"a3", 1}}};
    CHECK(backtrack_reduce(w2) == expect2);

    LoopWord w3{{{"a1", 1}, {"a2", 1}}};
    CHECK(backtrack_reduce(w3) == w3);
}

TEST_CASE("backtrack_reduce is idempotent and length-decreasing on random words") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        GridSpec spec = make_grid_spec(rng, 3, 2, 3);
        Grid g = Grid::validate(spec.angles, spec.arcs);
        LoopWord w = inject_backtracks(rng, g, make_random_word(rng, g, 6), 3);
        LoopWord r = backtrack_reduce(w);
        CHECK(r.letters.size() <= w.letters.size());
        CHECK(backtrack_reduce(r) == r);
        validate_loop(r, g);  // reduction preserves connectability
    }
}

TEST_CASE("decompose: circle on the two-sector grid") {
    Grid g = two_sector_circle();
    LassoWord lw = decompose(LoopWord{{{"a1", 1}, {"a2", 1}}}, g);
    REQUIRE(lw.letters.size() == 2);
    CHECK(lw.letters[0] == LassoLetter{{1, 1}, 1});
    CHECK(lw.letters[1] == LassoLetter{{2, 1}, 1});
    CHECK(lw.areas.at({1, 1}) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(lw.areas.at({2, 1}) == doctest::Approx(kPi / 2).epsilon(1e-14));
}

TEST_CASE("decompose: backtracking word vanishes") {
    Grid g = two_sector_circle();
    CHECK(decompose(LoopWord{{{"a1", 1}, {"a1", -1}}}, g).letters.empty());
}

TEST_CASE("decompose: level-3 arc expands inner to outer") {
    Grid g = Grid::validate({0.0, kTwoPi},
                            {{"r1", 1, {0.2, 0.2}}, {"r2", 1, {0.5, 0.5}}, {"r3", 1, {0.9, 0.9}}});
    LassoWord lw = decompose(LoopWord{{{"r3", 1}}}, g);
    REQUIRE(lw.letters.size() == 3);
    CHECK(lw.letters[0] == LassoLetter{{1, 1}, 1});
    CHECK(lw.letters[1] == LassoLetter{{1, 2}, 1});
    CHECK(lw.letters[2] == LassoLetter{{1, 3}, 1});
    // reverse traversal gives the reversed inverse word
    LassoWord rev = decompose(LoopWord{{{"r3", -1}}}, g);
    REQUIRE(rev.letters.size() == 3);
    CHECK(rev.letters[0] == LassoLetter{{1, 3}, -1});
    CHECK(rev.letters[2] == LassoLetter{{1, 1}, -1});
}

TEST_CASE("loop validation errors") {
    Grid g = two_sector_circle();
    CHECK_THROWS_AS(decompose(LoopWord{{{"nope", 1}}}, g), Error);
    try {
        decompose(LoopWord{{{"nope", 1}}}, g);
    } catch (const Error& e) {
        CHECK(e.code() == errc::arc_not_in_grid);
    }
    // does not close: single half-circle
    CHECK_THROWS_AS(decompose(LoopWord{{{"a1", 1}}}, g), Error);
    // not connectable: a1 forward then a1 forward requires start at node 1
    CHECK_THROWS_AS(decompose(LoopWord{{{"a1", 1}, {"a1", 1}}}, g), Error);
}

TEST_CASE("face windings: circle, reversed circle, doubled circle") {
    Grid g = two_sector_circle();
    auto w1 = face_windings(LoopWord{{{"a1", 1}, {"a2", 1}}}, g);
    CHECK(w1.at({1, 1}) == 1);
    CHECK(w1.at({2, 1}) == 1);
    auto w2 = face_windings(LoopWord{{{"a2", -1}, {"a1", -1}}}, g);
    CHECK(w2.at({1, 1}) == -1);
    CHECK(w2.at({2, 1}) == -1);
    auto w3 = face_windings(LoopWord{{{"a1", 1}, {"a2", 1}, {"a1", 1}, {"a2", 1}}}, g);
    CHECK(w3.at({1, 1}) == 2);
    CHECK(w3.at({2, 1}) == 2);
}

TEST_CASE("degenerate faces are absent from windings") {
    Grid g = Grid::validate({0.0, kTwoPi}, {{"z", 1, {0.0, 0.0}}});
    auto w = face_windings(LoopWord{{{"z", 1}}}, g);
    CHECK(w.count({1, 1}) == 0);
}

TEST_CASE("net lasso exponents equal face windings on random loops") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 30; ++rep) {
        int sectors = 2 + static_cast<int>(rng() % 3);
        int levels = 1 + static_cast<int>(rng() % 3);
        GridSpec spec = make_grid_spec(rng, sectors, levels, 3);
        Grid g = Grid::validate(spec.angles, spec.arcs);
        LoopWord w = make_random_word(rng, g, 4 + static_cast<int>(rng() % 6));
        auto net = net_exponents(decompose(w, g));
        auto wind = face_windings(w, g);
        for (const auto& [key, area] : g.lasso_areas()) {
            if (area <= kDegenerateAreaTol) continue;
            std::int64_t e = net.count(key) ? net.at(key) : 0;
            std::int64_t f = wind.count(key) ? wind.at(key) : 0;
            CHECK(e == f);
        }
    }
}

TEST_CASE("decompose agrees before and after backtrack reduction") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        GridSpec spec = make_grid_spec(rng, 3, 2, 4);
        Grid g = Grid::validate(spec.angles, spec.arcs);
        LoopWord w = inject_backtracks(rng, g, make_random_word(rng, g, 5), 4);
        CHECK(decompose(w, g) == decompose(backtrack_reduce(w), g));
    }
}

TEST_CASE("re-gridding: splitting a sector preserves weighted area") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 15; ++rep) {
        const int n_samples = 5;
        GridSpec spec = make_grid_spec(rng, 3, 2, n_samples);
        Grid g = Grid::validate(spec.angles, spec.arcs);
        LoopWord w = make_random_word(rng, g, 6);
        auto net = net_exponents(decompose(w, g));
        double total = 0.0;
        for (const auto& [key, e] : net) total += std::abs(static_cast<double>(e)) * g.lasso_area(key);

        // split sector `js` at an interior sample index; arcs split exactly
        const int js = 1 + static_cast<int>(rng() % 3);
        const int cut = 1 + static_cast<int>(rng() % (n_samples - 2));
        GridSpec refined;
        for (double a : spec.angles) refined.angles.push_back(a);
        double a0 = spec.angles[static_cast<std::size_t>(js - 1)];
        double a1 = spec.angles[static_cast<std::size_t>(js)];
        double theta_cut = a0 + (a1 - a0) * static_cast<double>(cut) / (n_samples - 1);
        refined.angles.insert(refined.angles.begin() + js, theta_cut);
        std::map<std::string, std::pair<std::string, std::string>> split_ids;
        for (const Arc& arc : spec.arcs) {
            if (arc.sector < js) {
                refined.arcs.push_back(arc);
            } else if (arc.sector > js) {
                Arc moved = arc;
                moved.sector += 1;
                refined.arcs.push_back(moved);
            } else {
                Arc left{arc.id + "L", js,
                         std::vector<double>(arc.samples.begin(), arc.samples.begin() + cut + 1)};
                Arc right{arc.id + "R", js + 1,
                          std::vector<double>(arc.samples.begin() + cut, arc.samples.end())};
                split_ids[arc.id] = {left.id, right.id};
                refined.arcs.push_back(left);
                refined.arcs.push_back(right);
            }
        }
        Grid g2 = Grid::validate(refined.angles, refined.arcs);
        LoopWord w2;
        for (const auto& l : w.letters) {
            auto it = split_ids.find(l.arc);
            if (it == split_ids.end()) {
                w2.letters.push_back(l);
            } else if (l.sign > 0) {
                w2.letters.push_back({it->second.first, 1});
                w2.letters.push_back({it->second.second, 1});
            } else {
                w2.letters.push_back({it->second.second, -1});
                w2.letters.push_back({it->second.first, -1});
            }
        }
        auto net2 = net_exponents(decompose(w2, g2));
        double total2 = 0.0;
        for (const auto& [key, e] : net2) total2 += std::abs(static_cast<double>(e)) * g2.lasso_area(key);
        CHECK(total2 == doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("face areas sum to the outermost-arc integral") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        GridSpec spec = make_grid_spec(rng, 2 + static_cast<int>(rng() % 3),
                                       1 + static_cast<int>(rng() % 3), 4);
        Grid g = Grid::validate(spec.angles, spec.arcs);
        double total = 0.0;
        for (const auto& [key, area] : g.lasso_areas()) total += area;
        double expect = 0.0;
        for (int j = 1; j <= g.sector_count(); ++j) {
            const Arc& top = g.arc(j, g.levels(j));
            expect += 0.5 * integral_r2(top.samples, g.sector_end(j) - g.sector_start(j));
        }
        CHECK(total == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("normalize_lasso_letters merges and cascades") {
    std::vector<LassoLetter> letters{{{1, 1}, 2}, {{1, 2}, 1}, {{1, 2}, -1}, {{1, 1}, -2}, {{2, 1}, 3}};
    auto n = normalize_lasso_letters(letters);
    REQUIRE(n.size() == 1);
    CHECK(n[0] == LassoLetter{{2, 1}, 3});
}
