#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ym2d/error.hpp"
#include "ym2d/nc.hpp"

using namespace ym2d;

namespace {

using Blocks = std::vector<std::vector<int>>;

Blocks canonical(Blocks b) {
    for (auto& blk : b) std::sort(blk.begin(), blk.end());
    std::sort(b.begin(), b.end());
    return b;
}

bool crosses(const Blocks& blocks) {
    // some a<b<c<d with {a,c} and {b,d} in different blocks
    std::vector<int> owner;
    int n = 0;
    for (const auto& blk : blocks)
        for (int x : blk) n = std::max(n, x);
    owner.assign(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int x : blocks[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b])
                        return true;
    return false;
}

// all set partitions of {1..n}, by assigning each point to an existing or
// new block (restricted growth)
void all_partitions(int n, int i, Blocks& cur, std::vector<Blocks>& out) {
    if (i > n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t bi = 0; bi < cur.size(); ++bi) {  // by index: recursion reallocates cur
        cur[bi].push_back(i);
        all_partitions(n, i + 1, cur, out);
        cur[bi].pop_back();
    }
    cur.push_back({i});
    all_partitions(n, i + 1, cur, out);
    cur.pop_back();
}

}  // namespace

TEST_CASE("counts match Catalan numbers") {
    CHECK(enumerate_nc(1).size() == 1);
    CHECK(enumerate_nc(3).size() == 5);
    CHECK(enumerate_nc(4).size() == 14);
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t count = 0;
        for_each_nc(n, [&](const NcPartition&) { ++count; });
        CHECK(count == catalan(n));
    }
}

TEST_CASE("n=4 excludes exactly the crossing pairing {13}{24}") {
    auto parts = enumerate_nc(4);
    Blocks crossing{{1, 3}, {2, 4}};
    for (const auto& p : parts) CHECK(canonical(p.blocks) != canonical(crossing));
}

TEST_CASE("matches brute-force filter of all set partitions up to n=8") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Blocks> all;
        Blocks cur;
        all_partitions(n, 1, cur, all);
        std::set<Blocks> expected;
        for (const auto& b : all)
            if (!crosses(b)) expected.insert(canonical(b));
        std::set<Blocks> got;
        for (const auto& p : enumerate_nc(n)) {
            CHECK(!crosses(p.blocks));
            got.insert(canonical(p.blocks));
        }
        CHECK(got == expected);
        CHECK(got.size() == catalan(n));  // no duplicates emitted
    }
}

TEST_CASE("blocks are disjoint, covering, and listed by smallest element") {
    for (const auto& p : enumerate_nc(6)) {
        std::set<int> seen;
        int prev_min = 0;
        for (const auto& blk : p.blocks) {
            REQUIRE(!blk.empty());
            CHECK(blk.front() > prev_min);
            prev_min = blk.front();
            for (std::size_t i = 0; i < blk.size(); ++i) {
                CHECK(seen.insert(blk[i]).second);
                if (i > 0) CHECK(blk[i] > blk[i - 1]);
            }
        }
        CHECK(seen.size() == 6);
    }
}

TEST_CASE("cap enforcement") {
    CHECK_THROWS_AS(enumerate_nc(15), Error);
    CHECK_THROWS_AS(enumerate_nc(4, 3), Error);
    try {
        enumerate_nc(15);
    } catch (const Error& e) {
        CHECK(e.code() == errc::n_too_large);
    }
}

TEST_CASE("catalan helper") {
    std::uint64_t expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) CHECK(catalan(n) == expect[n]);
}
