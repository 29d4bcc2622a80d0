#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "econe/partition.hpp"

using namespace econe;

namespace {

// Independent oracle: conjugate by direct column counting.
Partition transpose_oracle(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1; j <= p.part(0); ++j) {
        int count = 0;
        for (int i = 0; i < p.length(); ++i)
            if (p.part(i) >= j) ++count;
        cols.push_back(count);
    }
    return Partition(cols);
}

// Independent oracle: p(n) by the classic parts-DP, nothing shared with the
// library's enumerator or the pentagonal recurrence in the suites.
long long p_oracle(int n) {
    std::vector<long long> dp(n + 1, 0);
    dp[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j) dp[j] += dp[j - k];
    return dp[n];
}

}  // namespace

TEST_CASE("partition construction and normalization") {
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{3, 1}.length() == 2);
    CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
    CHECK(Partition{3, 1}.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), bad_argument);
    CHECK_THROWS_AS(Partition({2, -1}), bad_argument);
    CHECK(Partition::parse("3,1") == Partition{3, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition{3, 1}.to_string() == "3,1");
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(transpose(p) == transpose_oracle(p));
            CHECK(transpose(transpose(p)) == p);
        }
}

TEST_CASE("add is the componentwise sum and merges columns") {
    CHECK(add(Partition{1}, Partition{1}) == Partition{2});
    CHECK(add(Partition{2, 1}, Partition{1, 1}) == Partition{3, 2});
    CHECK(add(Partition{2}, Partition{}) == Partition{2});
    //
    // Multiset of columns of mu+nu equals columns of mu together with nu.
    for (int n = 0; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            std::multiset<int> expected, actual;
            Partition mt = transpose_oracle(b.mu()), nt = transpose_oracle(b.nu());
            Partition st = transpose(add(b.mu(), b.nu()));
            for (int c : mt.parts()) expected.insert(c);
            for (int c : nt.parts()) expected.insert(c);
            for (int c : st.parts()) actual.insert(c);
            CHECK(expected == actual);
        }
}

TEST_CASE("bipartition enumeration") {
    auto q0 = enumerate_bipartitions(0);
    REQUIRE(q0.size() == 1);
    CHECK(q0[0] == Bipartition(Partition{}, Partition{}));
    CHECK(enumerate_bipartitions(2).size() == 5);
    CHECK(enumerate_bipartitions(3).size() == 10);

    for (int n = 0; n <= 10; ++n) {
        long long expected = 0;
        for (int k = 0; k <= n; ++k) expected += p_oracle(k) * p_oracle(n - k);
        auto all = enumerate_bipartitions(n);
        CHECK(static_cast<long long>(all.size()) == expected);
        std::set<std::string> keys;
        for (const auto& b : all) {
            CHECK(b.n() == n);
            keys.insert(b.key());
        }
        CHECK(keys.size() == all.size());
        // Deterministic order: (|mu|, mu, nu) ascending.
        for (std::size_t i = 1; i < all.size(); ++i) {
            auto a = std::tuple{all[i - 1].mu().size(), all[i - 1].mu(), all[i - 1].nu()};
            auto b = std::tuple{all[i].mu().size(), all[i].mu(), all[i].nu()};
            CHECK(a < b);
        }
    }
}

TEST_CASE("bipartition keys round-trip") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            CHECK(Bipartition::parse_key(b.key()) == b);
    CHECK(Bipartition(Partition{2}, Partition{}).key() == "2|");
    CHECK(Bipartition(Partition{1, 1}, Partition{1}).key() == "1,1|1");
}

TEST_CASE("interleave") {
    CHECK(interleave(Bipartition(Partition{1, 1}, Partition{})) == Composition{1, 0, 1, 0});
    CHECK(interleave(Bipartition(Partition{1}, Partition{1})) == Composition{1, 1});
    CHECK(interleave(Bipartition(Partition{2, 1}, Partition{1, 1})) == Composition{2, 1, 1, 1});
    CHECK(interleave(Bipartition(Partition{}, Partition{})) == Composition{});
}

TEST_CASE("closure order examples") {
    CHECK(closure_leq(Bipartition(Partition{1}, Partition{1}), Bipartition(Partition{2}, Partition{})));
    Bipartition a(Partition{1, 1}, Partition{});
    Bipartition b(Partition{}, Partition{2});
    CHECK_FALSE(closure_leq(a, b));
    CHECK_FALSE(closure_leq(b, a));
    CHECK(closure_leq(a, a));
    CHECK_THROWS_AS(closure_leq(a, Bipartition(Partition{1}, Partition{})), bad_argument);
}

TEST_CASE("closure order is a partial order with unique extremes") {
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_bipartitions(n);
        for (const auto& a : all) {
            CHECK(closure_leq(a, a));
            for (const auto& b : all) {
                if (closure_leq(a, b) && closure_leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (closure_leq(a, b) && closure_leq(b, c)) CHECK(closure_leq(a, c));
            }
        }
        Bipartition top(Partition{n}, Partition{});
        Bipartition bottom(Partition{}, Partition(std::vector<int>(n, 1)));
        for (const auto& b : all) {
            CHECK(closure_leq(b, top));
            CHECK(closure_leq(bottom, b));
            // No other element can be a maximum or minimum.
            if (b != top) CHECK_FALSE(closure_leq(top, b));
            if (b != bottom) CHECK_FALSE(closure_leq(b, bottom));
        }
    }
}
