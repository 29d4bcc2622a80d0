#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "econe/cone.hpp"
#include "econe/pi.hpp"

using namespace econe;

TEST_CASE("normal frame indexing") {
    NormalFrame f{Partition{3, 2}};
    CHECK(f.total() == 5);
    CHECK(f.index(1, 1) == 0);
    CHECK(f.index(1, 3) == 2);
    CHECK(f.index(2, 1) == 3);
    CHECK(f.label(4) == std::pair{2, 2});
    CHECK_THROWS_AS(f.index(2, 3), bad_argument);
}

TEST_CASE("representative examples") {
    Fq F2 = Fq::prime(2);

    auto [p1, f1] = representative(Bipartition(Partition{}, Partition{1, 1}), F2);
    CHECK(p1.x.is_zero());
    CHECK(p1.v == std::vector<int>{0, 0});

    auto [p2, f2] = representative(Bipartition(Partition{1}, Partition{1}), F2);
    CHECK(f2.lambda == Partition{2});
    CHECK(p2.v == std::vector<int>{1, 0});
    CHECK(p2.x.at(0, 1) == 1);
    CHECK(p2.x.at(0, 0) + p2.x.at(1, 0) + p2.x.at(1, 1) == 0);

    auto [p3, f3] = representative(Bipartition(Partition{2}, Partition{}), F2);
    CHECK(p3.v == std::vector<int>{0, 1});
    CHECK(identify_orbit(p3) == Bipartition(Partition{2}, Partition{}));
}

TEST_CASE("jordan type") {
    Fq F3 = Fq::prime(3);
    CHECK(jordan_type(MatFF(F3, 4, 4)) == Partition{1, 1, 1, 1});
    CHECK(jordan_type(MatFF(F3, 0, 0)) == Partition{});

    auto [pt, frame] = representative(Bipartition(Partition{2, 1}, Partition{1, 1}), F3);
    CHECK(jordan_type(pt.x) == Partition{3, 2});

    CHECK_THROWS_AS(jordan_type(MatFF::identity(F3, 2)), validation_error);

    std::mt19937_64 rng(123);
    for (int t = 0; t < 20; ++t) {
        MatFF g = random_gl(F3, 5, rng);
        CHECK(jordan_type(g * pt.x * inverse(g)) == Partition{3, 2});
    }
}

TEST_CASE("cyclic space") {
    Fq F2 = Fq::prime(2);
    auto [p1, f1] = representative(Bipartition(Partition{1}, Partition{1}), F2);
    CHECK(cyclic_space(p1.x, std::vector<int>{0, 0}).dim() == 0);
    CHECK(cyclic_space(p1.x, p1.v).dim() == 1);
    auto [p2, f2] = representative(Bipartition(Partition{2}, Partition{}), F2);
    CHECK(cyclic_space(p2.x, p2.v).dim() == 2);
}

TEST_CASE("identify_orbit: zero vector lands in the nu-only orbit") {
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 0; n <= 4; ++n)
            for (const auto& lambda : enumerate_partitions(n)) {
                MatFF x = representative(Bipartition(Partition{}, lambda), F).first.x;
                CHECK(identify_orbit(EnhancedPoint{F, std::vector<int>(n, 0), x}) ==
                      Bipartition(Partition{}, lambda));
            }
    }
}

TEST_CASE("representatives are the same 0/1 data over every field") {
    std::vector<Fq> fields{Fq::prime(2), Fq::prime(3), Fq::prime(17), Fq::of_order(4)};
    for (int n = 0; n <= 4; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            auto [base, frame] = representative(b, fields[0]);
            for (std::size_t f = 1; f < fields.size(); ++f) {
                auto [pt, fr] = representative(b, fields[f]);
                CHECK(pt.x.a == base.x.a);
                CHECK(pt.v == base.v);
                CHECK(identify_orbit(pt) == b);
            }
        }
}

TEST_CASE("identify_orbit round-trips on all bipartitions up to n = 6") {
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 0; n <= 6; ++n)
            for (const auto& b : enumerate_bipartitions(n)) {
                auto [pt, frame] = representative(b, F);
                CHECK(identify_orbit(pt) == b);
            }
    }
}

TEST_CASE("identify_orbit round-trips further out, n = 7 and 8") {
    Fq F2 = Fq::prime(2);
    for (int n = 7; n <= 8; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            CHECK(identify_orbit(representative(b, F2).first) == b);
}

TEST_CASE("identify_orbit matches the hand classification of F_2^2 x N") {
    // For n = 2 the orbit of (v, x) is determined by rank x and whether v is
    // zero, in ker x, or outside: a complete independent description.
    Fq F2 = Fq::prime(2);
    long long seen = 0;
    for (int bits = 0; bits < 16; ++bits) {
        MatFF x(F2, 2, 2);
        x.a = {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
        if (!is_nilpotent(x)) continue;
        for (int vb = 0; vb < 4; ++vb) {
            std::vector<int> v{vb & 1, (vb >> 1) & 1};
            bool v_zero = vb == 0;
            Bipartition expected = [&] {
                if (x.is_zero())
                    return v_zero ? Bipartition(Partition{}, Partition{1, 1})
                                  : Bipartition(Partition{1, 1}, Partition{});
                if (v_zero) return Bipartition(Partition{}, Partition{2});
                if (kernel(x).contains_vector(v)) return Bipartition(Partition{1}, Partition{1});
                return Bipartition(Partition{2}, Partition{});
            }();
            CHECK(identify_orbit(EnhancedPoint{F2, v, x}) == expected);
            ++seen;
        }
    }
    CHECK(seen == 16);  // |V x N| = q^(n^2)
}

TEST_CASE("conjugation and scaling invariance of the classifier") {
    std::mt19937_64 rng(2024);
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 1; n <= 4; ++n)
            for (const auto& b : enumerate_bipartitions(n)) {
                auto [pt, frame] = representative(b, F);
                for (int t = 0; t < 20; ++t) {
                    MatFF g = random_gl(F, n, rng);
                    EnhancedPoint moved{F, g.apply(pt.v), g * pt.x * inverse(g)};
                    CHECK(identify_orbit(moved) == b);
                }
                for (int t = 1; t < q; ++t) {
                    std::vector<int> tv = pt.v;
                    for (int& c : tv) c = F.mul(c, t);
                    CHECK(identify_orbit(EnhancedPoint{F, tv, pt.x.scaled(t)}) == b);
                }
            }
    }
}

TEST_CASE("nilpotent counting: brute force vs the centralizer-order formula") {
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 1; n <= 3; ++n) {
            if (n == 3 && q == 3) continue;  // brute scan 3^9 is fine, keep runtime low anyway
            long long brute = 0;
            MatFF x(F, n, n);
            while (true) {
                if (is_nilpotent(x)) ++brute;
                std::size_t i = 0;
                for (; i < x.a.size(); ++i) {
                    if (++x.a[i] < q) break;
                    x.a[i] = 0;
                }
                if (i == x.a.size()) break;
            }
            CHECK(Int(brute) == ipow(q, static_cast<long long>(n) * n - n));
        }
        for (int n = 1; n <= 5; ++n) {
            Int by_classes = 0;
            for (const auto& lambda : enumerate_partitions(n))
                by_classes += gl_order(n, q) / nilpotent_centralizer_order(lambda, q);
            CHECK(by_classes == ipow(q, static_cast<long long>(n) * n - n));
        }
    }
}

TEST_CASE("census n=2 q=2 exact orbit sizes") {
    OrbitCensus c = classify_all(2, Fq::prime(2));
    CHECK(c.total() == 16);
    CHECK(c.count_of(Bipartition(Partition{2}, Partition{})) == 6);
    CHECK(c.count_of(Bipartition(Partition{1}, Partition{1})) == 3);
    CHECK(c.count_of(Bipartition(Partition{1, 1}, Partition{})) == 3);
    CHECK(c.count_of(Bipartition(Partition{}, Partition{2})) == 3);
    CHECK(c.count_of(Bipartition(Partition{}, Partition{1, 1})) == 1);
}

TEST_CASE("census totals and the open orbit dominates") {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            OrbitCensus c = classify_all(n, Fq::prime(q));
            CHECK(Int(c.total()) == ipow(q, static_cast<long long>(n) * n));
            long long open = c.count_of(Bipartition(Partition{n}, Partition{}));
            for (const auto& [b, count] : c.counts)
                if (b != Bipartition(Partition{n}, Partition{})) CHECK(open >= count);
        }
    }
}

TEST_CASE("census paths agree") {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 2; ++n) {
            CensusConfig brute, byclass;
            brute.mode = CensusMode::Brute;
            byclass.mode = CensusMode::ByClass;
            OrbitCensus a = classify_all(n, Fq::prime(q), brute);
            OrbitCensus b = classify_all(n, Fq::prime(q), byclass);
            CHECK(a.counts == b.counts);
        }
    }
    CensusConfig brute, byclass;
    brute.mode = CensusMode::Brute;
    byclass.mode = CensusMode::ByClass;
    CHECK(classify_all(3, Fq::prime(2), brute).counts ==
          classify_all(3, Fq::prime(2), byclass).counts);
}

TEST_CASE("census respects the work budget") {
    CensusConfig tight;
    tight.budget = 10;
    CHECK_THROWS_AS(classify_all(3, Fq::prime(5), tight), budget_exceeded);
}

TEST_CASE("orbit dimension examples") {
    CHECK(orbit_dimension(Bipartition(Partition{}, Partition{1, 1})) == 0);
    CHECK(orbit_dimension(Bipartition(Partition{2}, Partition{})) == 4);
    CHECK(orbit_dimension(Bipartition(Partition{1}, Partition{1})) == 3);
}

TEST_CASE("census size as a function of q has degree orbit_dimension") {
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_bipartitions(n);
        int max_dim = 0;
        for (const auto& b : all) max_dim = std::max(max_dim, orbit_dimension(b));
        std::vector<int> primes;
        int p = 1;
        while (static_cast<int>(primes.size()) < max_dim + 2) primes.push_back(p = next_prime(p));
        std::vector<OrbitCensus> censuses;
        for (int q : primes) censuses.push_back(classify_all(n, Fq::prime(q)));
        for (const auto& b : all) {
            int d = orbit_dimension(b);
            std::vector<std::pair<int, Int>> pts;
            for (int i = 0; i <= d; ++i)
                pts.emplace_back(primes[i], Int(censuses[i].count_of(b)));
            Poly fitted = interpolate(pts);
            CHECK(fitted.degree() == d);
            // One held-out prime confirms the fit really is this polynomial.
            CHECK(fitted.eval(primes[d + 1]) == Int(censuses[d + 1].count_of(b)));
        }
    }
}
