#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "econe/resolution.hpp"
#include "econe/suites.hpp"

using namespace econe;

namespace {

Bipartition bp(std::initializer_list<int> mu, std::initializer_list<int> nu) {
    return Bipartition(Partition(std::vector<int>(mu)), Partition(std::vector<int>(nu)));
}

// Independent oracle for n = 2: enumerate every (v, x, flag) over F_q and
// test the incidence conditions directly from the definitions. The flag is a
// line when dims = (0,1,2) and trivial when dims = (0,2).
long long total_space_oracle_n2(const Bipartition& b, int q) {
    Fq F = Fq::prime(q);
    ResolutionDatum d = resolution_datum(b);
    std::vector<Subspace> chains_middle;
    if (d.L() == 2)
        chains_middle = subspaces_between(Subspace(F, 2), Subspace::full(F, 2), 1);
    else
        chains_middle.push_back(Subspace(F, 2));  // placeholder, unused when L = 1
    long long total = 0;
    MatFF x(F, 2, 2);
    while (true) {
        for (const Subspace& w1 : chains_middle) {
            bool x_ok = true;
            std::vector<int> e0{1, 0}, e1{0, 1};
            if (d.L() == 2) {
                // x W1 <= 0 and x V <= W1.
                for (const auto& row : w1.rows())
                    for (int c : x.apply(row)) x_ok = x_ok && c == 0;
                x_ok = x_ok && w1.contains_vector(x.apply(e0)) &&
                       w1.contains_vector(x.apply(e1));
            } else {
                x_ok = x.is_zero();  // x V <= W_0 = 0
            }
            if (!x_ok) continue;
            for (int vb = 0; vb < q * q; ++vb) {
                std::vector<int> v{vb % q, vb / q};
                bool v_ok = true;
                if (d.dims[d.v_step] == 0) v_ok = (vb == 0);
                if (d.dims[d.v_step] == 1) v_ok = w1.contains_vector(v);
                if (v_ok) ++total;
            }
        }
        std::size_t i = 0;
        for (; i < x.a.size(); ++i) {
            if (++x.a[i] < q) break;
            x.a[i] = 0;
        }
        if (i == x.a.size()) break;
    }
    return total;
}

}  // namespace

TEST_CASE("resolution datum examples") {
    ResolutionDatum d1 = resolution_datum(bp({1}, {1}));
    CHECK(d1.dims == std::vector<int>{0, 1, 2});
    CHECK(d1.v_step == 1);

    ResolutionDatum d2 = resolution_datum(bp({}, {1, 1}));
    CHECK(d2.dims == std::vector<int>{0, 2});
    CHECK(d2.v_step == 0);

    ResolutionDatum d3 = resolution_datum(bp({2}, {}));
    CHECK(d3.dims == std::vector<int>{0, 1, 2});
    CHECK(d3.v_step == 2);

    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            ResolutionDatum d = resolution_datum(b);
            CHECK(d.L() == b.mu().part(0) + b.nu().part(0));
            CHECK(d.dims[d.v_step] == b.mu().size());
        }
}

TEST_CASE("fibre counting examples") {
    Fq F2 = Fq::prime(2);
    ResolutionDatum d11 = resolution_datum(bp({1}, {1}));

    // Over the origin: every line works.
    auto [origin, frame0] = representative(bp({}, {1, 1}), F2);
    CHECK(fibre_points(d11, origin).count == 3);

    // Over its own representative the fibre is a single point, any field.
    for (int q : {2, 3, 5}) {
        Fq F = Fq::prime(q);
        auto [pt, frame] = representative(bp({1}, {1}), F);
        CHECK(fibre_points(d11, pt).count == 1);
    }

    ResolutionDatum d20 = resolution_datum(bp({2}, {}));
    auto [pt110, f110] = representative(bp({1, 1}, {}), F2);
    CHECK(fibre_points(d20, pt110).count == 3);

    // Frozen counts for the n = 2, q = 2 validation examples.
    std::vector<std::pair<Bipartition, long long>> expected_d20{
        {bp({2}, {}), 1}, {bp({1}, {1}), 1}, {bp({1, 1}, {}), 3},
        {bp({}, {2}), 1}, {bp({}, {1, 1}), 3}};
    for (const auto& [target, count] : expected_d20) {
        auto [pt, frame] = representative(target, F2);
        CHECK(fibre_points(d20, pt).count == count);
    }
    std::vector<std::pair<Bipartition, long long>> expected_d11{
        {bp({2}, {}), 0}, {bp({1}, {1}), 1}, {bp({1, 1}, {}), 1},
        {bp({}, {2}), 1}, {bp({}, {1, 1}), 3}};
    for (const auto& [target, count] : expected_d11) {
        auto [pt, frame] = representative(target, F2);
        CHECK(fibre_points(d11, pt).count == count);
    }
}

TEST_CASE("fibre counts are scaling invariant") {
    for (int q : {2, 3, 5}) {
        Fq F = Fq::prime(q);
        for (int n = 1; n <= 3; ++n)
            for (const auto& source : enumerate_bipartitions(n)) {
                ResolutionDatum d = resolution_datum(source);
                for (const auto& target : enumerate_bipartitions(n)) {
                    auto [pt, frame] = representative(target, F);
                    long long base = fibre_points(d, pt).count;
                    for (int t = 2; t < q; ++t) {
                        std::vector<int> tv = pt.v;
                        for (int& c : tv) c = F.mul(c, t);
                        EnhancedPoint scaled{F, std::move(tv), pt.x.scaled(t)};
                        CHECK(fibre_points(d, scaled).count == base);
                    }
                }
            }
    }
}

TEST_CASE("listed flags satisfy every incidence condition") {
    Fq F2 = Fq::prime(2);
    for (const auto& source : enumerate_bipartitions(3)) {
        ResolutionDatum d = resolution_datum(source);
        for (const auto& target : enumerate_bipartitions(3)) {
            auto [pt, frame] = representative(target, F2);
            FibreReport rep = fibre_points(d, pt, true);
            REQUIRE(rep.flags.has_value());
            CHECK(static_cast<long long>(rep.flags->size()) == rep.count);
            for (const auto& chain : *rep.flags) {
                REQUIRE(static_cast<int>(chain.size()) == d.L() + 1);
                for (int j = 0; j <= d.L(); ++j) {
                    CHECK(chain[j].dim() == d.dims[j]);
                    if (j > 0) {
                        CHECK(chain[j].contains(chain[j - 1]));
                        for (const auto& row : chain[j].rows())
                            CHECK(chain[j - 1].contains_vector(pt.x.apply(row)));
                    }
                }
                CHECK(chain[d.v_step].contains_vector(pt.v));
            }
            // Distinctness.
            for (std::size_t i = 0; i < rep.flags->size(); ++i)
                for (std::size_t j = i + 1; j < rep.flags->size(); ++j)
                    CHECK((*rep.flags)[i] != (*rep.flags)[j]);
        }
    }
}

TEST_CASE("total space count examples and oracle") {
    for (int q : {2, 3, 5})
        CHECK(total_space_count(resolution_datum(bp({}, {1, 1})), q) == 1);
    CHECK(total_space_count(resolution_datum(bp({2}, {})), 2) == 24);
    CHECK(total_space_count(resolution_datum(bp({1}, {1})), 2) == 12);

    for (int q : {2, 3})
        for (const auto& b : enumerate_bipartitions(2))
            CHECK(total_space_count(resolution_datum(b), q) == Int(total_space_oracle_n2(b, q)));
}

TEST_CASE("total space dimension equals orbit dimension") {
    CHECK(total_space_dimension(resolution_datum(bp({}, {1, 1}))) == 0);
    CHECK(total_space_dimension(resolution_datum(bp({2}, {}))) == 4);
    CHECK(total_space_dimension(resolution_datum(bp({1}, {1}))) == 3);
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            CHECK(total_space_dimension(resolution_datum(b)) == orbit_dimension(b));
}

TEST_CASE("node budget is enforced") {
    Fq F5 = Fq::prime(5);
    auto [pt, frame] = representative(bp({}, {1, 1, 1}), F5);
    ResolutionDatum d = resolution_datum(bp({3}, {}));  // full flags over the origin
    CHECK_THROWS_AS(fibre_points(d, pt, false, 3), budget_exceeded);
}

TEST_CASE("validate_resolution on small cases") {
    std::vector<Fq> fields{Fq::prime(2), Fq::prime(3)};

    ResolutionReport r20 = validate_resolution(bp({2}, {}), fields);
    CHECK(r20.pass);
    CHECK(r20.fields[0].stratified_sum == 24);
    CHECK(r20.fields[0].total_count == 24);

    ResolutionReport r11 = validate_resolution(bp({1}, {1}), fields);
    CHECK(r11.pass);
    CHECK(r11.fields[0].stratified_sum == 12);
    // Support of the fibre counts is exactly the closure lower set.
    std::set<std::string> support;
    for (const auto& [key, c] : r11.fields[0].fibre_counts)
        if (c > 0) support.insert(key);
    CHECK(support == std::set<std::string>{"1|1", "1,1|", "|2", "|1,1"});

    ResolutionReport r011 = validate_resolution(bp({}, {1, 1}), fields);
    CHECK(r011.pass);
    std::set<std::string> support011;
    for (const auto& [key, c] : r011.fields[0].fibre_counts)
        if (c > 0) support011.insert(key);
    CHECK(support011 == std::set<std::string>{"|1,1"});
}

TEST_CASE("validate_resolution passes for all bipartitions up to n = 3") {
    std::vector<Fq> fields{Fq::prime(2), Fq::prime(3)};
    for (int n = 1; n <= 3; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            CHECK(validate_resolution(b, fields).pass);
}

TEST_CASE("validate_resolution holds over a prime-power field") {
    std::vector<Fq> fields{Fq::of_order(4)};
    for (int n = 1; n <= 3; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            CHECK(validate_resolution(b, fields).pass);
}

TEST_CASE("a corrupted datum is caught by clause (b)") {
    std::vector<Fq> fields{Fq::prime(2)};
    Bipartition b = bp({1}, {1});
    ResolutionDatum corrupted = resolution_datum(b);
    corrupted.v_step = 2;  // vector constraint moved to the top of the flag
    ResolutionReport report = validate_resolution(b, fields, {}, &corrupted);
    CHECK_FALSE(report.pass);
    CHECK(report.fields[0].first_failure == "b");
}

TEST_CASE("suite-level fault injection localizes to clause (b)") {
    RunConfig cfg;
    cfg = cfg.clamped(2);
    OpCoverage ops;
    SuiteResult healthy = run_resolution_suite(cfg, ops);
    CHECK(healthy.pass);
    SuiteResult faulty = run_resolution_suite(cfg, ops, FaultInjection::SwapDatumVStep);
    CHECK_FALSE(faulty.pass);
    bool clause_b_seen = false;
    for (const auto& f : faulty.details["failures"])
        clause_b_seen = clause_b_seen || f["clause"] == "b";
    CHECK(clause_b_seen);
}
