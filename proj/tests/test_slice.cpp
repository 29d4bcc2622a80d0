#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "econe/slice.hpp"

using namespace econe;

namespace {

// Independent commutant dimension: kernel of y -> yx - xy as an n^2 x n^2
// integer system, rank over Q.
int commutant_dim_oracle(const Partition& lambda) {
    NormalFrame frame{lambda};
    int n = frame.total();
    MatZ x = nilpotent_matrix_z(frame);
    std::vector<std::vector<Int>> rows;  // one row per matrix position of [y, x]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Int> row(static_cast<std::size_t>(n) * n, 0);
            // [y, x]_{ij} = sum_k y_{ik} x_{kj} - x_{ik} y_{kj}
            for (int k = 0; k < n; ++k) {
                row[static_cast<std::size_t>(i) * n + k] += x.at(k, j);
                row[static_cast<std::size_t>(k) * n + j] -= x.at(i, k);
            }
            rows.push_back(std::move(row));
        }
    return n * n - rank_over_q(std::move(rows));
}

}  // namespace

TEST_CASE("bareiss rank over Q") {
    CHECK(rank_over_q({}) == 0);
    CHECK(rank_over_q({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
    CHECK(rank_over_q({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(rank_over_q({{Int(1), Int(2)}, {Int(3), Int(4)}}) == 2);
    CHECK(rank_over_q({{Int(2), Int(0), Int(1)},
                       {Int(0), Int(3), Int(0)},
                       {Int(2), Int(3), Int(1)}}) == 2);
}

TEST_CASE("centralizer basis for lambda = (2)") {
    CentralizerBasis ys = centralizer_basis(Partition{2});
    REQUIRE(ys.elements.size() == 2);
    CHECK(ys.elements[0].s == 0);
    CHECK(ys.elements[0].m == MatZ::identity(2));
    MatZ x = nilpotent_matrix_z(NormalFrame{Partition{2}});
    CHECK(ys.elements[1].m == x);
}

TEST_CASE("centralizer counts and commutation") {
    CHECK(centralizer_basis(Partition{2, 1}).elements.size() == 5);
    // x = 0 commutes with everything.
    CHECK(centralizer_basis(Partition{1, 1, 1}).elements.size() == 9);

    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CentralizerBasis ys = centralizer_basis(lambda);
            MatZ x = nilpotent_matrix_z(NormalFrame{lambda});
            long long expected = 0;
            for (int i = 0; i < lambda.length(); ++i)
                for (int j = 0; j < lambda.length(); ++j)
                    expected += std::min(lambda.part(i), lambda.part(j));
            CHECK(static_cast<long long>(ys.elements.size()) == expected);
            for (const auto& y : ys.elements) CHECK((y.m * x - x * y.m).is_zero());
        }
}

TEST_CASE("emitted centralizer elements span the full commutant") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CentralizerBasis ys = centralizer_basis(lambda);
            std::vector<std::vector<Int>> rows;
            for (const auto& y : ys.elements) {
                std::vector<Int> row;
                for (long long e : y.m.a) row.push_back(e);
                rows.push_back(std::move(row));
            }
            int span = rank_over_q(std::move(rows));
            CHECK(span == static_cast<int>(ys.elements.size()));
            CHECK(span == commutant_dim_oracle(lambda));
        }
}

TEST_CASE("u basis examples") {
    auto z1 = u_basis(Partition{1}, Partition{});
    REQUIRE(z1.size() == 1);
    CHECK(z1[0].m == MatZ::identity(1));

    auto z2 = u_basis(Partition{2}, Partition{});
    REQUIRE(z2.size() == 2);
    CHECK(z2[0].m.at(0, 0) == 1);  // z_{1,1,0}: v_{1,1} -> v_{1,1}
    CHECK(z2[1].m.at(1, 0) == 1);  // z_{1,1,1}: v_{1,1} -> v_{1,2}

    auto z21 = u_basis(Partition{2, 1}, Partition{});
    CHECK(z21.size() == 5);
    for (const auto& z : z21) {
        long long nonzero = 0;
        for (long long e : z.m.a) nonzero += (e != 0);
        CHECK(nonzero == 1);  // each z is a single elementary matrix
    }
}

TEST_CASE("trace pairing is the identity") {
    auto check_identity = [](const Partition& lambda) {
        CentralizerBasis ys = centralizer_basis(lambda);
        auto zs = u_basis(lambda, Partition{});
        MatZ tp = trace_pairing(ys, zs);
        CHECK(tp == MatZ::identity(static_cast<int>(zs.size())));
    };
    check_identity(Partition{2});
    check_identity(Partition{2, 1});
    Partition big{3, 2, 1};
    CentralizerBasis ys = centralizer_basis(big);
    CHECK(ys.elements.size() == 14);
    check_identity(big);
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) check_identity(lambda);
}

TEST_CASE("slice data shapes") {
    SliceData d = build_slice_data(Bipartition(Partition{1}, Partition{1}));
    CHECK(d.t_coords == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(d.u_elements.size() == 2);
    CHECK(d.phi_total_weights_on_u == std::vector<long long>{1, 2});
    CHECK(d.phi_vector_weights == std::vector<int>{-1, 0});

    for (int n = 1; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            SliceData data = build_slice_data(b);
            CHECK(static_cast<int>(data.t_coords.size()) == b.nu().size());
            long long min_sum = 0;
            Partition lambda = add(b.mu(), b.nu());
            for (int i = 0; i < lambda.length(); ++i)
                for (int j = 0; j < lambda.length(); ++j)
                    min_sum += std::min(lambda.part(i), lambda.part(j));
            CHECK(static_cast<long long>(data.u_elements.size()) == min_sum);
        }
}

TEST_CASE("transversality certificate examples") {
    SliceCertificate c1 = verify_transversality(Bipartition(Partition{}, Partition{1}));
    CHECK(c1.pass);
    CHECK(c1.dim_t == 1);
    CHECK(c1.dim_u == 1);
    CHECK(c1.dim_tangent == 0);

    SliceCertificate c2 = verify_transversality(Bipartition(Partition{1}, Partition{1}));
    CHECK(c2.pass);
    CHECK(c2.dim_t == 1);
    CHECK(c2.dim_u == 2);
    CHECK(c2.dim_tangent == 3);
}

TEST_CASE("contraction certificate examples") {
    ContractionCertificate c = verify_contraction(Bipartition(Partition{1}, Partition{1}));
    CHECK(c.pass);
    CHECK(c.u_weights == std::vector<long long>{1, 2});
    CHECK(c.t_weights == std::vector<int>{1});
}

TEST_CASE("all slices certify up to n = 6 and dimensions add up") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            SliceCertificate tc = verify_transversality(b);
            ContractionCertificate cc = verify_contraction(b);
            CHECK(tc.pass);
            CHECK(cc.pass);
            CHECK(tc.dim_t + tc.dim_u + orbit_dimension(b) == n * n + n);
        }
}
