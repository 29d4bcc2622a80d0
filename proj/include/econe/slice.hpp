#pragma once
// Exact certification of the slice data at a normal-frame representative:
// the centralizer basis y, the dual basis z spanning U, the trace pairing,
// the complements T and E^x v, transversality of T + U against the orbit
// tangent space, and the positivity of the contracting one-parameter
// subgroup's weights. Everything is integer arithmetic; ranks are taken
// over the rationals by fraction-free elimination.

#include <string>
#include <vector>

#include "econe/bigint.hpp"
#include "econe/cone.hpp"
#include "econe/errors.hpp"
#include "econe/partition.hpp"

namespace econe {

/// Dense integer matrix; entries stay tiny (products of 0/1 matrices).
struct MatZ {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    MatZ(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static MatZ identity(int n) {
        MatZ m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    MatZ operator*(const MatZ& o) const {
        if (cols != o.rows) throw bad_argument("MatZ product shape mismatch");
        MatZ out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                long long v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }

    MatZ operator-(const MatZ& o) const {
        if (rows != o.rows || cols != o.cols) throw bad_argument("MatZ difference shape mismatch");
        MatZ out(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - o.a[i];
        return out;
    }

    long long trace() const {
        long long t = 0;
        for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (long long v : a)
            if (v) return false;
        return true;
    }

    std::vector<long long> apply(const std::vector<long long>& v) const {
        std::vector<long long> out(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    bool operator==(const MatZ& o) const = default;
};

/// Rank over Q by single-step Bareiss elimination (exact divisions).
inline int rank_over_q(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rk], m[piv]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rk][col] * m[r][c] - m[r][col] * m[rk][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rk][col];
        ++rk;
    }
    return rk;
}

inline int rank_over_q_ll(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<Int>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return rank_over_q(std::move(big));
}

/// x of Jordan type lambda as a 0/1 integer matrix in the normal frame.
inline MatZ nilpotent_matrix_z(const NormalFrame& frame) {
    int n = frame.total();
    MatZ x(n, n);
    for (int i = 1; i <= frame.lambda.length(); ++i)
        for (int j = 2; j <= frame.lambda.part(i - 1); ++j)
            x.at(frame.index(i, j - 1), frame.index(i, j)) = 1;
    return x;
}

struct CentralizerElement {
    int i1 = 0, i2 = 0, s = 0;  // 1-based rows, shift s
    MatZ m{0, 0};
};

struct CentralizerBasis {
    Partition lambda;
    std::vector<CentralizerElement> elements;
};

/// Basis {y_{i1,i2,s}} of the commutant of x, acting by
/// y v_{i1,j} = v_{i2,j-s} for s+1 <= j <= lambda_{i1}, zero elsewhere;
/// the shift range is max(0, lambda_{i1}-lambda_{i2}) <= s <= lambda_{i1}-1.
inline CentralizerBasis centralizer_basis(const Partition& lambda) {
    if (lambda.size() < 1) throw bad_argument("centralizer_basis: lambda must be nonempty");
    NormalFrame frame{lambda};
    int n = frame.total();
    CentralizerBasis out{lambda, {}};
    int len = lambda.length();
    for (int i1 = 1; i1 <= len; ++i1)
        for (int i2 = 1; i2 <= len; ++i2) {
            int l1 = lambda.part(i1 - 1), l2 = lambda.part(i2 - 1);
            for (int s = std::max(0, l1 - l2); s <= l1 - 1; ++s) {
                MatZ y(n, n);
                for (int j = s + 1; j <= l1; ++j)
                    y.at(frame.index(i2, j - s), frame.index(i1, j)) = 1;
                out.elements.push_back({i1, i2, s, std::move(y)});
            }
        }
    return out;
}

/// Dual family {z_{i1,i2,s}} spanning U: z v_{i2,1} = v_{i1,s+1}, zero on all
/// other frame vectors. Same index set as the centralizer basis of lambda.
inline std::vector<CentralizerElement> u_basis(const Partition& rho, const Partition& sigma) {
    Partition lambda = add(rho, sigma);
    if (lambda.size() < 1) throw bad_argument("u_basis: rho + sigma must be nonempty");
    NormalFrame frame{lambda};
    int n = frame.total();
    std::vector<CentralizerElement> out;
    int len = lambda.length();
    for (int i1 = 1; i1 <= len; ++i1)
        for (int i2 = 1; i2 <= len; ++i2) {
            int l1 = lambda.part(i1 - 1), l2 = lambda.part(i2 - 1);
            for (int s = std::max(0, l1 - l2); s <= l1 - 1; ++s) {
                MatZ z(n, n);
                z.at(frame.index(i1, s + 1), frame.index(i2, 1)) = 1;
                out.push_back({i1, i2, s, std::move(z)});
            }
        }
    return out;
}

/// Matrix of tr(y z') over the integers; the pairing is perfect, so the
/// result must be the identity (checked by callers and tests).
inline MatZ trace_pairing(const CentralizerBasis& ys, const std::vector<CentralizerElement>& zs) {
    if (ys.elements.size() != zs.size()) throw bad_argument("trace_pairing: index sets differ");
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const auto& y = ys.elements[i];
        const auto& z = zs[i];
        if (y.i1 != z.i1 || y.i2 != z.i2 || y.s != z.s)
            throw bad_argument("trace_pairing: index sets are ordered differently");
    }
    int d = static_cast<int>(zs.size());
    MatZ out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = (ys.elements[i].m * zs[j].m).trace();
    return out;
}

/// Slice data at the representative of b = (rho; sigma): T is spanned by the
/// frame coordinates (i, j) with i <= len(sigma), rho_i+1 <= j <= rho_i+sigma_i;
/// U is the span of the z family; phi'(t) v_{ij} = t^(j - rho_i - 1) v_{ij},
/// and the ambient F^x scaling contributes one more unit of weight.
struct SliceData {
    Partition rho, sigma;
    NormalFrame frame;
    std::vector<std::pair<int, int>> t_coords;          // (i, j), 1-based
    std::vector<CentralizerElement> u_elements;
    std::vector<int> phi_vector_weights;                // j - rho_i - 1 per coordinate
    std::vector<long long> phi_total_weights_on_u;      // rho_{i2} - rho_{i1} + s + 1
};

inline SliceData build_slice_data(const Bipartition& b) {
    if (b.n() < 1) throw bad_argument("build_slice_data: n must be at least 1");
    const Partition& rho = b.mu();
    const Partition& sigma = b.nu();
    SliceData data{rho, sigma, NormalFrame{add(rho, sigma)}, {}, {}, {}, {}};
    for (int i = 1; i <= sigma.length(); ++i)
        for (int j = rho.part(i - 1) + 1; j <= rho.part(i - 1) + sigma.part(i - 1); ++j)
            data.t_coords.emplace_back(i, j);
    data.u_elements = u_basis(rho, sigma);
    data.phi_vector_weights.resize(data.frame.total());
    for (int idx = 0; idx < data.frame.total(); ++idx) {
        auto [i, j] = data.frame.label(idx);
        data.phi_vector_weights[idx] = j - rho.part(i - 1) - 1;
    }
    for (const auto& z : data.u_elements)
        data.phi_total_weights_on_u.push_back(rho.part(z.i2 - 1) - rho.part(z.i1 - 1) + z.s + 1);
    return data;
}

struct RankCheck {
    std::string name;
    long long expected = 0, actual = 0;

    bool pass() const { return expected == actual; }
};

struct SliceCertificate {
    Bipartition b;
    int n = 0;
    int dim_t = 0, dim_u = 0, dim_exv = 0, dim_tangent = 0;
    std::vector<RankCheck> checks;
    bool pass = false;
};

/// Certifies (a) T + E^x v = V with dim T + dim E^x v = n, and (b) in
/// V + gl(V) the rows of T + U together with the tangent directions
/// {(E v, [E, x])} over all elementary matrices E span everything, with
/// dimensions adding up. All ranks over the rationals.
inline SliceCertificate verify_transversality(const Bipartition& b) {
    if (b.n() < 1) throw bad_argument("verify_transversality: n must be at least 1");
    SliceData data = build_slice_data(b);
    const int n = b.n();
    MatZ x = nilpotent_matrix_z(data.frame);
    std::vector<long long> v(n, 0);
    for (int i = 1; i <= data.rho.length(); ++i)
        if (data.rho.part(i - 1) >= 1) v[data.frame.index(i, data.rho.part(i - 1))] = 1;

    SliceCertificate cert;
    cert.b = b;
    cert.n = n;
    cert.dim_t = static_cast<int>(data.t_coords.size());
    cert.dim_u = static_cast<int>(data.u_elements.size());

    CentralizerBasis ys = centralizer_basis(data.frame.lambda);

    // (a) T complementary to E^x v inside V.
    std::vector<std::vector<long long>> exv_rows;
    for (const auto& y : ys.elements) exv_rows.push_back(y.m.apply(v));
    cert.dim_exv = rank_over_q_ll(exv_rows);
    std::vector<std::vector<long long>> a_rows = exv_rows;
    for (auto [i, j] : data.t_coords) {
        std::vector<long long> e(n, 0);
        e[data.frame.index(i, j)] = 1;
        a_rows.push_back(std::move(e));
    }
    cert.checks.push_back({"dim_T_plus_dim_Exv", n, cert.dim_t + cert.dim_exv});
    cert.checks.push_back({"rank_T_plus_Exv", n, rank_over_q_ll(a_rows)});

    // (b) T + U complementary to the orbit tangent space inside V + gl(V).
    const int total = n + n * n;
    std::vector<std::vector<long long>> tangent_rows;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::vector<long long> row(total, 0);
            row[r] = v[c];  // (E_{rc}) v
            // [E_{rc}, x] = E_{rc} x - x E_{rc}
            for (int j = 0; j < n; ++j) row[n + r * n + j] += x.at(c, j);
            for (int i = 0; i < n; ++i) row[n + i * n + c] -= x.at(i, r);
            tangent_rows.push_back(std::move(row));
        }
    cert.dim_tangent = rank_over_q_ll(tangent_rows);

    std::vector<std::vector<long long>> slice_rows;
    for (auto [i, j] : data.t_coords) {
        std::vector<long long> row(total, 0);
        row[data.frame.index(i, j)] = 1;
        slice_rows.push_back(std::move(row));
    }
    for (const auto& z : data.u_elements) {
        std::vector<long long> row(total, 0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) row[n + r * n + c] = z.m.at(r, c);
        slice_rows.push_back(std::move(row));
    }
    cert.checks.push_back(
        {"rank_slice", cert.dim_t + cert.dim_u, rank_over_q_ll(slice_rows)});
    cert.checks.push_back(
        {"dim_slice_plus_dim_tangent", total, cert.dim_t + cert.dim_u + cert.dim_tangent});
    std::vector<std::vector<long long>> all_rows = slice_rows;
    for (auto& r : tangent_rows) all_rows.push_back(std::move(r));
    cert.checks.push_back({"rank_slice_plus_tangent", total, rank_over_q_ll(all_rows)});

    cert.pass = true;
    for (const auto& c : cert.checks) cert.pass = cert.pass && c.pass();
    return cert;
}

struct ContractionCertificate {
    Bipartition b;
    bool v_fixed = false, x_fixed = false;
    std::vector<int> t_weights;          // combined weight j - rho_i per T coordinate
    std::vector<long long> u_weights;    // rho_{i2} - rho_{i1} + s + 1 per U element
    bool t_weights_positive = false, u_weights_positive = false;
    bool pass = false;
};

/// Certifies the combined (phi'(t), t) action: weight 0 on every coordinate
/// of v and on every nonzero entry of x (fixed points), and weight >= 1 on
/// every T coordinate and every U element. Weights are exact integers; no
/// field element is ever substituted for t.
inline ContractionCertificate verify_contraction(const Bipartition& b) {
    if (b.n() < 1) throw bad_argument("verify_contraction: n must be at least 1");
    SliceData data = build_slice_data(b);
    ContractionCertificate cert;
    cert.b = b;

    const auto& w = data.phi_vector_weights;
    cert.v_fixed = true;
    for (int i = 1; i <= data.rho.length(); ++i)
        if (data.rho.part(i - 1) >= 1)
            cert.v_fixed =
                cert.v_fixed && (w[data.frame.index(i, data.rho.part(i - 1))] + 1 == 0);

    // Conjugation shifts an entry (r, c) by w_r - w_c; scaling adds 1.
    MatZ x = nilpotent_matrix_z(data.frame);
    cert.x_fixed = true;
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c)
            if (x.at(r, c) != 0) cert.x_fixed = cert.x_fixed && (w[r] - w[c] + 1 == 0);

    cert.t_weights_positive = true;
    for (auto [i, j] : data.t_coords) {
        int weight = w[data.frame.index(i, j)] + 1;  // = j - rho_i
        cert.t_weights.push_back(weight);
        cert.t_weights_positive = cert.t_weights_positive && weight >= 1;
    }

    cert.u_weights = data.phi_total_weights_on_u;
    cert.u_weights_positive = true;
    for (long long weight : cert.u_weights)
        cert.u_weights_positive = cert.u_weights_positive && weight >= 1;

    cert.pass = cert.v_fixed && cert.x_fixed && cert.t_weights_positive && cert.u_weights_positive;
    return cert;
}

}  // namespace econe
