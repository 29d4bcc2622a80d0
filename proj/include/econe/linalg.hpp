#pragma once
// Exact linear algebra over Fq: row-major matrices, canonical reduced
// row-echelon subspace bases, kernels, preimages, and enumeration of the
// subspaces lying between two nested ones.

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "econe/bigint.hpp"
#include "econe/errors.hpp"
#include "econe/field.hpp"

namespace econe {

struct MatFF {
    Fq F;
    int rows = 0, cols = 0;
    std::vector<int> a;  // row-major, entries in [0, q)

    MatFF(Fq f, int r, int c) : F(std::move(f)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {
        if (r < 0 || c < 0) throw bad_argument("matrix dimensions must be nonnegative");
    }

    static MatFF identity(const Fq& f, int n) {
        MatFF m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (int v : a)
            if (v) return false;
        return true;
    }

    std::vector<int> row(int r) const {
        return std::vector<int>(a.begin() + static_cast<std::size_t>(r) * cols,
                                a.begin() + static_cast<std::size_t>(r + 1) * cols);
    }

    MatFF operator*(const MatFF& o) const {
        if (F != o.F || cols != o.rows) throw bad_argument("matrix product shape mismatch");
        MatFF out(F, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                int v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols; ++j)
                    out.at(i, j) = F.add(out.at(i, j), F.mul(v, o.at(k, j)));
            }
        return out;
    }

    std::vector<int> apply(const std::vector<int>& v) const {
        if (static_cast<int>(v.size()) != cols) throw bad_argument("matrix-vector shape mismatch");
        std::vector<int> out(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) && v[j]) out[i] = F.add(out[i], F.mul(at(i, j), v[j]));
        return out;
    }

    MatFF transposed() const {
        MatFF out(F, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    MatFF pow(int e) const {
        if (rows != cols) throw bad_argument("pow of non-square matrix");
        MatFF r = identity(F, rows);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    MatFF scaled(int t) const {
        MatFF out(F, rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = F.mul(a[i], t);
        return out;
    }

    bool operator==(const MatFF& o) const {
        return F == o.F && rows == o.rows && cols == o.cols && a == o.a;
    }
};

/// Subspace of F^n held in canonical reduced row-echelon form: rows nonzero
/// with leading 1s, pivot columns strictly increasing and zero elsewhere.
/// Two values represent the same subspace iff they compare equal.
class Subspace {
public:
    Subspace(Fq f, int ambient) : F_(std::move(f)), ambient_(ambient) {
        if (ambient < 0) throw bad_argument("ambient dimension must be nonnegative");
    }

    static Subspace full(const Fq& f, int n) {
        Subspace s(f, n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            s.insert_row(std::move(e));
        }
        return s;
    }

    static Subspace from_rows(const Fq& f, int ambient, const std::vector<std::vector<int>>& rows) {
        Subspace s(f, ambient);
        for (const auto& r : rows) s.insert_row(r);
        return s;
    }

    const Fq& field() const { return F_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after elimination by the basis; zero iff v is in the span.
    std::vector<int> reduce(std::vector<int> v) const {
        if (static_cast<int>(v.size()) != ambient_) throw bad_argument("reduce: ambient mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            int c = v[pivots_[i]];
            if (c == 0) continue;
            for (int j = 0; j < ambient_; ++j)
                v[j] = F_.sub(v[j], F_.mul(c, rows_[i][j]));
        }
        return v;
    }

    bool contains_vector(const std::vector<int>& v) const {
        auto r = reduce(v);
        for (int x : r)
            if (x) return false;
        return true;
    }

    bool contains(const Subspace& w) const {
        if (F_ != w.F_ || ambient_ != w.ambient_) throw bad_argument("contains: space mismatch");
        for (const auto& r : w.rows_)
            if (!contains_vector(r)) return false;
        return true;
    }

    Subspace sum(const Subspace& w) const {
        if (F_ != w.F_ || ambient_ != w.ambient_) throw bad_argument("sum: space mismatch");
        Subspace s = *this;
        for (const auto& r : w.rows_) s.insert_row(r);
        return s;
    }

    Subspace sum_with_vector(const std::vector<int>& v) const {
        Subspace s = *this;
        s.insert_row(v);
        return s;
    }

    /// Adds one row, keeping canonical form.
    void insert_row(std::vector<int> v) {
        v = reduce(std::move(v));
        int lead = -1;
        for (int j = 0; j < ambient_; ++j)
            if (v[j]) {
                lead = j;
                break;
            }
        if (lead < 0) return;
        int c = F_.inv(v[lead]);
        for (int j = 0; j < ambient_; ++j) v[j] = F_.mul(v[j], c);
        // Back-eliminate the new pivot from existing rows.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            int x = rows_[i][lead];
            if (!x) continue;
            for (int j = 0; j < ambient_; ++j)
                rows_[i][j] = F_.sub(rows_[i][j], F_.mul(x, v[j]));
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, lead);
        rows_.insert(rows_.begin() + pos, std::move(v));
    }

    bool operator==(const Subspace& o) const {
        return F_ == o.F_ && ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    Fq F_;
    int ambient_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

/// Canonical echelon basis of the row space.
inline Subspace rref(const MatFF& m) {
    Subspace s(m.F, m.cols);
    for (int i = 0; i < m.rows; ++i) s.insert_row(m.row(i));
    return s;
}

inline int rank(const MatFF& m) { return rref(m).dim(); }

/// Basis of {w : m w = 0}.
inline Subspace kernel(const MatFF& m) {
    Subspace r = rref(m);
    const auto& piv = r.pivots();
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::vector<int>> rows;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> w(m.cols, 0);
        w[c] = 1;
        for (int i = 0; i < r.dim(); ++i) w[piv[i]] = m.F.neg(r.rows()[i][c]);
        rows.push_back(std::move(w));
    }
    return Subspace::from_rows(m.F, m.cols, rows);
}

/// Column space, as a subspace of the target F^rows.
inline Subspace image(const MatFF& m) { return rref(m.transposed()); }

/// {w : m w in W}; contains kernel(m).
inline Subspace preimage(const MatFF& m, const Subspace& W) {
    if (W.ambient() != m.rows || W.field() != m.F)
        throw bad_argument("preimage: subspace does not live in the target of the map");
    int t = m.rows - W.dim();
    if (t == 0) return Subspace::full(m.F, m.cols);
    // Quotient projection: coordinates of reduce_W at the non-pivot positions.
    std::vector<int> nonpiv;
    {
        std::vector<bool> is_pivot(m.rows, false);
        for (int p : W.pivots()) is_pivot[p] = true;
        for (int i = 0; i < m.rows; ++i)
            if (!is_pivot[i]) nonpiv.push_back(i);
    }
    MatFF qm(m.F, t, m.cols);
    for (int c = 0; c < m.cols; ++c) {
        std::vector<int> col(m.rows);
        for (int i = 0; i < m.rows; ++i) col[i] = m.at(i, c);
        auto red = W.reduce(std::move(col));
        for (int i = 0; i < t; ++i) qm.at(i, c) = red[nonpiv[i]];
    }
    return kernel(qm);
}

/// Number of k-dimensional subspaces of F_q^n.
inline Int gaussian_binomial(int n, int k, int q) {
    if (q < 2) throw bad_argument("gaussian_binomial: q must be at least 2");
    if (k < 0 || k > n) throw bad_argument("gaussian_binomial: k out of range");
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= ipow(q, n - k + i) - 1;
        r /= ipow(q, i) - 1;  // exact: the partial product is a Gaussian binomial
    }
    return r;
}

/// Visits every subspace W with A <= W <= B and dim W = d, exactly once, in
/// a deterministic order. Works in the quotient B/A: complement rows of A in
/// B give coordinates, and canonical echelon matrices of the quotient are
/// enumerated pivot-set by pivot-set.
template <class Visit>
void enumerate_between(const Subspace& A, const Subspace& B, int d, Visit&& visit) {
    if (A.field() != B.field() || A.ambient() != B.ambient())
        throw bad_argument("enumerate_between: ambient mismatch");
    if (!B.contains(A)) throw bad_argument("enumerate_between: A is not contained in B");
    if (d < A.dim() || d > B.dim()) throw bad_argument("enumerate_between: infeasible dimension");
    const Fq& F = A.field();
    const int q = F.q();
    const int m = B.dim() - A.dim();
    const int r = d - A.dim();
    if (r == 0) {
        visit(A);
        return;
    }
    // Complement basis of A inside B.
    std::vector<std::vector<int>> comp;
    {
        Subspace c(F, A.ambient());
        for (const auto& row : B.rows()) {
            auto red = A.reduce(row);
            c.insert_row(std::move(red));
        }
        comp = c.rows();
    }
    // Pivot subsets of {0..m-1} of size r, lexicographic.
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(m, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<std::pair<int, int>> free_pos;  // (row, quotient column)
        for (int t = 0; t < r; ++t)
            for (int c = piv[t] + 1; c < m; ++c)
                if (!is_piv[c]) free_pos.emplace_back(t, c);
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<int>> qrows(r, std::vector<int>(m, 0));
            for (int t = 0; t < r; ++t) qrows[t][piv[t]] = 1;
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                qrows[free_pos[i].first][free_pos[i].second] = vals[i];
            Subspace W = A;
            for (int t = 0; t < r; ++t) {
                std::vector<int> lifted(A.ambient(), 0);
                for (int c = 0; c < m; ++c) {
                    if (!qrows[t][c]) continue;
                    for (int j = 0; j < A.ambient(); ++j)
                        lifted[j] = F.add(lifted[j], F.mul(qrows[t][c], comp[c][j]));
                }
                W.insert_row(std::move(lifted));
            }
            visit(std::as_const(W));
            // Odometer over the free entries.
            std::size_t i = 0;
            for (; i < vals.size(); ++i) {
                if (++vals[i] < q) break;
                vals[i] = 0;
            }
            if (i == vals.size()) break;
        }
        // Next pivot combination.
        int i = r - 1;
        while (i >= 0 && piv[i] == m - r + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
}

/// Materialized variant for small cases.
inline std::vector<Subspace> subspaces_between(const Subspace& A, const Subspace& B, int d) {
    std::vector<Subspace> out;
    enumerate_between(A, B, d, [&](const Subspace& w) { out.push_back(w); });
    return out;
}

inline MatFF inverse(const MatFF& m) {
    if (m.rows != m.cols) throw bad_argument("inverse of non-square matrix");
    int n = m.rows;
    MatFF work = m, inv = MatFF::identity(m.F, n);
    const Fq& F = m.F;
    for (int col = 0, row = 0; col < n; ++col, ++row) {
        int piv = -1;
        for (int r2 = row; r2 < n; ++r2)
            if (work.at(r2, col)) {
                piv = r2;
                break;
            }
        if (piv < 0) throw bad_argument("matrix is singular");
        for (int j = 0; j < n; ++j) {
            std::swap(work.at(row, j), work.at(piv, j));
            std::swap(inv.at(row, j), inv.at(piv, j));
        }
        int c = F.inv(work.at(row, col));
        for (int j = 0; j < n; ++j) {
            work.at(row, j) = F.mul(work.at(row, j), c);
            inv.at(row, j) = F.mul(inv.at(row, j), c);
        }
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == row) continue;
            int x = work.at(r2, col);
            if (!x) continue;
            for (int j = 0; j < n; ++j) {
                work.at(r2, j) = F.sub(work.at(r2, j), F.mul(x, work.at(row, j)));
                inv.at(r2, j) = F.sub(inv.at(r2, j), F.mul(x, inv.at(row, j)));
            }
        }
    }
    return inv;
}

/// Uniform-ish random invertible matrix from a seeded generator.
inline MatFF random_gl(const Fq& F, int n, std::mt19937_64& rng) {
    while (true) {
        MatFF g(F, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = static_cast<int>(rng() % F.q());
        if (n == 0 || rank(g) == n) return g;
    }
}

}  // namespace econe
