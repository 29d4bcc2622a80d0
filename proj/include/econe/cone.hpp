#pragma once
// The enhanced cone V x N over F_q: normal-frame orbit representatives,
// Jordan types, the orbit classifier, orbit dimensions, and small-n censuses.

#include <map>
#include <utility>
#include <vector>

#include "econe/bigint.hpp"
#include "econe/errors.hpp"
#include "econe/linalg.hpp"
#include "econe/partition.hpp"

namespace econe {

/// Coordinate labeling (i, j) -> index for a basis adapted to a nilpotent of
/// Jordan type lambda: rows i = 1..len(lambda) outer, columns j = 1..lambda_i
/// inner. The order is the fixed serialization order.
struct NormalFrame {
    Partition lambda;

    int total() const { return lambda.size(); }

    int index(int i, int j) const {
        if (i < 1 || i > lambda.length() || j < 1 || j > lambda.part(i - 1))
            throw bad_argument("normal frame coordinate out of range");
        int off = 0;
        for (int r = 0; r < i - 1; ++r) off += lambda.part(r);
        return off + (j - 1);
    }

    std::pair<int, int> label(int idx) const {
        int i = 1;
        while (idx >= lambda.part(i - 1)) {
            idx -= lambda.part(i - 1);
            ++i;
        }
        return {i, idx + 1};
    }
};

struct EnhancedPoint {
    Fq F;
    std::vector<int> v;
    MatFF x;
};

/// Canonical point of the orbit labeled by b = (mu; nu): lambda = mu + nu,
/// x shifts each row's column index down by one, v = sum of v_{i, mu_i}.
/// x comes out as the same 0/1 matrix over every field.
inline std::pair<EnhancedPoint, NormalFrame> representative(const Bipartition& b, const Fq& F) {
    NormalFrame frame{add(b.mu(), b.nu())};
    int n = frame.total();
    MatFF x(F, n, n);
    for (int i = 1; i <= frame.lambda.length(); ++i)
        for (int j = 2; j <= frame.lambda.part(i - 1); ++j)
            x.at(frame.index(i, j - 1), frame.index(i, j)) = 1;
    std::vector<int> v(n, 0);
    for (int i = 1; i <= b.mu().length(); ++i)
        if (b.mu().part(i - 1) >= 1) v[frame.index(i, b.mu().part(i - 1))] = 1;
    return {EnhancedPoint{F, std::move(v), std::move(x)}, frame};
}

/// Jordan type of a nilpotent matrix from kernel dimensions of its powers:
/// the conjugate partition has parts dim ker x^j - dim ker x^{j-1}.
inline Partition jordan_type(const MatFF& x) {
    if (x.rows != x.cols) throw bad_argument("jordan_type: matrix must be square");
    int n = x.rows;
    std::vector<int> diffs;
    MatFF p = MatFF::identity(x.F, n);
    int prev = 0;
    for (int j = 1; j <= n && prev < n; ++j) {
        p = p * x;
        int kdim = n - rank(p);
        diffs.push_back(kdim - prev);
        prev = kdim;
    }
    if (prev != n) throw validation_error("jordan_type: matrix is not nilpotent");
    while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
    return transpose(Partition(std::move(diffs)));
}

inline bool is_nilpotent(const MatFF& x) {
    if (x.rows != x.cols) return false;
    return x.pow(x.rows).is_zero();
}

/// span{v, xv, x^2 v, ...}; x-stable, dimension at most lambda_1.
inline Subspace cyclic_space(const MatFF& x, const std::vector<int>& v) {
    Subspace s(x.F, x.cols);
    std::vector<int> w = v;
    for (int step = 0; step <= x.rows; ++step) {
        int before = s.dim();
        s.insert_row(w);
        if (s.dim() == before) break;
        w = x.apply(w);
    }
    return s;
}

/// Endomorphism induced by x on V/W in the non-pivot coordinates of W.
/// W must be x-stable.
inline MatFF quotient_endomorphism(const MatFF& x, const Subspace& W) {
    if (W.ambient() != x.rows || W.field() != x.F)
        throw bad_argument("quotient_endomorphism: ambient mismatch");
    std::vector<int> nonpiv;
    std::vector<bool> is_piv(x.rows, false);
    for (int p : W.pivots()) is_piv[p] = true;
    for (int i = 0; i < x.rows; ++i)
        if (!is_piv[i]) nonpiv.push_back(i);
    int m = static_cast<int>(nonpiv.size());
    MatFF out(x.F, m, m);
    for (int c = 0; c < m; ++c) {
        std::vector<int> e(x.rows, 0);
        e[nonpiv[c]] = 1;
        auto im = W.reduce(x.apply(e));
        for (int r = 0; r < m; ++r) out.at(r, c) = im[nonpiv[r]];
        for (int i = 0; i < x.rows; ++i)
            if (is_piv[i] && im[i]) throw bad_argument("quotient_endomorphism: W is not x-stable");
    }
    return out;
}

/// The unique (mu; nu) whose orbit contains the point. Recursion: with
/// lambda the type of x, W the cyclic space of v and kappa the type induced
/// on V/W, mu_i = sum_{j >= i} (lambda_j - kappa_j) and nu = lambda - mu.
/// The consistency checks must never fail on actual points of the cone.
inline Bipartition identify_orbit(const EnhancedPoint& pt) {
    Partition lambda = jordan_type(pt.x);
    Subspace W = cyclic_space(pt.x, pt.v);
    Partition kappa = jordan_type(quotient_endomorphism(pt.x, W));
    int len = std::max(lambda.length(), kappa.length());
    std::vector<int> mu_parts(len), nu_parts(len);
    int suffix = 0;
    for (int i = len - 1; i >= 0; --i) {
        suffix += lambda.part(i) - kappa.part(i);
        mu_parts[i] = suffix;
        nu_parts[i] = lambda.part(i) - suffix;
    }
    Partition mu, nu;
    try {
        mu = Partition(std::move(mu_parts));
        nu = Partition(std::move(nu_parts));
    } catch (const bad_argument& e) {
        throw classification_error(std::string("identify_orbit: inconsistent recursion: ") + e.what());
    }
    if (mu.part(0) != W.dim())
        throw classification_error("identify_orbit: mu_1 does not equal dim F[x]v");
    if (add(mu, nu) != lambda)
        throw classification_error("identify_orbit: mu + nu does not equal lambda");
    return Bipartition(std::move(mu), std::move(nu));
}

/// dim O_b = n^2 + n - dim E^x - |nu|, with dim E^x = sum min(lambda_i, lambda_j).
inline int orbit_dimension(const Bipartition& b) {
    Partition lambda = add(b.mu(), b.nu());
    int n = b.n();
    int dim_centralizer = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.length(); ++j)
            dim_centralizer += std::min(lambda.part(i), lambda.part(j));
    return n * n + n - dim_centralizer - b.nu().size();
}

inline Int gl_order(int n, int q) {
    Int r = 1;
    for (int i = 0; i < n; ++i) r *= ipow(q, n) - ipow(q, i);
    return r;
}

/// Order of the GL_n(F_q)-centralizer of a nilpotent of type lambda:
/// q^(sum (lambda^t_i)^2 - sum m_k^2) * prod_k |GL_{m_k}(F_q)| over the part
/// multiplicities m_k.
inline Int nilpotent_centralizer_order(const Partition& lambda, int q) {
    Partition lt = transpose(lambda);
    long long e = 0;
    for (int i = 0; i < lt.length(); ++i) e += static_cast<long long>(lt.part(i)) * lt.part(i);
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    Int r = 1;
    for (auto [part, m] : mult) {
        e -= static_cast<long long>(m) * m;
        r *= gl_order(m, q);
    }
    return r * ipow(q, e);
}

struct OrbitCensus {
    int n = 0;
    int q = 0;
    std::vector<std::pair<Bipartition, long long>> counts;  // in enumeration order of Q_n

    long long total() const {
        long long t = 0;
        for (const auto& [b, c] : counts) t += c;
        return t;
    }

    long long count_of(const Bipartition& b) const {
        for (const auto& [bb, c] : counts)
            if (bb == b) return c;
        return 0;
    }
};

enum class CensusMode { Auto, Brute, ByClass };

struct CensusConfig {
    CensusMode mode = CensusMode::Auto;
    long long budget = 100'000'000;    // admissible enumeration work
    long long brute_limit = 1 << 20;   // Auto picks Brute below this many points
};

/// Classifies every (v, x) with x nilpotent over F_q. The brute path scans
/// all q^(n^2) pairs; the by-class path visits one nilpotent per Jordan type
/// and weights by conjugacy class size. Both agree (tested) and sum to q^(n^2).
inline OrbitCensus classify_all(int n, const Fq& F, const CensusConfig& cfg = {}) {
    if (n < 0) throw bad_argument("classify_all: n must be nonnegative");
    const int q = F.q();
    Int pairs = ipow(q, static_cast<long long>(n) * n);
    auto types = enumerate_partitions(n);
    Int class_work = Int(types.size()) * ipow(q, n);
    CensusMode mode = cfg.mode;
    if (mode == CensusMode::Auto)
        mode = (pairs <= cfg.brute_limit) ? CensusMode::Brute : CensusMode::ByClass;
    Int work = (mode == CensusMode::Brute) ? pairs : class_work;
    if (work > cfg.budget)
        throw budget_exceeded("classify_all: work " + work.str() + " exceeds budget " +
                              std::to_string(cfg.budget));

    std::map<Bipartition, long long> acc;
    if (mode == CensusMode::Brute) {
        MatFF x(F, n, n);
        std::vector<int>& entries = x.a;
        while (true) {
            if (is_nilpotent(x)) {
                std::vector<int> v(n, 0);
                while (true) {
                    acc[identify_orbit(EnhancedPoint{F, v, x})] += 1;
                    int i = 0;
                    for (; i < n; ++i) {
                        if (++v[i] < q) break;
                        v[i] = 0;
                    }
                    if (i == n) break;
                }
            }
            std::size_t i = 0;
            for (; i < entries.size(); ++i) {
                if (++entries[i] < q) break;
                entries[i] = 0;
            }
            if (i == entries.size()) break;
        }
    } else {
        for (const auto& lambda : types) {
            MatFF x = representative(Bipartition(Partition{}, lambda), F).first.x;
            Int class_size = gl_order(n, q) / nilpotent_centralizer_order(lambda, q);
            std::vector<int> v(n, 0);
            while (true) {
                Bipartition b = identify_orbit(EnhancedPoint{F, v, x});
                acc[b] += to_i64(class_size);
                int i = 0;
                for (; i < n; ++i) {
                    if (++v[i] < q) break;
                    v[i] = 0;
                }
                if (i == n) break;
            }
        }
    }

    OrbitCensus census{n, q, {}};
    for (const auto& b : enumerate_bipartitions(n)) {
        auto it = acc.find(b);
        census.counts.emplace_back(b, it == acc.end() ? 0 : it->second);
    }
    Int expected = pairs;
    if (Int(census.total()) != expected)
        throw validation_error("classify_all: counts sum to " + std::to_string(census.total()) +
                               ", expected " + expected.str());
    return census;
}

}  // namespace econe
