#pragma once
// Partitions, bi-partitions, the interleaving of a bi-partition, and the
// interleaved dominance order used as the orbit-closure oracle.

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "econe/errors.hpp"

namespace econe {

/// Weakly decreasing list of nonnegative integers. Trailing zeros are
/// accepted on input and stripped, so equality is equality of diagrams.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw bad_argument("partition parts must be nonnegative");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw bad_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    /// Sum of parts.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// i-th part, 0-based; zero beyond length().
    int part(int i) const { return (i >= 0 && i < length()) ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// "3,1" with "" for the empty partition.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(const std::string& s) {
        std::vector<int> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw bad_argument("bad partition token: " + tok);
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// Conjugate partition: column lengths of the diagram.
inline Partition transpose(const Partition& p) {
    std::vector<int> cols(p.part(0), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) ++cols[j];
    return Partition(std::move(cols));
}

/// Componentwise sum at equal index (rows aligned, shorter one zero-padded).
inline Partition add(const Partition& mu, const Partition& nu) {
    int len = std::max(mu.length(), nu.length());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i) parts[i] = mu.part(i) + nu.part(i);
    return Partition(std::move(parts));
}

/// All partitions of n, ascending lexicographic on the part vector.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw bad_argument("enumerate_partitions: n must be nonnegative");
    std::vector<std::vector<int>> acc;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            acc.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    gen(gen, n, n);
    std::sort(acc.begin(), acc.end());
    std::vector<Partition> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(std::move(v));
    return out;
}

/// Ordered pair (mu; nu); labels an orbit of the enhanced cone on F^n with
/// n = |mu| + |nu|.
class Bipartition {
public:
    Bipartition() = default;
    Bipartition(Partition mu, Partition nu) : mu_(std::move(mu)), nu_(std::move(nu)) {}

    const Partition& mu() const { return mu_; }
    const Partition& nu() const { return nu_; }
    int n() const { return mu_.size() + nu_.size(); }

    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;

    /// Serialization key "mu|nu", e.g. "2|", "1,1|1", "|".
    std::string key() const { return mu_.to_string() + "|" + nu_.to_string(); }

    static Bipartition parse_key(const std::string& s) {
        auto bar = s.find('|');
        if (bar == std::string::npos) throw bad_argument("bipartition key needs '|': " + s);
        return Bipartition(Partition::parse(s.substr(0, bar)), Partition::parse(s.substr(bar + 1)));
    }

private:
    Partition mu_, nu_;
};

/// All (mu; nu) with |mu| + |nu| = n, ordered by (|mu|, mu, nu).
inline std::vector<Bipartition> enumerate_bipartitions(int n) {
    if (n < 0) throw bad_argument("enumerate_bipartitions: n must be nonnegative");
    std::vector<Bipartition> out;
    for (int k = 0; k <= n; ++k) {
        auto mus = enumerate_partitions(k);
        auto nus = enumerate_partitions(n - k);
        for (const auto& mu : mus)
            for (const auto& nu : nus) out.emplace_back(mu, nu);
    }
    return out;
}

using Composition = std::vector<int>;

/// (mu1, nu1, mu2, nu2, ...) zero-padded to 2*max(len(mu), len(nu)) entries.
inline Composition interleave(const Bipartition& b) {
    int len = std::max(b.mu().length(), b.nu().length());
    Composition c(2 * len, 0);
    for (int i = 0; i < len; ++i) {
        c[2 * i] = b.mu().part(i);
        c[2 * i + 1] = b.nu().part(i);
    }
    return c;
}

/// Dominance on interleavings: every partial sum of interleave(a) is at most
/// the corresponding partial sum of interleave(b). Total sizes must agree.
inline bool closure_leq(const Bipartition& a, const Bipartition& b) {
    if (a.n() != b.n()) throw bad_argument("closure_leq: sizes differ");
    Composition ia = interleave(a), ib = interleave(b);
    std::size_t len = std::max(ia.size(), ib.size());
    long long sa = 0, sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < ia.size() ? ia[i] : 0;
        sb += i < ib.size() ? ib[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

}  // namespace econe
