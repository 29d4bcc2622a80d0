#pragma once
// Fibre-count polynomials: exact Lagrange interpolation over the rationals,
// fitting with a certificate (fit/holdout exactness, natural coefficients,
// orbit-constancy), full tables per n, the field-independence check, and the
// stratified global counting identity.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "econe/bigint.hpp"
#include "econe/cone.hpp"
#include "econe/errors.hpp"
#include "econe/parallel.hpp"
#include "econe/partition.hpp"
#include "econe/resolution.hpp"

namespace econe {

/// Integer polynomial, coefficients ascending, no trailing zeros.
struct Poly {
    std::vector<Int> c;

    static Poly zero() { return {}; }
    static Poly constant(Int v) {
        Poly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for the zero polynomial

    Int eval(const Int& t) const {
        Int r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
        return r;
    }

    bool operator==(const Poly&) const = default;

    std::string to_string() const {
        if (c.empty()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            if (c[d] == 0) continue;
            if (!s.empty()) s += "+";
            if (d == 0 || c[d] != 1) s += c[d].str();
            if (d >= 1) s += "t";
            if (d >= 2) s += "^" + std::to_string(d);
        }
        return s.empty() ? "0" : s;
    }
};

/// Unique rational polynomial of degree < #samples through the points,
/// required to have integer coefficients. Rejects duplicate sample q's.
inline Poly interpolate(const std::vector<std::pair<int, Int>>& samples) {
    if (samples.empty()) throw bad_argument("interpolate: need at least one sample");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw bad_argument("interpolate: duplicate sample point q=" +
                                   std::to_string(samples[i].first));
    const std::size_t m = samples.size();
    std::vector<Rat> acc(m, Rat(0));
    std::vector<Rat> basis;
    for (std::size_t i = 0; i < m; ++i) {
        // L_i(t) = prod_{j != i} (t - q_j) / (q_i - q_j), expanded incrementally.
        basis.assign(1, Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (std::size_t d = basis.size() - 1; d >= 1; --d)
                basis[d] = basis[d - 1] - Rat(samples[j].first) * basis[d];
            basis[0] = -Rat(samples[j].first) * basis[0];
            denom *= Rat(samples[i].first) - Rat(samples[j].first);
        }
        Rat scale = Rat(samples[i].second) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * scale;
    }
    Poly p;
    p.c.resize(m);
    for (std::size_t d = 0; d < m; ++d) {
        if (boost::multiprecision::denominator(acc[d]) != 1)
            throw validation_error("interpolate: non-integral coefficient at degree " +
                                   std::to_string(d) + ": " + acc[d].str());
        p.c[d] = boost::multiprecision::numerator(acc[d]);
    }
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
    return p;
}

struct PiCertificate {
    std::vector<int> fit_qs, holdout_qs;
    int degree_bound = 0;
    bool fitted = false;  // false when the target lies outside the closure (Pi = 0)
    bool interpolation_integral = false;
    bool fit_exact = false;
    bool holdout_exact = false;
    bool coeffs_natural = false;
    bool degree_within_bound = false;
    bool orbit_constant = false;
    bool diagonal_is_one = true;
    Int value_at_one;  // recorded probe, not asserted
    std::uint64_t seed = 0;

    bool pass() const {
        if (!fitted) return true;  // the zero convention carries no certificate clauses
        return interpolation_integral && fit_exact && holdout_exact && coeffs_natural &&
               degree_within_bound && orbit_constant && diagonal_is_one;
    }
};

struct PiPolynomial {
    Bipartition source, target;
    Poly poly;
    PiCertificate cert;
};

/// Thrown when a certificate clause fails; carries the full record so that
/// probes can report rather than abort.
struct certificate_error : validation_error {
    certificate_error(std::string msg, PiPolynomial rec)
        : validation_error(std::move(msg)), record(std::move(rec)) {}
    PiPolynomial record;
};

struct FitConfig {
    std::vector<int> fit_primes{2, 3, 5, 7, 11, 13};
    std::vector<int> holdout_qs{17, 4, 9};
    int conjugates = 3;
    std::uint64_t seed = 0xC0FFEE;
    long long node_budget = kDefaultNodeBudget;
    bool extend_primes = true;  // extend the fit set up to degree_bound + 1 samples
};

/// Fit primes in configured order, extended with further primes (skipping
/// the holdout set) until degree_bound + 1 samples exist.
inline std::vector<int> fit_sample_qs(const FitConfig& cfg, int degree_bound) {
    std::vector<int> qs;
    for (int p : cfg.fit_primes) {
        if (static_cast<int>(qs.size()) == degree_bound + 1) break;
        qs.push_back(p);
    }
    if (!cfg.extend_primes) {
        if (qs.empty()) throw bad_argument("fit_sample_qs: no fit primes supplied");
        return qs;
    }
    int candidate = qs.empty() ? 1 : qs.back();
    while (static_cast<int>(qs.size()) < degree_bound + 1) {
        candidate = next_prime(candidate);
        if (std::find(qs.begin(), qs.end(), candidate) != qs.end()) continue;
        if (std::find(cfg.holdout_qs.begin(), cfg.holdout_qs.end(), candidate) !=
            cfg.holdout_qs.end())
            continue;
        qs.push_back(candidate);
    }
    return qs;
}

/// Measures the fibre count of `datum` over the canonical representative of
/// `target` in F_q, cross-checked against seeded random conjugates.
inline std::optional<long long> measured_fibre_count(const ResolutionDatum& datum,
                                                     const Bipartition& target, int q,
                                                     const FitConfig& cfg) {
    Fq F = Fq::of_order(q);
    auto [pt, frame] = representative(target, F);
    long long count = fibre_points(datum, pt, false, cfg.node_budget).count;
    std::mt19937_64 rng(mix_seed(cfg.seed, datum.source.key() + "->" + target.key() + "@" +
                                               std::to_string(q)));
    for (int s = 0; s < cfg.conjugates; ++s) {
        MatFF g = random_gl(F, target.n(), rng);
        EnhancedPoint moved{F, g.apply(pt.v), g * pt.x * inverse(g)};
        if (fibre_points(datum, moved, false, cfg.node_budget).count != count)
            return std::nullopt;  // not orbit-constant
    }
    return count;
}

/// Fits Pi for (source, target). Outside the closure the polynomial is 0 by
/// convention. Any failing certificate clause raises certificate_error with
/// the full record attached.
inline PiPolynomial fit_pi(const Bipartition& source, const Bipartition& target,
                           const FitConfig& cfg = {}) {
    if (source.n() != target.n()) throw bad_argument("fit_pi: sizes differ");
    PiPolynomial out{source, target, Poly::zero(), {}};
    out.cert.seed = cfg.seed;
    if (!closure_leq(target, source)) return out;

    ResolutionDatum datum = resolution_datum(source);
    out.cert.fitted = true;
    out.cert.degree_bound = total_space_dimension(datum) - orbit_dimension(target);
    out.cert.fit_qs = fit_sample_qs(cfg, out.cert.degree_bound);
    out.cert.holdout_qs = cfg.holdout_qs;

    std::vector<std::pair<int, Int>> samples;
    out.cert.orbit_constant = true;
    for (int q : out.cert.fit_qs) {
        auto c = measured_fibre_count(datum, target, q, cfg);
        if (!c) {
            out.cert.orbit_constant = false;
            throw certificate_error("fit_pi: counts not orbit-constant at q=" + std::to_string(q),
                                    out);
        }
        samples.emplace_back(q, Int(*c));
    }

    try {
        out.poly = interpolate(samples);
        out.cert.interpolation_integral = true;
    } catch (const validation_error& e) {
        throw certificate_error(std::string("fit_pi: ") + e.what(), out);
    }

    out.cert.fit_exact = true;
    for (const auto& [q, c] : samples)
        out.cert.fit_exact = out.cert.fit_exact && (out.poly.eval(q) == c);

    out.cert.holdout_exact = true;
    for (int q : out.cert.holdout_qs) {
        auto c = measured_fibre_count(datum, target, q, cfg);
        if (!c) {
            out.cert.orbit_constant = false;
            break;
        }
        out.cert.holdout_exact = out.cert.holdout_exact && (out.poly.eval(q) == Int(*c));
    }

    out.cert.coeffs_natural = true;
    for (const Int& c : out.poly.c)
        out.cert.coeffs_natural = out.cert.coeffs_natural && (c >= 0);
    out.cert.degree_within_bound = out.poly.degree() <= out.cert.degree_bound;
    out.cert.diagonal_is_one = (source != target) || out.poly == Poly::constant(1);
    out.cert.value_at_one = out.poly.eval(1);

    if (!out.cert.pass()) throw certificate_error("fit_pi: certificate failed for " + source.key() +
                                                      " over " + target.key(),
                                                  out);
    return out;
}

struct PiTable {
    int n = 0;
    std::vector<PiPolynomial> entries;  // source-major, enumeration order

    const PiPolynomial* find(const Bipartition& source, const Bipartition& target) const {
        for (const auto& e : entries)
            if (e.source == source && e.target == target) return &e;
        return nullptr;
    }
};

/// Certified table over all ordered pairs with target <= source in the
/// closure order. Fits are independent jobs; entries land in source-major
/// enumeration order regardless of scheduling.
inline PiTable pi_table(int n, const FitConfig& cfg = {}, unsigned threads = 1) {
    PiTable table{n, {}};
    auto all = enumerate_bipartitions(n);
    std::vector<std::pair<Bipartition, Bipartition>> pairs;
    for (const auto& source : all)
        for (const auto& target : all)
            if (closure_leq(target, source)) pairs.emplace_back(source, target);
    table.entries.resize(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        table.entries[i] = fit_pi(pairs[i].first, pairs[i].second, cfg);
    });
    return table;
}

/// Per-side sample sizes for the field-independence check: three primes
/// suffice up to degree bound 2; beyond that at least six, and always
/// degree_bound + 1.
inline std::pair<std::vector<int>, std::vector<int>> field_independence_sets(int degree_bound) {
    int size = degree_bound <= 2 ? 3 : std::max(degree_bound + 1, 6);
    std::vector<int> a, b;
    int p = 1;
    for (int i = 0; i < size; ++i) a.push_back(p = next_prime(p));
    for (int i = 0; i < size; ++i) b.push_back(p = next_prime(p));
    return {a, b};
}

/// True iff the polynomials fitted from two disjoint prime sets coincide.
/// Each side is validated exactly on the other side's samples, so together
/// the two fits interpolate the union; as long as the union has more than
/// degree_bound points, agreement pins a single polynomial even when one
/// side alone is smaller than degree_bound + 1.
inline bool field_independence_check(const Bipartition& source, const Bipartition& target,
                                     const std::vector<int>& primeset_a,
                                     const std::vector<int>& primeset_b,
                                     const FitConfig& base_cfg = {}) {
    for (int p : primeset_a)
        if (std::find(primeset_b.begin(), primeset_b.end(), p) != primeset_b.end())
            throw bad_argument("field_independence_check: prime sets are not disjoint");
    if (!closure_leq(target, source)) return true;  // both sides are the zero convention
    int degree_bound = total_space_dimension(resolution_datum(source)) - orbit_dimension(target);
    if (static_cast<int>(primeset_a.size() + primeset_b.size()) < degree_bound + 1)
        throw bad_argument(
            "field_independence_check: prime sets together are smaller than degree bound + 1");
    FitConfig cfg = base_cfg;
    cfg.extend_primes = false;
    cfg.fit_primes = primeset_a;
    cfg.holdout_qs = primeset_b;
    Poly pa = fit_pi(source, target, cfg).poly;
    cfg.fit_primes = primeset_b;
    cfg.holdout_qs = primeset_a;
    Poly pb = fit_pi(source, target, cfg).poly;
    return pa == pb;
}

/// Exact identity sum_target census(target) * Pi(q) = |Z(F_q)|.
inline bool global_identity_check(const Bipartition& source, const Fq& F,
                                  const OrbitCensus& census, const PiTable& table) {
    ResolutionDatum datum = resolution_datum(source);
    Int sum = 0;
    for (const auto& [target, count] : census.counts) {
        const PiPolynomial* e = table.find(source, target);
        if (e) sum += Int(count) * e->poly.eval(F.q());
    }
    return sum == total_space_count(datum, F.q());
}

}  // namespace econe
