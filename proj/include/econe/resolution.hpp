#pragma once
// The resolution of an orbit closure as a flag-incidence variety: the flag
// datum attached to a bipartition, exact fibre point counts over F_q, the
// closed-form total-space count, and the validation report that certifies
// the datum against the orbit structure.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "econe/bigint.hpp"
#include "econe/cone.hpp"
#include "econe/errors.hpp"
#include "econe/linalg.hpp"
#include "econe/partition.hpp"

namespace econe {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

/// Flag datum: dimension steps 0 = d_0 < d_1 < ... < d_L = n and the step m
/// at which the vector is confined. The incidence variety is
/// Z = {(v, x, W) : x W_j <= W_{j-1} for all j, v in W_m}.
struct ResolutionDatum {
    Bipartition source;
    std::vector<int> dims;
    int v_step = 0;

    int L() const { return static_cast<int>(dims.size()) - 1; }
    int n() const { return dims.back(); }
};

/// Steps are the columns of mu followed by the columns of nu; the vector is
/// confined at step m = mu_1, so d_m = |mu|.
inline ResolutionDatum resolution_datum(const Bipartition& b) {
    Partition mt = transpose(b.mu()), nt = transpose(b.nu());
    std::vector<int> dims{0};
    for (int j = 0; j < mt.length(); ++j) dims.push_back(dims.back() + mt.part(j));
    for (int j = 0; j < nt.length(); ++j) dims.push_back(dims.back() + nt.part(j));
    ResolutionDatum d{b, std::move(dims), b.mu().part(0)};
    if (d.dims[d.v_step] != b.mu().size())
        throw validation_error("resolution_datum: d_m does not equal |mu|");
    std::vector<int> incr;
    for (int j = 1; j <= d.L(); ++j) incr.push_back(d.dims[j] - d.dims[j - 1]);
    std::sort(incr.rbegin(), incr.rend());
    if (Partition(incr) != transpose(add(b.mu(), b.nu())))
        throw validation_error("resolution_datum: increments do not refine the columns of lambda");
    return d;
}

struct FibreReport {
    ResolutionDatum datum;
    Bipartition target_orbit;
    int q = 0;
    long long count = 0;
    long long nodes_visited = 0;
    std::optional<std::vector<std::vector<Subspace>>> flags;  // full chains W_0..W_L
};

/// Counts (optionally lists) the F_q-flags of the datum over the point.
/// Enumeration is bottom-up with per-step bounds A_j <= W_j <= B_j, where
/// B_j is the x-preimage of W_{j-1} and A_j folds in W_{j-1}, the vector at
/// step m and the image of x at step L-1. Every visited subspace counts one
/// node against the budget.
inline FibreReport fibre_points(const ResolutionDatum& d, const EnhancedPoint& pt,
                                bool list_flags = false,
                                long long node_budget = kDefaultNodeBudget) {
    const int n = d.n();
    if (pt.x.rows != pt.x.cols || pt.x.rows != n || static_cast<int>(pt.v.size()) != n)
        throw bad_argument("fibre_points: point does not match the datum's ambient dimension");
    if (!is_nilpotent(pt.x)) throw bad_argument("fibre_points: x is not nilpotent");
    const Fq& F = pt.F;
    const int L = d.L();

    FibreReport report{d, identify_orbit(pt), F.q(), 0, 0, std::nullopt};
    if (list_flags) report.flags.emplace();

    bool has_v = false;
    for (int c : pt.v) has_v = has_v || (c != 0);

    if (L == 0) {  // n = 0: the empty flag
        report.count = 1;
        if (list_flags) report.flags->push_back({Subspace(F, 0)});
        return report;
    }
    if (d.v_step == 0 && has_v) return report;  // v must lie in W_0 = 0

    Subspace im = image(pt.x);
    std::vector<Subspace> chain{Subspace(F, n)};  // W_0 = 0

    std::function<void(int)> rec = [&](int j) {
        const Subspace& prev = chain.back();
        if (j == L) {
            if (L == 1 && !prev.contains(im)) return;  // x V <= W_0 checked directly
            ++report.count;
            if (list_flags) {
                auto full = chain;
                full.push_back(Subspace::full(F, n));
                report.flags->push_back(std::move(full));
            }
            return;
        }
        Subspace lower = prev;
        if (j == d.v_step && has_v) lower = lower.sum_with_vector(pt.v);
        if (j == L - 1) lower = lower.sum(im);
        if (lower.dim() > d.dims[j]) return;
        Subspace upper = preimage(pt.x, prev);
        if (upper.dim() < d.dims[j] || !upper.contains(lower)) return;
        enumerate_between(lower, upper, d.dims[j], [&](const Subspace& w) {
            if (++report.nodes_visited > node_budget)
                throw budget_exceeded("fibre_points: node budget exceeded (" +
                                      std::to_string(node_budget) + ")");
            chain.push_back(w);
            rec(j + 1);
            chain.pop_back();
        });
    };
    rec(1);
    return report;
}

/// |Z(F_q)| in closed form: the number of flags of the datum's type times
/// q^(sum_j d_{j-1} c_j + d_m).
inline Int total_space_count(const ResolutionDatum& d, int q) {
    Int flags = 1;
    long long exponent = d.dims[d.v_step];
    for (int j = 1; j <= d.L(); ++j) {
        flags *= gaussian_binomial(d.dims[j], d.dims[j - 1], q);
        exponent += static_cast<long long>(d.dims[j - 1]) * (d.dims[j] - d.dims[j - 1]);
    }
    return flags * ipow(q, exponent);
}

/// dim Z = e_2(increments) + sum_j d_{j-1} c_j + d_m.
inline int total_space_dimension(const ResolutionDatum& d) {
    int dim = d.dims[d.v_step];
    int seen = 0;
    for (int j = 1; j <= d.L(); ++j) {
        int c = d.dims[j] - d.dims[j - 1];
        dim += seen * c;            // e_2 accumulates pairwise products
        dim += d.dims[j - 1] * c;
        seen += c;
    }
    return dim;
}

struct ResolutionFieldReport {
    int q = 0;
    long long fibre_at_rep = 0;
    std::vector<std::pair<std::string, long long>> fibre_counts;  // per target key
    bool clause_a = false;  // fibre over own representative = 1
    bool clause_b = false;  // support equals the closure lower set
    bool clause_c = false;  // counts constant over random conjugates
    bool clause_d = false;  // stratified census sum equals |Z(F_q)|
    Int stratified_sum;
    Int total_count;
    std::string first_failure;
};

struct ResolutionReport {
    Bipartition b;
    std::vector<ResolutionFieldReport> fields;
    bool pass = false;
};

struct ResolutionValidationConfig {
    int conjugates = 5;
    std::uint64_t seed = 0xC0FFEE;
    long long node_budget = kDefaultNodeBudget;
    CensusConfig census;
};

/// Derives a per-job generator so results do not depend on execution order.
inline std::uint64_t mix_seed(std::uint64_t base, const std::string& tag) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Validates the flag datum of b over each field: (a) the fibre over the
/// canonical representative of b has exactly one point, (b) the fibre over
/// (rho; sigma) is nonempty iff (rho; sigma) <= b in the closure order,
/// (c) counts agree across random conjugates of each representative, and
/// (d) the census-weighted sum of fibre counts equals |Z(F_q)|.
inline ResolutionReport validate_resolution(const Bipartition& b, const std::vector<Fq>& fields,
                                            const ResolutionValidationConfig& cfg = {},
                                            const ResolutionDatum* datum_override = nullptr) {
    ResolutionDatum datum = datum_override ? *datum_override : resolution_datum(b);
    const int n = b.n();
    auto targets = enumerate_bipartitions(n);

    ResolutionReport report{b, {}, true};
    for (const Fq& F : fields) {
        ResolutionFieldReport fr;
        fr.q = F.q();
        std::vector<long long> counts;
        for (const auto& t : targets) {
            auto [pt, frame] = representative(t, F);
            long long c = fibre_points(datum, pt, false, cfg.node_budget).count;
            counts.push_back(c);
            fr.fibre_counts.emplace_back(t.key(), c);
            if (t == b) fr.fibre_at_rep = c;
        }
        fr.clause_a = (fr.fibre_at_rep == 1);
        if (!fr.clause_a && fr.first_failure.empty()) fr.first_failure = "a";

        fr.clause_b = true;
        for (std::size_t i = 0; i < targets.size(); ++i)
            if ((counts[i] > 0) != closure_leq(targets[i], b)) {
                fr.clause_b = false;
                if (fr.first_failure.empty()) fr.first_failure = "b";
                break;
            }

        fr.clause_c = true;
        for (std::size_t i = 0; i < targets.size() && fr.clause_c; ++i) {
            auto [pt, frame] = representative(targets[i], F);
            std::mt19937_64 rng(
                mix_seed(cfg.seed, b.key() + "#" + targets[i].key() + "@" + std::to_string(F.q())));
            for (int s = 0; s < cfg.conjugates; ++s) {
                MatFF g = random_gl(F, n, rng);
                EnhancedPoint moved{F, g.apply(pt.v), g * pt.x * inverse(g)};
                if (fibre_points(datum, moved, false, cfg.node_budget).count != counts[i]) {
                    fr.clause_c = false;
                    if (fr.first_failure.empty()) fr.first_failure = "c";
                    break;
                }
            }
        }

        OrbitCensus census = classify_all(n, F, cfg.census);
        fr.stratified_sum = 0;
        for (std::size_t i = 0; i < targets.size(); ++i)
            fr.stratified_sum += Int(census.count_of(targets[i])) * counts[i];
        fr.total_count = total_space_count(datum, F.q());
        fr.clause_d = (fr.stratified_sum == fr.total_count);
        if (!fr.clause_d && fr.first_failure.empty()) fr.first_failure = "d";

        report.pass = report.pass && fr.clause_a && fr.clause_b && fr.clause_c && fr.clause_d;
        report.fields.push_back(std::move(fr));
    }
    return report;
}

}  // namespace econe
