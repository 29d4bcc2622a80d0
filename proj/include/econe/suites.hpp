#pragma once
// The orchestrated validation suites behind `verify-all`, the paving probe,
// and the operation-coverage registry. Each suite is a pure function of the
// run configuration and reports pass/fail plus machine-readable details.

#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "econe/cache.hpp"
#include "econe/config.hpp"
#include "econe/io.hpp"

namespace econe {

inline constexpr std::array<const char*, 34> kAllOps = {
    "partition.transpose",
    "partition.add",
    "partition.enumerate_bipartitions",
    "partition.interleave",
    "partition.closure_leq",
    "linalg.rref",
    "linalg.kernel",
    "linalg.preimage",
    "linalg.enumerate_between",
    "linalg.gaussian_binomial",
    "cone.representative",
    "cone.jordan_type",
    "cone.cyclic_space",
    "cone.identify_orbit",
    "cone.classify_all",
    "cone.orbit_dimension",
    "slice.centralizer_basis",
    "slice.u_basis",
    "slice.trace_pairing",
    "slice.verify_transversality",
    "slice.verify_contraction",
    "resolution.resolution_datum",
    "resolution.fibre_points",
    "resolution.total_space_count",
    "resolution.validate_resolution",
    "resolution.total_space_dimension",
    "pi.interpolate",
    "pi.fit_pi",
    "pi.pi_table",
    "pi.field_independence_check",
    "pi.global_identity_check",
    "cli.enumerate",
    "cli.probe_paving",
    "cli.verify_all",
};

class OpCoverage {
public:
    void mark(const std::string& op) { seen_.insert(op); }

    std::vector<std::string> missing() const {
        std::vector<std::string> out;
        for (const char* op : kAllOps)
            if (!seen_.count(op)) out.push_back(op);
        return out;
    }

private:
    std::set<std::string> seen_;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    njson details;
};

enum class FaultInjection { None, SwapDatumVStep };

/// Independent partition-count recurrence (pentagonal numbers), used as the
/// oracle against the enumerator.
inline long long partition_count(int n) {
    static std::vector<long long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * memo[m - g1];
            if (g2 <= m) total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

inline SuiteResult run_bipartitions_suite(const RunConfig& cfg, OpCoverage& ops) {
    SuiteResult r{"bipartitions", true, njson::object()};

    bool involution = true;
    for (int n = 0; n <= 8 && involution; ++n)
        for (const auto& p : enumerate_partitions(n))
            involution = involution && transpose(transpose(p)) == p;
    ops.mark("partition.transpose");
    r.details["transpose_involution_n_le_8"] = involution;

    bool add_columns = true;
    for (int n = 0; n <= 6 && add_columns; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            std::vector<int> cols;
            Partition mt = transpose(b.mu()), nt = transpose(b.nu());
            for (int c : mt.parts()) cols.push_back(c);
            for (int c : nt.parts()) cols.push_back(c);
            std::sort(cols.rbegin(), cols.rend());
            add_columns = add_columns && Partition(cols) == transpose(add(b.mu(), b.nu()));
        }
    ops.mark("partition.add");
    r.details["sum_merges_columns_n_le_6"] = add_columns;

    bool counts_ok = true;
    for (int n = 0; n <= 10; ++n) {
        long long expected = 0;
        for (int k = 0; k <= n; ++k) expected += partition_count(k) * partition_count(n - k);
        counts_ok = counts_ok &&
                    static_cast<long long>(enumerate_bipartitions(n).size()) == expected;
    }
    ops.mark("partition.enumerate_bipartitions");
    r.details["enumeration_counts_n_le_10"] = counts_ok;

    int order_n = std::min(6, std::max(1, cfg.roundtrip_n));
    bool order_ok = true, extremes_ok = true;
    for (int n = 1; n <= order_n; ++n) {
        auto all = enumerate_bipartitions(n);
        for (const auto& a : all) {
            order_ok = order_ok && closure_leq(a, a);
            interleave(a);
            for (const auto& b : all) {
                if (closure_leq(a, b) && closure_leq(b, a)) order_ok = order_ok && a == b;
                for (const auto& c : all)
                    if (closure_leq(a, b) && closure_leq(b, c))
                        order_ok = order_ok && closure_leq(a, c);
            }
        }
        Bipartition top(Partition{n}, Partition{});
        Bipartition bottom(Partition{}, Partition(std::vector<int>(n, 1)));
        for (const auto& b : all) {
            extremes_ok = extremes_ok && closure_leq(b, top) && closure_leq(bottom, b);
            if (b != top) extremes_ok = extremes_ok && !closure_leq(top, b);
            if (b != bottom) extremes_ok = extremes_ok && !closure_leq(b, bottom);
        }
    }
    ops.mark("partition.interleave");
    ops.mark("partition.closure_leq");
    r.details["order_axioms_n_le"] = order_n;
    r.details["order_axioms"] = order_ok;
    r.details["unique_extremes"] = extremes_ok;

    r.pass = involution && add_columns && counts_ok && order_ok && extremes_ok;
    return r;
}

inline SuiteResult run_linalg_suite(const RunConfig& cfg, OpCoverage& ops) {
    SuiteResult r{"ff_linalg", true, njson::object()};

    bool canonical = true;
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        std::mt19937_64 rng(mix_seed(cfg.seed, "linalg-canonical-" + std::to_string(q)));
        for (int trial = 0; trial < 100; ++trial) {
            int n = 2 + static_cast<int>(rng() % 4);
            int k = 1 + static_cast<int>(rng() % n);
            MatFF m(F, k, n);
            for (int& e : m.a) e = static_cast<int>(rng() % q);
            Subspace w = rref(m);
            // Re-span with random coefficient mixes of the basis rows.
            MatFF mixed(F, w.dim() + 2, n);
            for (int i = 0; i < mixed.rows; ++i)
                for (int bi = 0; bi < w.dim(); ++bi) {
                    int c = static_cast<int>(rng() % q);
                    for (int j = 0; j < n; ++j)
                        mixed.at(i, j) = F.add(mixed.at(i, j), F.mul(c, w.rows()[bi][j]));
                }
            Subspace w2 = rref(mixed);
            canonical = canonical && (w2.dim() < w.dim() || w2 == w) && w.contains(w2);
        }
    }
    ops.mark("linalg.rref");
    r.details["canonical_form_200_random"] = canonical;

    bool rank_nullity = true, preimage_ok = true;
    {
        Fq F = Fq::prime(3);
        std::mt19937_64 rng(mix_seed(cfg.seed, "linalg-kernel"));
        for (int trial = 0; trial < 50; ++trial) {
            MatFF m(F, 4, 4);
            for (int& e : m.a) e = static_cast<int>(rng() % 3);
            Subspace ker = kernel(m);
            rank_nullity = rank_nullity && ker.dim() + rank(m) == 4;
            Subspace w = rref(m);
            Subspace pre = preimage(m, w);
            preimage_ok = preimage_ok && pre.contains(ker);
            for (const auto& row : pre.rows())
                preimage_ok = preimage_ok && w.contains_vector(m.apply(row));
        }
    }
    ops.mark("linalg.kernel");
    ops.mark("linalg.preimage");
    r.details["rank_nullity_random"] = rank_nullity;
    r.details["preimage_membership_random"] = preimage_ok;

    bool counts_ok = true;
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 0; n <= 4; ++n) {
            Subspace zero(F, n), full = Subspace::full(F, n);
            for (int d = 0; d <= n; ++d) {
                long long seen = 0;
                enumerate_between(zero, full, d, [&](const Subspace&) { ++seen; });
                counts_ok = counts_ok && Int(seen) == gaussian_binomial(n, d, q);
            }
        }
    }
    ops.mark("linalg.enumerate_between");
    ops.mark("linalg.gaussian_binomial");
    r.details["between_counts_match_gaussian"] = counts_ok;

    r.pass = canonical && rank_nullity && preimage_ok && counts_ok;
    return r;
}

inline SuiteResult run_classification_suite(const RunConfig& cfg, OpCoverage& ops) {
    SuiteResult r{"classification", true, njson::object()};

    bool roundtrip = true;
    long long checked = 0;
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 0; n <= cfg.roundtrip_n; ++n)
            for (const auto& b : enumerate_bipartitions(n)) {
                auto [pt, frame] = representative(b, F);
                roundtrip = roundtrip && identify_orbit(pt) == b &&
                            jordan_type(pt.x) == frame.lambda &&
                            cyclic_space(pt.x, pt.v).dim() == b.mu().part(0);
                ++checked;
            }
    }
    ops.mark("cone.representative");
    ops.mark("cone.jordan_type");
    ops.mark("cone.cyclic_space");
    ops.mark("cone.identify_orbit");
    r.details["roundtrip_pass"] = roundtrip;
    r.details["roundtrip_points"] = checked;

    bool invariance = true;
    for (int q : {2, 3}) {
        Fq F = Fq::prime(q);
        for (int n = 1; n <= cfg.invariance_n; ++n)
            for (const auto& b : enumerate_bipartitions(n)) {
                auto [pt, frame] = representative(b, F);
                std::mt19937_64 rng(
                    mix_seed(cfg.seed, "invariance-" + b.key() + "-" + std::to_string(q)));
                for (int s = 0; s < cfg.invariance_samples; ++s) {
                    MatFF g = random_gl(F, n, rng);
                    EnhancedPoint moved{F, g.apply(pt.v), g * pt.x * inverse(g)};
                    invariance = invariance && identify_orbit(moved) == b;
                }
                for (int t = 1; t < q; ++t) {
                    std::vector<int> tv(pt.v);
                    for (int& c : tv) c = F.mul(c, t);
                    EnhancedPoint scaled{F, std::move(tv), pt.x.scaled(t)};
                    invariance = invariance && identify_orbit(scaled) == b;
                }
            }
    }
    r.details["conjugation_and_scaling_invariance"] = invariance;

    r.pass = roundtrip && invariance;
    return r;
}

inline SuiteResult run_census_suite(const RunConfig& cfg, OpCoverage& ops) {
    SuiteResult r{"census", true, njson::object()};

    bool totals = true;
    njson totals_detail = njson::array();
    for (auto [n, q] : cfg.census_cases) {
        OrbitCensus c = classify_all(n, Fq::of_order(q), cfg.census_config());
        Int expected = ipow(q, static_cast<long long>(n) * n);
        bool ok = Int(c.total()) == expected;
        totals = totals && ok;
        totals_detail.push_back(
            njson{{"n", n}, {"q", q}, {"total", c.total()}, {"pass", ok}});
    }
    ops.mark("cone.classify_all");
    r.details["totals"] = totals_detail;

    bool sizes_ok = true;
    bool have_22 = false;
    for (auto [n, q] : cfg.census_cases) have_22 = have_22 || (n == 2 && q == 2);
    if (have_22) {
        OrbitCensus c = classify_all(2, Fq::prime(2), cfg.census_config());
        sizes_ok = c.count_of(Bipartition({2}, {})) == 6 &&
                   c.count_of(Bipartition({1}, {1})) == 3 &&
                   c.count_of(Bipartition({1, 1}, {})) == 3 &&
                   c.count_of(Bipartition({}, {2})) == 3 &&
                   c.count_of(Bipartition({}, {1, 1})) == 1;
    }
    r.details["n2_q2_exact_sizes"] = sizes_ok;

    bool paths_agree = true;
    {
        int n = std::min(2, cfg.roundtrip_n);
        for (int q : {2, 3}) {
            CensusConfig brute = cfg.census_config(), byclass = cfg.census_config();
            brute.mode = CensusMode::Brute;
            byclass.mode = CensusMode::ByClass;
            OrbitCensus a = classify_all(n, Fq::prime(q), brute);
            OrbitCensus b = classify_all(n, Fq::prime(q), byclass);
            paths_agree = paths_agree && a.counts == b.counts;
        }
    }
    r.details["brute_vs_class_paths"] = paths_agree;

    bool dims_ok = true;
    for (int n = 0; n <= std::min(3, cfg.roundtrip_n); ++n)
        for (const auto& b : enumerate_bipartitions(n))
            dims_ok = dims_ok && orbit_dimension(b) >= 0;
    ops.mark("cone.orbit_dimension");
    r.details["orbit_dims_nonnegative"] = dims_ok;

    r.pass = totals && sizes_ok && paths_agree && dims_ok;
    return r;
}

inline SuiteResult run_slice_suite(const RunConfig& cfg, OpCoverage& ops) {
    SuiteResult r{"slice", true, njson::object()};

    bool pairing = true, commute = true;
    for (int n = 1; n <= std::min(cfg.slice_n, 8); ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CentralizerBasis ys = centralizer_basis(lambda);
            auto zs = u_basis(lambda, Partition{});
            MatZ x = nilpotent_matrix_z(NormalFrame{lambda});
            long long expected = 0;
            for (int i = 0; i < lambda.length(); ++i)
                for (int j = 0; j < lambda.length(); ++j)
                    expected += std::min(lambda.part(i), lambda.part(j));
            pairing = pairing && static_cast<long long>(ys.elements.size()) == expected &&
                      trace_pairing(ys, zs) == MatZ::identity(static_cast<int>(zs.size()));
            for (const auto& y : ys.elements) commute = commute && (y.m * x - x * y.m).is_zero();
        }
    ops.mark("slice.centralizer_basis");
    ops.mark("slice.u_basis");
    ops.mark("slice.trace_pairing");
    r.details["trace_pairing_identity"] = pairing;
    r.details["centralizer_commutes"] = commute;

    bool transversal = true, contracting = true, dim_identity = true;
    long long certified = 0;
    for (int n = 1; n <= cfg.slice_n; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            SliceCertificate tc = verify_transversality(b);
            ContractionCertificate cc = verify_contraction(b);
            transversal = transversal && tc.pass;
            contracting = contracting && cc.pass;
            dim_identity =
                dim_identity && tc.dim_t + tc.dim_u + orbit_dimension(b) == n * n + n;
            ++certified;
        }
    ops.mark("slice.verify_transversality");
    ops.mark("slice.verify_contraction");
    r.details["transversality"] = transversal;
    r.details["contraction"] = contracting;
    r.details["slice_dim_plus_orbit_dim"] = dim_identity;
    r.details["bipartitions_certified"] = certified;

    r.pass = pairing && commute && transversal && contracting && dim_identity;
    return r;
}

inline SuiteResult run_resolution_suite(const RunConfig& cfg, OpCoverage& ops,
                                        FaultInjection fault = FaultInjection::None) {
    SuiteResult r{"resolution", true, njson::object()};

    std::vector<Fq> fields;
    for (int q : cfg.resolution_qs) fields.push_back(Fq::of_order(q));

    bool validated = true;
    njson failures = njson::array();
    for (int n = 1; n <= cfg.resolution_n; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            ResolutionDatum datum = resolution_datum(b);
            ResolutionDatum corrupted = datum;
            const ResolutionDatum* override_ptr = nullptr;
            if (fault == FaultInjection::SwapDatumVStep && b == Bipartition({1}, {1})) {
                corrupted.v_step = datum.L();  // moves the vector constraint to the top
                override_ptr = &corrupted;
            }
            ResolutionReport report =
                validate_resolution(b, fields, cfg.resolution_config(), override_ptr);
            validated = validated && report.pass;
            if (!report.pass) {
                for (const auto& f : report.fields)
                    if (!f.first_failure.empty())
                        failures.push_back(njson{{"b", b.key()},
                                                 {"q", f.q},
                                                 {"clause", f.first_failure}});
            }
        }
    ops.mark("resolution.resolution_datum");
    ops.mark("resolution.fibre_points");
    ops.mark("resolution.total_space_count");
    ops.mark("resolution.validate_resolution");
    r.details["validate_resolution_n_le"] = cfg.resolution_n;
    r.details["validated"] = validated;
    r.details["failures"] = failures;

    bool dims_match = true;
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n))
            dims_match =
                dims_match && total_space_dimension(resolution_datum(b)) == orbit_dimension(b);
    ops.mark("resolution.total_space_dimension");
    r.details["dimension_coherence_n_le_6"] = dims_match;

    r.pass = validated && dims_match;
    return r;
}

/// Pi table with the result cache in front of it.
inline PiTable cached_pi_table(int n, const RunConfig& cfg, const Cache& cache) {
    njson key_json{{"cmd", "pi-table"},
                   {"n", n},
                   {"fit_primes", cfg.fit_primes},
                   {"holdout", cfg.holdout_qs},
                   {"conjugates", cfg.fit_conjugates},
                   {"seed", cfg.seed}};
    std::string key = key_json.dump();
    if (auto hit = cache.get(key)) return pi_table_from_json(*hit);
    PiTable table = pi_table(n, cfg.fit_config(), cfg.threads);
    cache.put(key, to_json(table));
    return table;
}

inline SuiteResult run_pi_suite(const RunConfig& cfg, OpCoverage& ops, const Cache& cache) {
    SuiteResult r{"pi_polynomials", true, njson::object()};

    bool interp_ok = interpolate({{2, Int(3)}, {3, Int(4)}, {5, Int(6)}}).to_string() == "t+1" &&
                     interpolate({{2, Int(7)}, {3, Int(13)}, {5, Int(31)}}).to_string() ==
                         "t^2+t+1";
    ops.mark("pi.interpolate");
    r.details["interpolation_examples"] = interp_ok;

    std::vector<PiTable> tables;
    for (int n = 0; n <= cfg.pi_table_n; ++n) tables.push_back(cached_pi_table(n, cfg, cache));
    ops.mark("pi.fit_pi");
    ops.mark("pi.pi_table");

    bool certs = true, diagonal = true;
    long long entries = 0;
    for (const auto& table : tables)
        for (const auto& e : table.entries) {
            certs = certs && e.cert.pass();
            if (e.source == e.target) diagonal = diagonal && e.poly == Poly::constant(1);
            ++entries;
        }
    r.details["table_n"] = cfg.pi_table_n;
    r.details["table_entries"] = entries;
    r.details["certificates_pass"] = certs;
    r.details["diagonal_is_one"] = diagonal;

    bool frozen = true;
    if (cfg.pi_table_n >= 2) {
        const PiTable& t2 = tables[2];
        const PiPolynomial* a = t2.find(Bipartition({1}, {1}), Bipartition({}, {1, 1}));
        const PiPolynomial* b = t2.find(Bipartition({1}, {1}), Bipartition({}, {2}));
        frozen = a && b && a->poly.to_string() == "t+1" && b->poly == Poly::constant(1);
    }
    r.details["pinned_entries"] = frozen;

    bool independence = true;
    for (const auto& table : tables)
        for (const auto& e : table.entries) {
            if (!e.cert.fitted) continue;
            auto [set_a, set_b] = field_independence_sets(e.cert.degree_bound);
            independence = independence &&
                           field_independence_check(e.source, e.target, set_a, set_b,
                                                    cfg.fit_config());
        }
    ops.mark("pi.field_independence_check");
    r.details["field_independence"] = independence;

    bool identity = true;
    for (int q : cfg.resolution_qs) {
        Fq F = Fq::of_order(q);
        for (int n = 0; n <= cfg.pi_table_n; ++n) {
            OrbitCensus census = classify_all(n, F, cfg.census_config());
            for (const auto& source : enumerate_bipartitions(n))
                identity = identity && global_identity_check(source, F, census, tables[n]);
        }
    }
    ops.mark("pi.global_identity_check");
    r.details["global_identity_q"] = cfg.resolution_qs;
    r.details["global_identity"] = identity;

    r.pass = interp_ok && certs && diagonal && frozen && independence && identity;
    return r;
}

/// Numerical shadow of the paving question: every probed fibre count must
/// interpolate to a natural-coefficient polynomial. Probed targets are those
/// whose vector leaves the kernel of x (some mu_i >= 2). Certificate
/// failures are findings, not errors.
inline njson probe_paving(int n, const std::vector<int>& q_list, const RunConfig& cfg) {
    if (n > 4) throw bad_argument("probe_paving: n must be at most 4");
    njson entries = njson::array();
    njson findings = njson::array();
    if (q_list.empty()) return njson{{"n", n}, {"entries", entries}, {"findings", findings}};
    FitConfig fit = cfg.fit_config();
    fit.fit_primes = q_list;
    fit.holdout_qs.clear();
    auto all = enumerate_bipartitions(n);
    for (const auto& target : all) {
        if (target.mu().part(0) < 2) continue;  // v stays in ker x
        for (const auto& source : all) {
            njson row{{"source", source.key()}, {"target", target.key()}};
            try {
                PiPolynomial e = fit_pi(source, target, fit);
                row["pi"] = e.poly.to_string();
                row["coeffs"] = to_json(e.poly);
                row["certified"] = e.cert.pass();
            } catch (const certificate_error& err) {
                row["pi"] = err.record.poly.to_string();
                row["certified"] = false;
                row["failure"] = err.what();
                findings.push_back(row);
            }
            entries.push_back(row);
        }
    }
    return njson{{"n", n}, {"entries", entries}, {"findings", findings}};
}

inline SuiteResult run_paving_suite(const RunConfig& cfg, OpCoverage& ops) {
    SuiteResult r{"paving_probe", true, njson::object()};
    njson probe = probe_paving(cfg.probe_n, cfg.fit_primes, cfg);
    ops.mark("cli.probe_paving");
    r.details["n"] = cfg.probe_n;
    r.details["entries"] = probe["entries"].size();
    r.details["findings"] = probe["findings"];
    r.pass = probe["findings"].empty();
    return r;
}

/// One JSON object per event, for monitoring long runs. Logging must never
/// touch the result payload, so it goes through this side channel only.
using EventLogger = std::function<void(const njson&)>;

/// Runs every suite, asserts operation coverage, and returns the summary.
inline njson run_verify_all(const RunConfig& cfg, const Cache& cache,
                            FaultInjection fault = FaultInjection::None,
                            const EventLogger& log = {}) {
    cfg.validate();
    OpCoverage ops;
    std::vector<SuiteResult> results;
    auto run = [&](SuiteResult suite) {
        if (log) log(njson{{"event", "suite_done"}, {"suite", suite.name}, {"pass", suite.pass}});
        results.push_back(std::move(suite));
    };
    run(run_bipartitions_suite(cfg, ops));
    run(run_linalg_suite(cfg, ops));
    run(run_classification_suite(cfg, ops));
    run(run_census_suite(cfg, ops));
    run(run_slice_suite(cfg, ops));
    run(run_resolution_suite(cfg, ops, fault));
    run(run_pi_suite(cfg, ops, cache));
    run(run_paving_suite(cfg, ops));

    enumerate_listing(std::min(3, std::max(1, cfg.pi_table_n)));
    ops.mark("cli.enumerate");
    ops.mark("cli.verify_all");

    auto missing = ops.missing();
    bool pass = missing.empty();
    njson suites = njson::array();
    for (const auto& s : results) {
        pass = pass && s.pass;
        suites.push_back(njson{{"name", s.name}, {"pass", s.pass}, {"details", s.details}});
    }
    return njson{{"config",
                  njson{{"seed", cfg.seed},
                        {"node_budget", cfg.node_budget},
                        {"census_budget", cfg.census_budget},
                        {"slice_n", cfg.slice_n},
                        {"roundtrip_n", cfg.roundtrip_n},
                        {"resolution_n", cfg.resolution_n},
                        {"pi_table_n", cfg.pi_table_n},
                        {"fit_primes", cfg.fit_primes},
                        {"holdout", cfg.holdout_qs}}},
                 {"suites", suites},
                 {"coverage_complete", missing.empty()},
                 {"coverage_missing", missing},
                 {"pass", pass}};
}

}  // namespace econe
