#pragma once
// JSON (and CSV) serialization for every public artifact. All output goes
// through ordered_json so runs with equal inputs are byte-identical.

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "econe/bigint.hpp"
#include "econe/cone.hpp"
#include "econe/errors.hpp"
#include "econe/linalg.hpp"
#include "econe/partition.hpp"
#include "econe/pi.hpp"
#include "econe/resolution.hpp"
#include "econe/slice.hpp"

namespace econe {

using njson = nlohmann::ordered_json;

/// Big integers as JSON numbers when they fit 64 bits, decimal strings otherwise.
inline njson json_int(const Int& v) {
    if (fits_i64(v)) return njson(to_i64(v));
    return njson(v.str());
}

inline Int parse_int(const njson& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

inline njson to_json(const Partition& p) { return njson(p.parts()); }

inline njson to_json(const Bipartition& b) {
    return njson{{"mu", b.mu().parts()}, {"nu", b.nu().parts()}};
}

inline Bipartition bipartition_from_json(const njson& j) {
    return Bipartition(Partition(j.at("mu").get<std::vector<int>>()),
                       Partition(j.at("nu").get<std::vector<int>>()));
}

/// Field elements are integers (coefficients packed little-endian base p for k > 1).
inline njson to_json(const MatFF& m) {
    return njson{{"p", m.F.p()}, {"k", m.F.k()}, {"rows", m.rows}, {"cols", m.cols},
                 {"entries", m.a}};
}

inline MatFF matrix_from_json(const njson& j) {
    int p = j.at("p").get<int>(), k = j.at("k").get<int>();
    int q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    Fq F = (k == 1) ? Fq::prime(p) : Fq::of_order(q);
    MatFF m(F, j.at("rows").get<int>(), j.at("cols").get<int>());
    m.a = j.at("entries").get<std::vector<int>>();
    if (m.a.size() != static_cast<std::size_t>(m.rows) * m.cols)
        throw bad_argument("matrix entries length mismatch");
    return m;
}

inline njson to_json(const Subspace& s) {
    return njson{{"ambient", s.ambient()}, {"dim", s.dim()}, {"rows", s.rows()}};
}

inline njson to_json(const OrbitCensus& c) {
    njson counts = njson::object();
    for (const auto& [b, v] : c.counts) counts[b.key()] = v;
    return njson{{"n", c.n}, {"q", c.q}, {"total", c.total()}, {"counts", counts}};
}

inline njson to_json(const SliceCertificate& c) {
    njson checks = njson::array();
    for (const auto& k : c.checks)
        checks.push_back(
            njson{{"name", k.name}, {"expected", k.expected}, {"actual", k.actual},
                  {"pass", k.pass()}});
    return njson{{"b", c.b.key()},
                 {"n", c.n},
                 {"dim_T", c.dim_t},
                 {"dim_U", c.dim_u},
                 {"dim_Exv", c.dim_exv},
                 {"dim_tangent", c.dim_tangent},
                 {"checks", checks},
                 {"pass", c.pass}};
}

inline njson to_json(const ContractionCertificate& c) {
    return njson{{"b", c.b.key()},
                 {"v_fixed", c.v_fixed},
                 {"x_fixed", c.x_fixed},
                 {"t_weights", c.t_weights},
                 {"u_weights", c.u_weights},
                 {"t_weights_positive", c.t_weights_positive},
                 {"u_weights_positive", c.u_weights_positive},
                 {"pass", c.pass}};
}

inline njson to_json(const ResolutionDatum& d) {
    return njson{{"source", d.source.key()}, {"dims", d.dims}, {"v_step", d.v_step}};
}

inline njson to_json(const FibreReport& r) {
    njson j{{"source", r.datum.source.key()},
            {"target", r.target_orbit.key()},
            {"q", r.q},
            {"count", r.count},
            {"nodes_visited", r.nodes_visited}};
    if (r.flags) {
        njson flags = njson::array();
        for (const auto& chain : *r.flags) {
            njson fl = njson::array();
            for (const auto& w : chain) fl.push_back(to_json(w));
            flags.push_back(std::move(fl));
        }
        j["flags"] = std::move(flags);
    }
    return j;
}

inline njson to_json(const ResolutionReport& r) {
    njson fields = njson::array();
    for (const auto& f : r.fields) {
        njson counts = njson::object();
        for (const auto& [key, c] : f.fibre_counts) counts[key] = c;
        fields.push_back(njson{{"q", f.q},
                               {"fibre_at_rep", f.fibre_at_rep},
                               {"fibre_counts", counts},
                               {"clause_a", f.clause_a},
                               {"clause_b", f.clause_b},
                               {"clause_c", f.clause_c},
                               {"clause_d", f.clause_d},
                               {"stratified_sum", json_int(f.stratified_sum)},
                               {"total_space_count", json_int(f.total_count)},
                               {"first_failure", f.first_failure}});
    }
    return njson{{"b", r.b.key()}, {"fields", fields}, {"pass", r.pass}};
}

inline njson to_json(const Poly& p) {
    njson coeffs = njson::array();
    for (const Int& c : p.c) coeffs.push_back(json_int(c));
    return coeffs;
}

inline Poly poly_from_json(const njson& j) {
    Poly p;
    for (const auto& c : j) p.c.push_back(parse_int(c));
    return p;
}

inline njson to_json(const PiCertificate& c) {
    return njson{{"fit_q", c.fit_qs},
                 {"holdout_q", c.holdout_qs},
                 {"degree_bound", c.degree_bound},
                 {"fitted", c.fitted},
                 {"interpolation_integral", c.interpolation_integral},
                 {"fit_exact", c.fit_exact},
                 {"holdout_exact", c.holdout_exact},
                 {"coeffs_natural", c.coeffs_natural},
                 {"degree_within_bound", c.degree_within_bound},
                 {"orbit_constant", c.orbit_constant},
                 {"diagonal_is_one", c.diagonal_is_one},
                 {"value_at_one", json_int(c.value_at_one)},
                 {"seed", c.seed},
                 {"pass", c.pass()}};
}

inline PiCertificate certificate_from_json(const njson& j) {
    PiCertificate c;
    c.fit_qs = j.at("fit_q").get<std::vector<int>>();
    c.holdout_qs = j.at("holdout_q").get<std::vector<int>>();
    c.degree_bound = j.at("degree_bound").get<int>();
    c.fitted = j.at("fitted").get<bool>();
    c.interpolation_integral = j.at("interpolation_integral").get<bool>();
    c.fit_exact = j.at("fit_exact").get<bool>();
    c.holdout_exact = j.at("holdout_exact").get<bool>();
    c.coeffs_natural = j.at("coeffs_natural").get<bool>();
    c.degree_within_bound = j.at("degree_within_bound").get<bool>();
    c.orbit_constant = j.at("orbit_constant").get<bool>();
    c.diagonal_is_one = j.at("diagonal_is_one").get<bool>();
    c.value_at_one = parse_int(j.at("value_at_one"));
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

inline njson to_json(const PiPolynomial& e) {
    return njson{{"source", e.source.key()},
                 {"target", e.target.key()},
                 {"coeffs", to_json(e.poly)},
                 {"certificate", to_json(e.cert)}};
}

inline PiPolynomial pi_entry_from_json(const njson& j) {
    PiPolynomial e;
    e.source = Bipartition::parse_key(j.at("source").get<std::string>());
    e.target = Bipartition::parse_key(j.at("target").get<std::string>());
    e.poly = poly_from_json(j.at("coeffs"));
    e.cert = certificate_from_json(j.at("certificate"));
    return e;
}

inline njson to_json(const PiTable& t) {
    njson entries = njson::array();
    for (const auto& e : t.entries) entries.push_back(to_json(e));
    return njson{{"n", t.n}, {"entries", entries}};
}

inline PiTable pi_table_from_json(const njson& j) {
    PiTable t;
    t.n = j.at("n").get<int>();
    for (const auto& e : j.at("entries")) t.entries.push_back(pi_entry_from_json(e));
    return t;
}

/// CSV mirror of the table JSON: one row per entry.
inline std::string pi_table_csv(const PiTable& t) {
    std::string out = "source,target,degree,coeffs,degree_bound,fit_q,holdout_q,pass\n";
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += std::to_string(v[i]);
        }
        return s;
    };
    for (const auto& e : t.entries) {
        std::string coeffs;
        for (std::size_t i = 0; i < e.poly.c.size(); ++i) {
            if (i) coeffs += ';';
            coeffs += e.poly.c[i].str();
        }
        out += "\"" + e.source.key() + "\",\"" + e.target.key() + "\"," +
               std::to_string(e.poly.degree()) + ",\"" + coeffs + "\"," +
               std::to_string(e.cert.degree_bound) + ",\"" + join(e.cert.fit_qs) + "\",\"" +
               join(e.cert.holdout_qs) + "\"," + (e.cert.pass() ? "true" : "false") + "\n";
    }
    return out;
}

/// Q_n listing with orbit and total-space dimensions.
inline njson enumerate_listing(int n) {
    njson rows = njson::array();
    for (const auto& b : enumerate_bipartitions(n)) {
        rows.push_back(njson{{"b", b.key()},
                             {"mu", b.mu().parts()},
                             {"nu", b.nu().parts()},
                             {"orbit_dim", orbit_dimension(b)},
                             {"resolution_dims", resolution_datum(b).dims},
                             {"v_step", resolution_datum(b).v_step}});
    }
    return njson{{"n", n}, {"count", rows.size()}, {"rows", rows}};
}

inline std::string dump_json(const njson& j) { return j.dump(2) + "\n"; }

}  // namespace econe
