// econe: exact enumeration, certification and polynomial fitting for orbits
// and resolution fibres of the enhanced nilpotent cone over finite fields.
//
// Subcommands: enumerate, identify, census, verify-slice, validate-resolution,
// count-fibre, fit-pi, pi-table, probe-paving, verify-all.
// Exit codes: 0 success, 2 validation failure, 3 budget exceeded, 4 bad arguments.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "econe/econe.hpp"

namespace {

using econe::njson;

struct GlobalOpts {
    std::uint64_t seed = 0xC0FFEE;
    long long budget = econe::kDefaultNodeBudget;
    bool budget_set = false;
    std::string cache_dir;
    std::string out;
    std::string format = "json";
    bool verbose = false;
    bool no_cache = false;
    unsigned threads = 0;
};

econe::EventLogger make_logger(const GlobalOpts& g) {
    if (!g.verbose) return {};
    return [](const njson& event) { std::cerr << event.dump() << "\n"; };
}

econe::RunConfig make_config(const GlobalOpts& g) {
    econe::RunConfig cfg;
    cfg.seed = g.seed;
    cfg.node_budget = g.budget;
    if (g.budget_set) cfg.census_budget = g.budget;
    cfg.cache_dir = econe::resolve_cache_dir(g.cache_dir, g.no_cache);
    cfg.format = g.format;
    cfg.threads = g.threads;
    cfg.validate();
    return cfg;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out);
    if (!out) throw econe::bad_argument("cannot open output file " + g.out);
    out << text;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

// Elements are given as packed integers in [0, q); for prime fields any
// integer is accepted and reduced mod p.
int parse_element(const std::string& tok, const econe::Fq& F) {
    long long v = std::stoll(tok);
    if (F.k() == 1) return F.scalar(v);
    if (v < 0 || v >= F.q())
        throw econe::bad_argument("element " + tok + " out of range for GF(" +
                                  std::to_string(F.q()) + ")");
    return static_cast<int>(v);
}

econe::MatFF parse_matrix(const std::string& s, const econe::Fq& F) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        rows.push_back({});
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ','))
            if (!tok.empty()) rows.back().push_back(parse_element(tok, F));
    }
    if (rows.empty()) return econe::MatFF(F, 0, 0);
    econe::MatFF m(F, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            throw econe::bad_argument("matrix rows have unequal lengths");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string safe_filename(const std::string& key) {
    std::string s = key;
    for (char& c : s)
        if (c == '|') c = '_';
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on the enhanced nilpotent cone over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for all derived randomness");
    app.add_option("--budget", g.budget, "work budget for enumeration jobs")
        ->each([&g](const std::string&) { g.budget_set = true; });
    app.add_option("--cache-dir", g.cache_dir,
                   "result cache directory (default .econe-cache, or ECONE_CACHE_DIR)");
    app.add_flag("--no-cache", g.no_cache, "disable the result cache");
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--verbose", g.verbose, "emit one JSON progress object per line on stderr");
    app.add_option("--threads", g.threads, "worker pool size for independent jobs (0 = hardware)");

    int n = 0;
    std::string q_list = "2,3,5", q_single = "2";
    std::string mu_str, nu_str, target_mu_str, target_nu_str;
    std::string v_str, x_str;
    std::string fit_primes_str, holdout_str;
    bool list_flags = false;
    std::string census_mode = "auto";
    bool inject_datum_fault = false;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list Q_n with orbit dimensions");
    cmd_enumerate->add_option("--n", n, "total size")->required();

    auto* cmd_identify = app.add_subcommand("identify", "classify a point (v, x) of V x N");
    cmd_identify->add_option("--q", q_single, "field order");
    cmd_identify->add_option("--v", v_str, "vector, comma-separated")->required();
    cmd_identify->add_option("--x", x_str, "matrix, rows ';'-separated, entries ','-separated")
        ->required();

    auto* cmd_census = app.add_subcommand("census", "classify every point of V x N over F_q");
    cmd_census->add_option("--n", n, "ambient dimension")->required();
    cmd_census->add_option("--q", q_single, "field order");
    cmd_census->add_option("--mode", census_mode, "auto, brute or by-class")
        ->check(CLI::IsMember({"auto", "brute", "by-class"}));

    auto* cmd_slice = app.add_subcommand("verify-slice", "emit slice certificates per bipartition");
    cmd_slice->add_option("--n", n, "verify all bipartitions of 1..n")->required();

    auto* cmd_vres = app.add_subcommand("validate-resolution", "validate flag data against orbits");
    cmd_vres->add_option("--n", n, "validate all bipartitions of 1..n")->required();
    cmd_vres->add_option("--q", q_list, "comma-separated field orders");

    auto* cmd_fibre = app.add_subcommand("count-fibre", "count (or list) fibre flags over a point");
    cmd_fibre->add_option("--mu", mu_str, "source mu, comma-separated parts");
    cmd_fibre->add_option("--nu", nu_str, "source nu");
    cmd_fibre->add_option("--target-mu", target_mu_str, "target orbit mu");
    cmd_fibre->add_option("--target-nu", target_nu_str, "target orbit nu");
    cmd_fibre->add_option("--q", q_single, "field order");
    cmd_fibre->add_flag("--list", list_flags, "include the flags themselves");

    auto* cmd_fit = app.add_subcommand("fit-pi", "fit and certify one fibre-count polynomial");
    cmd_fit->add_option("--mu", mu_str, "source mu");
    cmd_fit->add_option("--nu", nu_str, "source nu");
    cmd_fit->add_option("--target-mu", target_mu_str, "target orbit mu");
    cmd_fit->add_option("--target-nu", target_nu_str, "target orbit nu");
    cmd_fit->add_option("--fit-primes", fit_primes_str, "comma-separated fit primes");
    cmd_fit->add_option("--holdout", holdout_str, "comma-separated holdout orders");

    auto* cmd_table = app.add_subcommand("pi-table", "fit the full certified table for Q_n");
    cmd_table->add_option("--n", n, "total size")->required();
    cmd_table->add_option("--fit-primes", fit_primes_str, "comma-separated fit primes");
    cmd_table->add_option("--holdout", holdout_str, "comma-separated holdout orders");

    auto* cmd_probe = app.add_subcommand("probe-paving",
                                         "probe polynomiality over targets with v outside ker x");
    cmd_probe->add_option("--n", n, "total size (at most 4)")->required();
    cmd_probe->add_option("--q", q_list, "comma-separated fit primes for the probe");

    auto* cmd_all = app.add_subcommand("verify-all", "run every validation suite");
    int n_cap = 0;
    cmd_all->add_option("--n", n_cap, "cap every suite at this total size");
    cmd_all->add_flag("--inject-datum-fault", inject_datum_fault,
                      "test hook: corrupt one flag datum to exercise failure paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    }

    try {
        econe::RunConfig cfg = make_config(g);
        econe::Cache cache(cfg.cache_dir);

        if (*cmd_enumerate) {
            emit(g, econe::dump_json(econe::enumerate_listing(n)));
        } else if (*cmd_identify) {
            econe::Fq F = econe::Fq::of_order(std::stoi(q_single));
            econe::MatFF x = parse_matrix(x_str, F);
            std::vector<int> v;
            for (int c : parse_int_list(v_str)) v.push_back(parse_element(std::to_string(c), F));
            econe::Bipartition b = econe::identify_orbit(econe::EnhancedPoint{F, v, x});
            njson out = econe::to_json(b);
            out["key"] = b.key();
            emit(g, econe::dump_json(out));
        } else if (*cmd_census) {
            econe::CensusConfig cc = cfg.census_config();
            if (census_mode == "brute") cc.mode = econe::CensusMode::Brute;
            if (census_mode == "by-class") cc.mode = econe::CensusMode::ByClass;
            econe::OrbitCensus census =
                econe::classify_all(n, econe::Fq::of_order(std::stoi(q_single)), cc);
            emit(g, econe::dump_json(econe::to_json(census)));
        } else if (*cmd_slice) {
            std::vector<econe::Bipartition> all;
            for (int m = 1; m <= n; ++m)
                for (const auto& b : econe::enumerate_bipartitions(m)) all.push_back(b);
            std::vector<njson> certs(all.size());
            econe::parallel_for(all.size(), cfg.threads, [&](std::size_t i) {
                econe::SliceCertificate tc = econe::verify_transversality(all[i]);
                econe::ContractionCertificate cc = econe::verify_contraction(all[i]);
                certs[i] = njson{{"b", all[i].key()},
                                 {"transversality", econe::to_json(tc)},
                                 {"contraction", econe::to_json(cc)},
                                 {"pass", tc.pass && cc.pass}};
            });
            njson summary = njson::array();
            bool all_pass = true;
            for (std::size_t i = 0; i < all.size(); ++i) {
                bool pass = certs[i]["pass"].get<bool>();
                all_pass = all_pass && pass;
                if (!g.out.empty()) {
                    std::filesystem::create_directories(g.out);
                    std::ofstream f(std::filesystem::path(g.out) /
                                    (safe_filename(all[i].key()) + ".json"));
                    f << econe::dump_json(certs[i]);
                }
                summary.push_back(njson{{"b", all[i].key()}, {"pass", pass}});
            }
            std::cout << econe::dump_json(
                njson{{"n", n}, {"certificates", summary}, {"pass", all_pass}});
            if (!all_pass) return 2;
        } else if (*cmd_vres) {
            std::vector<econe::Fq> fields;
            for (int q : parse_int_list(q_list)) fields.push_back(econe::Fq::of_order(q));
            njson reports = njson::array();
            bool all_pass = true;
            for (int m = 1; m <= n; ++m)
                for (const auto& b : econe::enumerate_bipartitions(m)) {
                    econe::ResolutionReport rep =
                        econe::validate_resolution(b, fields, cfg.resolution_config());
                    all_pass = all_pass && rep.pass;
                    reports.push_back(econe::to_json(rep));
                }
            emit(g, econe::dump_json(njson{{"n", n}, {"reports", reports}, {"pass", all_pass}}));
            if (!all_pass) return 2;
        } else if (*cmd_fibre) {
            econe::Bipartition source(econe::Partition::parse(mu_str),
                                      econe::Partition::parse(nu_str));
            econe::Bipartition target(econe::Partition::parse(target_mu_str),
                                      econe::Partition::parse(target_nu_str));
            if (source.n() != target.n())
                throw econe::bad_argument("source and target have different sizes");
            econe::Fq F = econe::Fq::of_order(std::stoi(q_single));
            auto [pt, frame] = econe::representative(target, F);
            econe::FibreReport rep = econe::fibre_points(econe::resolution_datum(source), pt,
                                                         list_flags, cfg.node_budget);
            emit(g, econe::dump_json(econe::to_json(rep)));
        } else if (*cmd_fit) {
            econe::Bipartition source(econe::Partition::parse(mu_str),
                                      econe::Partition::parse(nu_str));
            econe::Bipartition target(econe::Partition::parse(target_mu_str),
                                      econe::Partition::parse(target_nu_str));
            econe::FitConfig fit = cfg.fit_config();
            if (!fit_primes_str.empty()) fit.fit_primes = parse_int_list(fit_primes_str);
            if (!holdout_str.empty()) fit.holdout_qs = parse_int_list(holdout_str);
            econe::PiPolynomial entry = econe::fit_pi(source, target, fit);
            njson out = econe::to_json(entry);
            out["pi"] = entry.poly.to_string();
            emit(g, econe::dump_json(out));
        } else if (*cmd_table) {
            if (n > 3)
                throw econe::bad_argument(
                    "pi-table builds full tables for n <= 3; use probe-paving for n = 4");
            econe::RunConfig table_cfg = cfg;
            if (!fit_primes_str.empty()) table_cfg.fit_primes = parse_int_list(fit_primes_str);
            if (!holdout_str.empty()) table_cfg.holdout_qs = parse_int_list(holdout_str);
            table_cfg.validate();
            econe::EventLogger log = make_logger(g);
            if (log) log(njson{{"event", "pi_table_start"}, {"n", n}});
            econe::PiTable table = econe::cached_pi_table(n, table_cfg, cache);
            if (log)
                log(njson{{"event", "pi_table_done"},
                          {"n", n},
                          {"entries", table.entries.size()}});
            if (cfg.format == "csv")
                emit(g, econe::pi_table_csv(table));
            else
                emit(g, econe::dump_json(econe::to_json(table)));
        } else if (*cmd_probe) {
            njson report = econe::probe_paving(n, parse_int_list(q_list), cfg);
            emit(g, econe::dump_json(report));
            if (!report["findings"].empty()) return 2;
        } else if (*cmd_all) {
            econe::RunConfig run_cfg = n_cap > 0 ? cfg.clamped(n_cap) : cfg;
            econe::FaultInjection fault = inject_datum_fault
                                              ? econe::FaultInjection::SwapDatumVStep
                                              : econe::FaultInjection::None;
            njson summary = econe::run_verify_all(run_cfg, cache, fault, make_logger(g));
            emit(g, econe::dump_json(summary));
            if (!summary["pass"].get<bool>()) return 2;
        }
        return 0;
    } catch (const econe::budget_exceeded& e) {
        std::cerr << "{\"error\":\"budget_exceeded\",\"message\":" << njson(e.what()).dump()
                  << "}\n";
        return 3;
    } catch (const econe::bad_argument& e) {
        std::cerr << "{\"error\":\"bad_argument\",\"message\":" << njson(e.what()).dump() << "}\n";
        return 4;
    } catch (const econe::error& e) {
        std::cerr << "{\"error\":\"validation\",\"message\":" << njson(e.what()).dump() << "}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"internal\",\"message\":" << njson(e.what()).dump() << "}\n";
        return 2;
    }
}
