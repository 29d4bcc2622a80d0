#pragma once
// Run configuration shared by the CLI and the validation suites. One seed
// drives all randomness; per-job seeds are derived from it so results do not
// depend on execution order.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "econe/cone.hpp"
#include "econe/errors.hpp"
#include "econe/field.hpp"
#include "econe/pi.hpp"
#include "econe/resolution.hpp"

namespace econe {

struct RunConfig {
    std::uint64_t seed = 0xC0FFEE;
    long long node_budget = kDefaultNodeBudget;
    long long census_budget = 100'000'000;
    long long census_brute_limit = 1 << 20;

    std::vector<int> fit_primes{2, 3, 5, 7, 11, 13};
    std::vector<int> holdout_qs{17, 4, 9};
    int fit_conjugates = 3;
    int resolution_conjugates = 5;

    // Per-suite reach, matching the acceptance parameters.
    int slice_n = 6;
    int roundtrip_n = 6;
    int invariance_n = 4;
    int invariance_samples = 20;
    int resolution_n = 4;
    std::vector<int> resolution_qs{2, 3, 5};
    std::vector<std::pair<int, int>> census_cases{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    int pi_table_n = 3;
    int probe_n = 3;

    std::string cache_dir;  // empty disables the cache
    std::string format = "json";
    unsigned threads = 0;  // worker pool size for independent jobs; 0 = hardware

    void validate() const {
        if (node_budget <= 0 || census_budget <= 0) throw bad_argument("budgets must be positive");
        for (std::size_t i = 0; i < fit_primes.size(); ++i) {
            if (!is_prime(fit_primes[i]))
                throw bad_argument("fit prime " + std::to_string(fit_primes[i]) + " is not prime");
            if (i > 0 && fit_primes[i] <= fit_primes[i - 1])
                throw bad_argument("fit primes must be strictly increasing");
        }
        for (int q : holdout_qs) Fq::of_order(q);  // throws on unsupported orders
        for (int q : resolution_qs) Fq::of_order(q);
        if (format != "json" && format != "csv") throw bad_argument("format must be json or csv");
    }

    /// Caps every per-suite n (smoke configurations).
    RunConfig clamped(int n_cap) const {
        RunConfig c = *this;
        c.slice_n = std::min(c.slice_n, n_cap);
        c.roundtrip_n = std::min(c.roundtrip_n, n_cap);
        c.invariance_n = std::min(c.invariance_n, n_cap);
        c.resolution_n = std::min(c.resolution_n, n_cap);
        c.pi_table_n = std::min(c.pi_table_n, n_cap);
        c.probe_n = std::min(c.probe_n, n_cap);
        std::vector<std::pair<int, int>> cases;
        for (auto [n, q] : census_cases) {
            std::pair<int, int> capped{std::min(n, n_cap), q};
            bool seen = false;
            for (auto& e : cases) seen = seen || e == capped;
            if (!seen) cases.push_back(capped);
        }
        c.census_cases = std::move(cases);
        return c;
    }

    CensusConfig census_config() const {
        return CensusConfig{CensusMode::Auto, census_budget, census_brute_limit};
    }

    FitConfig fit_config() const {
        return FitConfig{fit_primes, holdout_qs, fit_conjugates, seed, node_budget};
    }

    ResolutionValidationConfig resolution_config() const {
        return ResolutionValidationConfig{resolution_conjugates, seed, node_budget,
                                          census_config()};
    }
};

/// Cache directory resolution: explicit flag, then ECONE_CACHE_DIR, then a
/// local default. `disable` turns caching off entirely.
inline std::string resolve_cache_dir(const std::string& flag_value, bool disable = false) {
    if (disable) return "";
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ECONE_CACHE_DIR")) return env;
    return ".econe-cache";
}

}  // namespace econe
