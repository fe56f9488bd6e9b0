#pragma once

// Random-tournament experiment: sample, color the identity-order right graph
// exactly, and compare against n / (2 log2 n). chi(right) under any single
// order is a lower bound on the maximum chromatic number over acyclic
// subgraphs, so each record is a certified lower bound for its sample.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "acyclo/chromatic.hpp"
#include "acyclo/io.hpp"
#include "acyclo/orderings.hpp"
#include "acyclo/rng.hpp"

namespace acyclo {

struct ExperimentConfig {
    std::vector<int> sizes;
    int trials = 1;
    std::uint64_t seed = 0;
    int chi_exact_limit = 40;
};

struct ExperimentRecord {
    int n = 0;
    std::uint64_t seed = 0;  // per-task seed, derived from (config seed, n, trial)
    int trial = 0;
    int chi_right_identity = 0;
    double ratio = 0.0;  // chi / (n / (2 log2 n)), denominator 1 when log2 n = 0
    long long elapsed_ms = 0;
};

inline double log_ratio_denominator(int n) {
    double l = std::log2(static_cast<double>(n));
    return l == 0.0 ? 1.0 : static_cast<double>(n) / (2.0 * l);
}

inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw PreconditionViolated("run_experiment: trials must be >= 1");
    for (int n : cfg.sizes) {
        if (n < 1) throw PreconditionViolated("run_experiment: sizes must be positive");
        if (n > cfg.chi_exact_limit) throw SizeLimitExceeded("run_experiment: size above exact coloring limit");
    }
    SolverLimits solver;
    solver.chromatic_max_n = cfg.chi_exact_limit;
    std::vector<ExperimentRecord> records;
    records.reserve(cfg.sizes.size() * static_cast<size_t>(cfg.trials));
    for (int n : cfg.sizes) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            auto t0 = std::chrono::steady_clock::now();
            ExperimentRecord rec;
            rec.n = n;
            rec.trial = trial;
            rec.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
            Tournament g = random_tournament(n, rec.seed);
            rec.chi_right_identity = chromatic_number(right_underlying(g, LinearOrder::identity(n)), solver).k;
            rec.ratio = rec.chi_right_identity / log_ratio_denominator(n);
            rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            records.push_back(rec);
        }
    }
    std::sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
        return a.n != b.n ? a.n < b.n : a.trial < b.trial;
    });
    return records;
}

inline std::string experiment_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "n,seed,trial,chi_right_identity,ratio,elapsed_ms\n";
    char buf[160];
    for (const ExperimentRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%d,%llu,%d,%d,%.6f,%lld\n", r.n,
                      static_cast<unsigned long long>(r.seed), r.trial, r.chi_right_identity, r.ratio,
                      r.elapsed_ms);
        out += buf;
    }
    return out;
}

// Config file: one "key=value" per line; sizes is comma-separated.
//   sizes=16,24,32
//   trials=20
//   seed=1
//   chi_exact_limit=40
inline ExperimentConfig parse_experiment_config(std::string_view text) {
    ExperimentConfig cfg;
    bool have_sizes = false;
    for (std::string_view line : detail::split_lines(text)) {
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw FormatError("config lines must be key=value");
        std::string_view key = line.substr(0, eq);
        std::string_view value = line.substr(eq + 1);
        if (key == "sizes") {
            std::string csv(value);
            for (char& c : csv)
                if (c == ',') c = ' ';
            for (long long n : detail::parse_int_list(csv)) cfg.sizes.push_back(static_cast<int>(n));
            have_sizes = true;
        } else if (key == "trials") {
            cfg.trials = static_cast<int>(detail::parse_ints(value, 1)[0]);
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(detail::parse_ints(value, 1)[0]);
        } else if (key == "chi_exact_limit") {
            cfg.chi_exact_limit = static_cast<int>(detail::parse_ints(value, 1)[0]);
        } else {
            throw FormatError("unknown config key: " + std::string(key));
        }
    }
    if (!have_sizes || cfg.sizes.empty()) throw FormatError("config must set sizes");
    return cfg;
}

}  // namespace acyclo
