#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace acyclo;
using namespace test_support;

namespace {

bool same_science(const std::vector<ExperimentRecord>& a, const std::vector<ExperimentRecord>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].n != b[i].n || a[i].seed != b[i].seed || a[i].trial != b[i].trial ||
            a[i].chi_right_identity != b[i].chi_right_identity || a[i].ratio != b[i].ratio)
            return false;
    return true;
}

}  // namespace

TEST_CASE("degenerate single-vertex experiment", "[experiment]") {
    auto records = run_experiment({{1}, 1, 9, 40});
    REQUIRE(records.size() == 1);
    CHECK(records[0].chi_right_identity == 1);
    CHECK(records[0].ratio == 1.0);  // denominator convention at log2(1) = 0
}

TEST_CASE("experiment output is deterministic and sorted", "[experiment]") {
    ExperimentConfig cfg{{12, 8}, 3, 77, 40};
    auto a = run_experiment(cfg);
    auto b = run_experiment(cfg);
    CHECK(same_science(a, b));
    REQUIRE(a.size() == 6);
    for (size_t i = 1; i < a.size(); ++i) {
        CHECK(std::pair(a[i - 1].n, a[i - 1].trial) < std::pair(a[i].n, a[i].trial));
    }
    CHECK(a.front().n == 8);
    for (const auto& rec : a) CHECK(rec.chi_right_identity >= 1);

    // distinct tasks get distinct derived seeds
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i].seed != a[i - 1].seed);
}

TEST_CASE("chi of the identity right graph is a lower bound for f", "[experiment]") {
    auto records = run_experiment({{5, 7}, 3, 5, 40});
    for (const auto& rec : records) {
        Tournament g = random_tournament(rec.n, rec.seed);
        CHECK(rec.chi_right_identity <= f_exact(g));
        CHECK(rec.chi_right_identity ==
              chromatic_number(right_underlying(g, LinearOrder::identity(rec.n))).k);
    }
}

TEST_CASE("csv format", "[experiment]") {
    auto records = run_experiment({{4}, 2, 3, 40});
    std::string csv = experiment_csv(records);
    CHECK(csv.rfind("n,seed,trial,chi_right_identity,ratio,elapsed_ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    // ratio printed with six decimals
    size_t first_line = csv.find('\n') + 1;
    std::string line = csv.substr(first_line, csv.find('\n', first_line) - first_line);
    size_t dot = line.rfind('.');
    REQUIRE(dot != std::string::npos);
    CHECK(line.substr(dot).find(',') == 7);  // ".dddddd," tail
}

TEST_CASE("experiment guards", "[experiment]") {
    CHECK_THROWS_AS(run_experiment({{50}, 1, 1, 40}), SizeLimitExceeded);
    CHECK_THROWS_AS(run_experiment({{0}, 1, 1, 40}), PreconditionViolated);
    CHECK_THROWS_AS(run_experiment({{4}, 0, 1, 40}), PreconditionViolated);
}

TEST_CASE("experiment config parsing", "[experiment]") {
    ExperimentConfig cfg = parse_experiment_config("sizes=16,24,32\ntrials=20\nseed=1\nchi_exact_limit=40\n");
    CHECK(cfg.sizes == std::vector<int>{16, 24, 32});
    CHECK(cfg.trials == 20);
    CHECK(cfg.seed == 1);
    CHECK(cfg.chi_exact_limit == 40);

    CHECK_THROWS_AS(parse_experiment_config("trials=20\n"), FormatError);
    CHECK_THROWS_AS(parse_experiment_config("sizes=4\nbogus=1\n"), FormatError);
    CHECK_THROWS_AS(parse_experiment_config("sizes 4\n"), FormatError);
}
