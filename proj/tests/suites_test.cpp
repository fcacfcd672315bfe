#include <doctest.h>

#include "cxvec/suites.hpp"

using namespace cxvec;
using namespace cxvec::suites;

TEST_SUITE("suites") {

TEST_CASE("every table suite runs clean at small trial counts") {
    SuiteConfig cfg;
    cfg.seed = 2024;
    cfg.trials = 40;
    for (const auto& name : suite_names()) {
        std::vector<PropertyResult> results = run_suite(name, cfg);
        REQUIRE_FALSE(results.empty());
        for (const auto& r : results) {
            INFO(name, "/", r.name, ": ", r.first_counterexample);
            CHECK(r.failures == 0);
        }
    }
}

TEST_CASE("suite results are deterministic in the seed") {
    SuiteConfig cfg;
    cfg.seed = 77;
    cfg.trials = 25;
    auto a = run_suite("table5", cfg);
    auto b = run_suite("table5", cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].worst_residual == b[i].worst_residual);
        CHECK(a[i].failures == b[i].failures);
    }
}

TEST_CASE("'all' concatenates the tables and bad names are rejected") {
    SuiteConfig cfg;
    cfg.trials = 5;
    auto all = run_suite("all", cfg);
    std::size_t total = 0;
    for (const auto& name : suite_names()) {
        total += run_suite(name, cfg).size();
    }
    CHECK(all.size() == total);
    CHECK_THROWS_AS(run_suite("bogus", cfg), UsageError);
}

TEST_CASE("a broken property is actually caught") {
    // sanity check on the harness itself: a property that always fails must
    // report its counterexample
    SuiteConfig cfg;
    cfg.trials = 3;
    auto result = suites::detail::run_property(
        "always_fails", cfg, cfg.trials, [](Xoshiro256&) {
            return suites::detail::TrialOutcome{false, 1.0, "witness"};
        });
    CHECK(result.failures == 3);
    CHECK_FALSE(result.passed());
    CHECK(result.first_counterexample.find("witness") != std::string::npos);
    CHECK(result.first_counterexample.find("seed") != std::string::npos);
}

} // TEST_SUITE
