#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lwlab/littlewood.hpp>
#include <lwlab/suite.hpp>

using namespace lwlab;

TEST_CASE("group registry") {
    auto names = suite_group_names();
    CHECK(names.size() == 40);  // 20 equations + 20 subsystem groups
    for (TheoremId id : all_theorems()) CHECK(suite_has_group(theorem_name(id)));
    CHECK(suite_has_group("kratt"));
    CHECK(suite_has_group("sequences"));
    CHECK_FALSE(suite_has_group("nonsense"));
}

TEST_CASE("unknown selection throws") {
    SuiteConfig cfg;
    cfg.selections = {"nonsense"};
    CHECK_THROWS_AS(build_suite(cfg), std::invalid_argument);
}

TEST_CASE("selection expansion respects the k filter") {
    SuiteConfig cfg;
    cfg.selections = {"RG2_even_sum"};
    cfg.n_min = cfg.n_max = 1;
    cfg.w_min = cfg.w_max = 2;
    CHECK(build_suite(cfg).size() == 3);  // k = 0, 1, 2
    cfg.k_filter = 1;
    CHECK(build_suite(cfg).size() == 1);
}

TEST_CASE("serialization is stable and reflects failures") {
    SuiteConfig cfg;
    cfg.selections = {"BK_even1"};
    cfg.n_min = cfg.n_max = 1;
    cfg.w_min = cfg.w_max = 1;
    cfg.jobs = 2;
    auto a = run_suite(cfg);
    auto b = run_suite(cfg);
    CHECK(results_to_jsonl(a, cfg.seed, false) == results_to_jsonl(b, cfg.seed, false));
    CHECK(results_to_jsonl(a, cfg.seed, false).find("\"equal\":true") != std::string::npos);
    CHECK(results_to_jsonl(a, cfg.seed, false).find("\"summary\"") != std::string::npos);

    CheckResult fake;
    fake.name = "fake";
    fake.with("sign", "-").with("n", -3);
    fake.pass = false;
    std::string out = results_to_jsonl({fake}, 1, false);
    CHECK(out.find("\"sign\":\"-\"") != std::string::npos);
    CHECK(out.find("\"n\":-3") != std::string::npos);
    CHECK(out.find("\"failed\":1") != std::string::npos);
    CHECK_FALSE(all_pass({fake}));
}

TEST_CASE("parallel run matches serial run") {
    SuiteConfig cfg;
    cfg.selections = {"G_odd_k", "path_gf"};
    cfg.n_min = 1;
    cfg.n_max = 2;
    cfg.w_min = cfg.w_max = 1;
    cfg.jobs = 1;
    std::string serial = results_to_jsonl(run_suite(cfg), cfg.seed, false);
    cfg.jobs = 4;
    std::string parallel = results_to_jsonl(run_suite(cfg), cfg.seed, false);
    CHECK(serial == parallel);
}
