// Acceptance suite: runs every stated criterion at its stated size and prints
// one PASS/FAIL line each. Exit status is nonzero when anything failed.

#include <lwlab/littlewood.hpp>
#include <lwlab/orthogonal.hpp>
#include <lwlab/pfaffian_checks.hpp>
#include <lwlab/schur_ring.hpp>
#include <lwlab/suite.hpp>
#include <lwlab/syt.hpp>
#include <lwlab/walks.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace lwlab;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

bool grid_passes(const std::vector<CheckResult>& rs, std::string& detail) {
    int bad = 0;
    for (const auto& r : rs)
        if (r.asserted && !r.pass) ++bad;
    std::ostringstream os;
    os << rs.size() << " instances";
    if (bad) os << ", " << bad << " failed";
    detail = os.str();
    return bad == 0;
}

void criterion_identities() {
    std::vector<CheckResult> all;
    for (TheoremId id : all_theorems())
        for (const auto& r : verify_identity_grid(id, 3, 1, 2)) all.push_back(r);
    std::string detail;
    bool ok = grid_passes(all, detail);
    report("identity suites (all 20 equations, n<=3, w<=2, all valid k)", ok, detail);
}

void criterion_pfaffian() {
    bool pf_n = true;
    for (const auto& r : check_pf_n(6)) pf_n = pf_n && r.pass;
    report("Pf N_4 = 2 and Pf N_6 = 4", pf_n);

    bool gordon = true;
    for (int w = 1; w <= 3; ++w)
        for (int v = 1; v <= 4; ++v) gordon = gordon && check_gordon(w, v).pass;
    report("Gordon reductions G1-G4 symbolically for w in {1,2,3}", gordon);

    bool ms = true;
    int instances = 0;
    for (const auto& r : check_minor_summation(2, 4, 20, 424201)) {
        ms = ms && r.pass;
        ++instances;
    }
    for (const auto& r : check_minor_summation(4, 6, 20, 424202)) {
        ms = ms && r.pass;
        ++instances;
    }
    report("minor summation for (m,p) in {(2,4),(4,6)}, 20 seeded instances each", ms,
           std::to_string(instances) + " instances");
}

void criterion_skew_lemmas() {
    std::string detail;
    auto rs = check_skew_lemmas(8, 0, 4, 3, 10, 515151);
    bool ok = grid_passes(rs, detail);
    report("skew-power lemmas in the degree-8 ring (i in [0,4], j <= 3)", ok, detail);

    auto adj = check_adjointness(6, 50, 626262);
    bool ok2 = grid_passes(adj, detail);
    report("Hall adjointness on 50 random pairs at D = 6", ok2, detail);
}

void criterion_syt_counts() {
    std::string detail;
    auto rs = check_syt_counts(8, 2);
    bool ok = grid_passes(rs, detail);
    report("SYT counts: brute = hook = EGF determinant = composition formula (n<=8, w<=2)",
           ok, detail);

    bool spots = syt_count_bruteforce({3, 3, std::nullopt, std::nullopt}) == 4 &&
                 syt_count_bruteforce({4, 3, std::nullopt, std::nullopt}) == 9 &&
                 syt_count_bruteforce({3, 2, std::nullopt, std::nullopt}) == 3 &&
                 syt_count_bruteforce({4, 2, std::nullopt, std::nullopt}) == 6;
    report("spot values |SYT_{3,3}|=4 |SYT_{4,3}|=9 |SYT_{3,2}|=3 |SYT_{4,2}|=6", spots);
}

void criterion_updown() {
    std::vector<CheckResult> all;
    for (CombThm t : {CombThm::GouldenMUDeven, CombThm::GouldenMUDodd, CombThm::UDodd1,
                      CombThm::UDodd2, CombThm::UDeven, CombThm::UDevenPrime, CombThm::UDevenH})
        for (int n = 1; n <= 3; ++n)
            for (int w = 1; w <= 2; ++w) {
                auto [klo, khi] = comb_k_range(t, n, w);
                for (int k = klo; k <= khi; ++k)
                    all.push_back(check_combinatorial(t, n, w, k));
            }
    std::string detail;
    bool ok = grid_passes(all, detail);
    report("up-down tableau interpretations (n<=3 variables, w<=2, all valid k)", ok, detail);
}

void criterion_walks() {
    std::vector<CheckResult> all;
    for (CombThm t : {CombThm::SYTodd, CombThm::SYTeven, CombThm::Zeilberger, CombThm::EuEtAl})
        for (int n = 0; n <= 6; ++n)
            for (int w = 1; w <= 2; ++w) {
                auto [klo, khi] = comb_k_range(t, n, w);
                if (khi < klo) {
                    all.push_back(check_combinatorial(t, n, w, 0));
                } else {
                    for (int k = klo; k <= khi; ++k)
                        all.push_back(check_combinatorial(t, n, w, k));
                }
            }
    std::string detail;
    bool ok = grid_passes(all, detail);
    report("SYT-walk identities (n<=6, w<=2, all valid k)", ok, detail);

    std::vector<Int> riordan{1, 0, 1, 1, 3, 6, 15};
    bool seq = true;
    for (int n = 0; n <= 6; ++n)
        seq = seq && count_vt(VtClass::VtGt, n, 1, Partition{}, Partition{}) == riordan[n];
    std::vector<Int> cb{2, 6, 20};
    std::vector<Int> cat2{1, 4, 25};
    for (int n = 1; n <= 3; ++n) {
        seq = seq &&
              count_vt(VtClass::MvtStar, 2 * n, 1, Partition{}, Partition{}) == cb[n - 1];
        seq = seq &&
              count_vt(VtClass::MvtStar, 2 * n, 2, Partition{}, Partition{}) == cat2[n - 1];
    }
    report("walk sequences: Riordan 1,0,1,1,3,6,15; central binomial 2,6,20; Cat^2 1,4,25",
           seq);
}

void criterion_kratt() {
    std::vector<CheckResult> all;
    for (int twice_c = 1; twice_c <= 4; ++twice_c)
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= twice_c; ++k) all.push_back(check_kratt(twice_c, k, n));
    std::string detail;
    bool ok = grid_passes(all, detail);
    report("nearly rectangular character identity (c in {1/2,1,3/2,2}, n<=3, k<=2c)", ok,
           detail);

    bool spec = true;
    for (int n = 1; n <= 3; ++n)
        for (int r = -n; r <= n; ++r) spec = spec && check_f_specialization(r, n).pass;
    report("specialization f_r(x_n) = (x_1...x_n) e_{n-r}(x_n^{+-1}) for |r|<=n<=3", spec);
}

void criterion_determinism(const char* cli_path) {
    if (cli_path == nullptr) {
        // in-process fallback: serialize the same configured run twice
        SuiteConfig cfg;
        cfg.selections = {"BK_even1", "G_odd_k", "minor_summation"};
        cfg.n_max = 2;
        cfg.w_max = 1;
        std::string a = results_to_jsonl(run_suite(cfg), cfg.seed, cfg.timings);
        std::string b = results_to_jsonl(run_suite(cfg), cfg.seed, cfg.timings);
        report("determinism: identical config+seed give byte-identical JSON (in-process)",
               a == b && !a.empty());
        return;
    }
    std::string base = "verify --theorem BK_even1 --theorem minor_summation --n 1..2 --w 1..1 "
                       "--seed 777 --jobs 2";
    std::string cmd1 = std::string(cli_path) + " " + base + " > acc_det_run1.json 2>/dev/null";
    std::string cmd2 = std::string(cli_path) + " " + base + " > acc_det_run2.json 2>/dev/null";
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    std::ifstream f1("acc_det_run1.json"), f2("acc_det_run2.json");
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    bool ok = rc1 == 0 && rc2 == 0 && s1.str() == s2.str() && !s1.str().empty();
    std::remove("acc_det_run1.json");
    std::remove("acc_det_run2.json");
    report("determinism: two CLI runs with identical config and seed are byte-identical", ok);
}

}  // namespace

int main(int argc, char** argv) {
    auto t0 = std::chrono::steady_clock::now();
    criterion_identities();
    criterion_pfaffian();
    criterion_skew_lemmas();
    criterion_syt_counts();
    criterion_updown();
    criterion_walks();
    criterion_kratt();
    criterion_determinism(argc > 1 ? argv[1] : nullptr);
    auto t1 = std::chrono::steady_clock::now();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " in " << secs
              << "s" << std::endl;
    return failures == 0 ? 0 : 1;
}
