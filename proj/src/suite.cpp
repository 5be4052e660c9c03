#include <lwlab/suite.hpp>

#include <lwlab/littlewood.hpp>
#include <lwlab/orthogonal.hpp>
#include <lwlab/pfaffian_checks.hpp>
#include <lwlab/schur_ring.hpp>
#include <lwlab/syt.hpp>
#include <lwlab/walks.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lwlab {

namespace {

const std::vector<std::string>& extra_groups() {
    static const std::vector<std::string> g = {
        "gordon",        "minor_summation", "pfaffian_aux", "skew_lemmas",
        "adjointness",   "syt_counts",      "path_gf",      "GouldenMUDeven",
        "GouldenMUDodd", "UDodd1",          "UDodd2",       "UDeven",
        "UDevenPrime",   "UDevenH",         "SYTodd",       "SYTeven",
        "Zeilberger",    "EuEtAl",          "kratt",        "sequences",
    };
    return g;
}

std::optional<CombThm> comb_from_name(const std::string& name) {
    for (CombThm t : {CombThm::GouldenMUDeven, CombThm::GouldenMUDodd, CombThm::UDodd1,
                      CombThm::UDodd2, CombThm::UDeven, CombThm::UDevenPrime, CombThm::UDevenH,
                      CombThm::SYTodd, CombThm::SYTeven, CombThm::Zeilberger, CombThm::EuEtAl})
        if (name == comb_thm_name(t)) return t;
    return std::nullopt;
}

bool is_walk_counting(CombThm t) {
    return t == CombThm::SYTodd || t == CombThm::SYTeven || t == CombThm::Zeilberger ||
           t == CombThm::EuEtAl;
}

std::vector<CheckResult> run_sequences(int walk_len) {
    std::vector<CheckResult> out;
    {
        // Riordan numbers: closed walks with flat steps only at full height
        std::vector<Int> expect = {1, 0, 1, 1, 3, 6, 15, 36, 91};
        CheckResult res;
        res.name = "sequence_riordan";
        res.with("w", 1).with("n_max", walk_len);
        res.pass = true;
        for (int n = 0; n <= walk_len && n < (int)expect.size(); ++n)
            res.pass = res.pass &&
                       count_vt(VtClass::VtGt, n, 1, Partition{}, Partition{}) == expect[n];
        out.push_back(std::move(res));
    }
    {
        // marked Dyck paths: central binomial coefficients
        CheckResult res;
        res.name = "sequence_central_binomial";
        res.with("w", 1).with("n_max", walk_len);
        res.pass = true;
        for (int n = 0; 2 * n <= walk_len; ++n)
            res.pass = res.pass && count_vt(VtClass::MvtStar, 2 * n, 1, Partition{},
                                            Partition{}) == central_binomial(2 * n);
        out.push_back(std::move(res));
    }
    {
        // squared Catalan numbers at w = 2
        CheckResult res;
        res.name = "sequence_catalan_square";
        res.with("w", 2).with("n_max", walk_len);
        res.pass = true;
        for (int n = 0; 2 * n <= walk_len; ++n) {
            Int cat = catalan_half(2 * n);
            res.pass = res.pass && count_vt(VtClass::MvtStar, 2 * n, 2, Partition{},
                                            Partition{}) == cat * cat;
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_group_names() {
    std::vector<std::string> names;
    for (TheoremId id : all_theorems()) names.push_back(theorem_name(id));
    for (const auto& g : extra_groups()) names.push_back(g);
    return names;
}

bool suite_has_group(const std::string& name) {
    auto names = suite_group_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteTask> build_suite(const SuiteConfig& cfg) {
    std::vector<std::string> wanted = cfg.selections;
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all"))
        wanted = suite_group_names();
    for (const auto& name : wanted)
        if (!suite_has_group(name)) throw std::invalid_argument("unknown suite group: " + name);

    std::vector<SuiteTask> tasks;
    auto add = [&](const std::string& group, std::function<std::vector<CheckResult>()> fn) {
        tasks.push_back(SuiteTask{group, std::move(fn)});
    };

    for (const auto& name : wanted) {
        if (auto id = theorem_from_name(name)) {
            for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                for (int w = cfg.w_min; w <= cfg.w_max; ++w) {
                    if (theorem_has_k(*id)) {
                        auto [klo, khi] = theorem_k_range(*id, n, w);
                        for (int k = klo; k <= khi; ++k) {
                            if (cfg.k_filter && *cfg.k_filter != k) continue;
                            add(name, [id, n, w, k] {
                                return std::vector<CheckResult>{verify_identity(*id, n, w, k)};
                            });
                        }
                    } else {
                        add(name, [id, n, w] {
                            return std::vector<CheckResult>{
                                verify_identity(*id, n, w, std::nullopt)};
                        });
                    }
                }
            continue;
        }
        if (auto comb = comb_from_name(name)) {
            int n_lo = is_walk_counting(*comb) ? 0 : cfg.n_min;
            int n_hi = is_walk_counting(*comb) ? cfg.walk_len : std::min(cfg.n_max, 3);
            for (int n = n_lo; n <= n_hi; ++n)
                for (int w = cfg.w_min; w <= cfg.w_max; ++w) {
                    auto [klo, khi] = comb_k_range(*comb, n, w);
                    if (khi < klo) {
                        add(name, [comb, n, w] {
                            return std::vector<CheckResult>{check_combinatorial(*comb, n, w, 0)};
                        });
                        continue;
                    }
                    for (int k = klo; k <= khi; ++k) {
                        if (cfg.k_filter && *cfg.k_filter != k) continue;
                        add(name, [comb, n, w, k] {
                            return std::vector<CheckResult>{
                                check_combinatorial(*comb, n, w, k)};
                        });
                    }
                }
            continue;
        }
        if (name == "gordon") {
            int wmax = std::max(3, cfg.w_max);
            for (int w = 1; w <= wmax; ++w)
                for (int v = 1; v <= 4; ++v)
                    add(name, [w, v] {
                        return std::vector<CheckResult>{check_gordon(w, v)};
                    });
        } else if (name == "minor_summation") {
            uint64_t seed = cfg.seed;
            add(name, [seed] { return check_minor_summation(2, 4, 20, seed); });
            add(name, [seed] { return check_minor_summation(4, 6, 20, seed + 1); });
        } else if (name == "pfaffian_aux") {
            uint64_t seed = cfg.seed;
            add(name, [seed] { return check_aux_lemmas(8, 5, seed + 2); });
        } else if (name == "skew_lemmas") {
            int d = cfg.degree;
            uint64_t seed = cfg.seed;
            add(name, [d, seed] { return check_skew_lemmas(d, 0, 4, 3, 10, seed + 3); });
        } else if (name == "adjointness") {
            uint64_t seed = cfg.seed;
            add(name, [seed] { return check_adjointness(6, 50, seed + 4); });
        } else if (name == "syt_counts") {
            int n = cfg.order;
            add(name, [n] { return check_syt_counts(n, 2); });
        } else if (name == "path_gf") {
            for (PathEq eq : {PathEq::Lem0, PathEq::Lem1, PathEq::Lem2, PathEq::Lem3,
                              PathEq::Lem4})
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j)
                        for (int n = 1; n <= 2; ++n)
                            add(name, [eq, i, j, n] {
                                return std::vector<CheckResult>{check_path_gf(eq, i, j, n)};
                            });
        } else if (name == "kratt") {
            for (int twice_c = 1; twice_c <= 4; ++twice_c)
                for (int n = cfg.n_min; n <= std::min(cfg.n_max, 3); ++n)
                    for (int k = 0; k <= twice_c; ++k) {
                        if (cfg.k_filter && *cfg.k_filter != k) continue;
                        add(name, [twice_c, n, k] {
                            return std::vector<CheckResult>{check_kratt(twice_c, k, n)};
                        });
                    }
            for (int n = 1; n <= std::min(cfg.n_max, 3); ++n) {
                for (int r = -n; r <= n; ++r)
                    add(name, [r, n] {
                        return std::vector<CheckResult>{check_f_specialization(r, n)};
                    });
                add(name, [n] {
                    return std::vector<CheckResult>{check_e_half_product(n)};
                });
            }
        } else if (name == "sequences") {
            int wl = cfg.walk_len;
            add(name, [wl] { return run_sequences(wl); });
        }
    }
    return tasks;
}

std::vector<CheckResult> run_suite(const SuiteConfig& cfg) {
    std::vector<SuiteTask> tasks = build_suite(cfg);
    std::vector<std::vector<CheckResult>> buckets(tasks.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) buckets[i] = tasks[i].run();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                buckets[i] = tasks[i].run();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<CheckResult> out;
    for (auto& b : buckets)
        for (auto& r : b) out.push_back(std::move(r));
    return out;
}

namespace {

nlohmann::ordered_json result_json(const CheckResult& r, bool timings) {
    nlohmann::ordered_json j;
    j["theorem"] = r.name;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : r.params) {
        size_t digits_from = (v.size() > 1 && v[0] == '-') ? 1 : 0;
        bool numeric = v.size() > digits_from &&
                       v.find_first_not_of("0123456789", digits_from) == std::string::npos;
        if (numeric)
            params[k] = std::stoll(v);
        else
            params[k] = v;
    }
    j["params"] = params;
    j["equal"] = r.pass;
    if (!r.asserted) j["asserted"] = false;
    if (r.lhs_hash || r.rhs_hash) {
        std::ostringstream lh, rh;
        lh << std::hex << r.lhs_hash;
        rh << std::hex << r.rhs_hash;
        j["lhs_hash"] = lh.str();
        j["rhs_hash"] = rh.str();
    }
    j["elapsed_ms"] = timings ? r.elapsed_ms : 0;
    return j;
}

}  // namespace

std::string results_to_jsonl(const std::vector<CheckResult>& results, uint64_t seed,
                             bool timings) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : results) {
        if (r.asserted && !r.pass) ++failed;
        os << result_json(r, timings).dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["summary"] = {{"total", results.size()}, {"failed", failed}, {"seed", seed}};
    os << summary.dump() << '\n';
    return os.str();
}

std::string results_to_table(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : results) {
        std::ostringstream ps;
        for (const auto& [k, v] : r.params) ps << ' ' << k << '=' << v;
        if (r.asserted && !r.pass) ++failed;
        os << (r.pass ? "PASS" : (r.asserted ? "FAIL" : "info")) << "  " << r.name << ps.str()
           << '\n';
    }
    os << (failed == 0 ? "all passed" : std::to_string(failed) + " failed") << " ("
       << results.size() << " checks)\n";
    return os.str();
}

}  // namespace lwlab
