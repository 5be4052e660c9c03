#include <lwlab/littlewood.hpp>
#include <lwlab/suite.hpp>
#include <lwlab/syt.hpp>
#include <lwlab/partition.hpp>
#include <lwlab/walks.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

// "A..B" or a single value
bool parse_range(const std::string& text, int& lo, int& hi) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, pos));
            hi = std::stoi(text.substr(pos + 2));
        }
    } catch (...) {
        return false;
    }
    return lo >= 0 && hi >= lo;
}

int cmd_verify(const lwlab::SuiteConfig& cfg, const std::string& format) {
    std::vector<lwlab::CheckResult> results;
    try {
        results = lwlab::run_suite(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (format == "json")
        std::cout << lwlab::results_to_jsonl(results, cfg.seed, cfg.timings);
    else
        std::cout << lwlab::results_to_table(results);
    return lwlab::all_pass(results) ? 0 : 1;
}

int cmd_table(const std::string& kind, int n, int w_max, const std::string& mu_text,
              const std::string& nu_text) {
    using namespace lwlab;
    std::ostringstream os;
    bool ok = true;
    if (kind == "syt_counts") {
        for (int w = 1; w <= w_max; ++w) {
            auto odd = gessel_sequence(w, true, n);
            auto even = gessel_sequence(w, false, n);
            os << "# width <= " << 2 * w + 1 << " (brute | gessel | klo)   width <= " << 2 * w
               << " (brute | gessel | klo)\n";
            for (int i = 0; i <= n; ++i) {
                Int bo = syt_count_bruteforce({i, 2 * w + 1, std::nullopt, std::nullopt});
                Int be = syt_count_bruteforce({i, 2 * w, std::nullopt, std::nullopt});
                Int ko = klo_count(KloVariant::KloOdd, i, w);
                Int ke = klo_count(KloVariant::KloEven, i, w);
                bool row_ok = bo == odd[i] && bo == ko && be == even[i] && be == ke;
                ok = ok && row_ok;
                os << "n=" << i << "  " << bo << " | " << odd[i] << " | " << ko << "   " << be
                   << " | " << even[i] << " | " << ke << (row_ok ? "" : "  MISMATCH") << '\n';
            }
        }
    } else if (kind == "walk_counts") {
        Partition from = Partition::parse(mu_text);
        Partition to = Partition::parse(nu_text);
        for (int w = 1; w <= w_max; ++w) {
            if (from.length() > w || to.length() > w) continue;
            os << "# w = " << w << ", " << from.to_string() << " -> " << to.to_string()
               << ": VT  VT>  MVT*\n";
            for (int i = 0; i <= n; ++i) {
                os << "n=" << i << "  " << count_vt(VtClass::Vt, i, w, from, to) << "  "
                   << count_vt(VtClass::VtGt, i, w, from, to) << "  "
                   << count_vt(VtClass::MvtStar, i, w, from, to) << '\n';
            }
        }
    } else if (kind == "oeis_check") {
        auto row = [&](const char* label, const char* oeis, auto method_a, auto method_b,
                       int count) {
            os << label << " (" << oeis << "): ";
            bool good = true;
            for (int i = 0; i < count; ++i) {
                Int a = method_a(i), b = method_b(i);
                good = good && a == b;
                os << a << (i + 1 < count ? "," : "");
            }
            os << (good ? "  ok" : "  MISMATCH") << '\n';
            ok = ok && good;
        };
        row(
            "riordan", "A005043",
            [](int i) { return count_vt(VtClass::VtGt, i, 1, Partition{}, Partition{}); },
            [](int i) {
                int k = i % 2 == 0 ? 0 : 3;
                return syt_count_hooksum({i, 3, k, std::nullopt});
            },
            std::min(n + 1, 9));
        row(
            "central_binomial", "A000984",
            [](int i) { return count_vt(VtClass::MvtStar, 2 * i, 1, Partition{}, Partition{}); },
            [](int i) { return central_binomial(2 * i); }, std::min(n / 2 + 1, 5));
        row(
            "catalan_square", "A001246",
            [](int i) { return count_vt(VtClass::MvtStar, 2 * i, 2, Partition{}, Partition{}); },
            [](int i) {
                Int c = catalan_half(2 * i);
                return c * c;
            },
            std::min(n / 2 + 1, 4));
        row(
            "motzkin_syt", "A001006",
            [](int i) { return syt_count_bruteforce({i, 3, std::nullopt, std::nullopt}); },
            [&](int i) { return gessel_sequence(1, true, n)[i]; }, std::min(n + 1, 9));
    } else {
        std::cerr << "usage error: unknown table kind " << kind << "\n";
        return 2;
    }
    std::cout << os.str();
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded Littlewood identity lab"};
    app.require_subcommand(1);

    lwlab::SuiteConfig cfg;
    if (const char* env = std::getenv("LL_LAB_JOBS")) cfg.jobs = std::max(1, std::atoi(env));

    auto* verify = app.add_subcommand("verify", "run identity verifications");
    std::vector<std::string> theorems{"all"};
    std::string n_range = "1..2", w_range = "1..2", format = "json";
    int k_value = -1;
    verify->add_option("--theorem", theorems,
                       "theorem ids / suite groups (or 'all')");
    verify->add_option("--n", n_range, "variable-count range A..B");
    verify->add_option("--w", w_range, "width-parameter range A..B");
    verify->add_option("--k", k_value, "restrict refinements to one k");
    verify->add_option("--degree", cfg.degree, "Schur-ring truncation degree");
    verify->add_option("--order", cfg.order, "EGF order / max SYT size");
    verify->add_option("--walk-len", cfg.walk_len, "walk length bound");
    verify->add_option("--seed", cfg.seed, "random seed for the sampled checks");
    verify->add_option("--jobs", cfg.jobs, "worker threads");
    verify->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    verify->add_flag("--timings", cfg.timings, "include measured elapsed_ms");

    auto* list = app.add_subcommand("list", "print the available check groups");

    auto* table = app.add_subcommand("table", "emit count tables");
    std::string kind = "syt_counts";
    int table_n = 8, table_w = 2;
    std::string table_mu = "0", table_nu = "0";
    table->add_option("--kind", kind, "syt_counts | walk_counts | oeis_check");
    table->add_option("--n", table_n, "row bound");
    table->add_option("--w", table_w, "width bound");
    table->add_option("--mu", table_mu, "walk start partition, comma-separated parts");
    table->add_option("--nu", table_nu, "walk end partition, comma-separated parts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        for (const auto& name : lwlab::suite_group_names()) std::cout << name << '\n';
        return 0;
    }
    if (verify->parsed()) {
        if (!parse_range(n_range, cfg.n_min, cfg.n_max) ||
            !parse_range(w_range, cfg.w_min, cfg.w_max)) {
            std::cerr << "usage error: bad range\n";
            return 2;
        }
        if (k_value >= 0) cfg.k_filter = k_value;
        cfg.selections = theorems;
        return cmd_verify(cfg, format);
    }
    if (table->parsed()) {
        if (table_n < 0 || table_w < 1) {
            std::cerr << "usage error: bad bounds\n";
            return 2;
        }
        try {
            lwlab::Partition::parse(table_mu);
            lwlab::Partition::parse(table_nu);
        } catch (...) {
            std::cerr << "usage error: bad partition\n";
            return 2;
        }
        return cmd_table(kind, table_n, table_w, table_mu, table_nu);
    }
    return 2;
}
