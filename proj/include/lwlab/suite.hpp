#pragma once

#include <lwlab/report.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lwlab {

struct SuiteConfig {
    std::vector<std::string> selections{"all"};
    int n_min = 1, n_max = 2;   // identity / section-7 grids (variable count)
    int w_min = 1, w_max = 2;
    std::optional<int> k_filter;
    int degree = 8;             // Schur-ring truncation
    int order = 8;              // EGF order == max SYT size in the count suite
    int walk_len = 6;           // section-8 walk lengths
    uint64_t seed = 20250809;
    int jobs = 1;
    bool timings = false;
};

struct SuiteTask {
    std::string group;
    std::function<std::vector<CheckResult>()> run;
};

std::vector<std::string> suite_group_names();
bool suite_has_group(const std::string& name);

/// Resolve selections into a deterministic task list. Throws
/// std::invalid_argument on an unknown selection.
std::vector<SuiteTask> build_suite(const SuiteConfig& cfg);

/// Run with a worker pool; results come back in task order.
std::vector<CheckResult> run_suite(const SuiteConfig& cfg);

/// JSON-lines serialization (one line per result, summary line last).
std::string results_to_jsonl(const std::vector<CheckResult>& results, uint64_t seed,
                             bool timings);
std::string results_to_table(const std::vector<CheckResult>& results);

}  // namespace lwlab
