// Runs the ten acceptance criteria and prints one PASS/FAIL line per criterion.
// Failing check rows are listed beneath their criterion. Exit status is 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zetaline/report.hpp"
#include "zetaline/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    double budget_s;
};

const std::vector<Criterion> kCriteria{
    {1, "special-function identities", "special-fns", 10},
    {2, "sin-minus kernel integral", "sin-kernel", 5},
    {3, "log-integral residuals decay quadratically", "theorem6", 60},
    {4, "flatness of the extremal product", "flatness", 60},
    {5, "lower-bound law over random shifts", "theorem3", 300},
    {6, "near-extremal shift search", "search", 600},
    {7, "worked examples", "examples", 30},
    {8, "general framework calibration", "framework", 120},
    {9, "modular coefficient data", "modular", 180},
    {10, "two-sided bounds for general series", "bounds", 300},
};

}  // namespace

int main(int argc, char** argv) {
    // Optional argument: run only the listed criterion numbers.
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& c : kCriteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        zetaline::Report r;
        std::string error;
        try {
            r = zetaline::run_verify(c.suite, zetaline::RunConfig{});
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const std::size_t total = r.table.rows.size();
        const bool in_budget = secs <= c.budget_s;
        const bool ok = error.empty() && r.passed() && total > 0 && in_budget;
        if (!ok) ++failed;
        std::printf("criterion %2d %-4s %-44s %zu/%zu checks, %.2f s (budget %.0f s)\n", c.id, ok ? "PASS" : "FAIL",
                    c.title, total - static_cast<std::size_t>(r.failures), total, secs, c.budget_s);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (!in_budget) std::printf("    over the runtime budget\n");
        for (const auto& row : r.table.rows) {
            if (row.size() < 5 || std::get<bool>(row[4])) continue;
            std::printf("    failed %s: predicted %s, observed %s, tolerance %s\n",
                        zetaline::format_cell(row[0]).c_str(), zetaline::format_cell(row[1]).c_str(),
                        zetaline::format_cell(row[2]).c_str(), zetaline::format_cell(row[3]).c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
