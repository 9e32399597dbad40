// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion runs the corresponding verification suites at the bounds
// the library treats as its exhaustive desk scale.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "rimhook/verify.hpp"

using namespace rimhook;

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds; // 0 = only the global budget applies
    std::function<std::vector<VerifyReport>()> run;
};

int jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 1 ? static_cast<int>(hw) : 1;
}

VerifyOptions options(std::vector<Shape> shapes = {}, std::optional<int> limit = {}) {
    VerifyOptions o;
    o.shapes = std::move(shapes);
    o.limit = limit;
    o.jobs = jobs();
    return o;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"worked-example goldens", 1.0,
         [] { return std::vector<VerifyReport>{run_suite("goldens")}; }},
        {"Stanley generating function through degree 8", 10.0,
         [] {
             std::vector<Shape> shapes{Shape({1}), Shape({2, 2}), Shape({3, 1}),
                                       Shape({3, 2, 2}), Shape({3, 3, 2})};
             return std::vector<VerifyReport>{run_suite("genfun", options(shapes, 8))};
         }},
        {"Sulzgruber bijection round trips", 30.0,
         [] { return std::vector<VerifyReport>{run_suite("sulz-bijection", options())}; }},
        {"diagonal RSK coincides with cube-stacking insertion", 0.0,
         [] { return std::vector<VerifyReport>{run_suite("equivalence", options())}; }},
        {"Hillman-Grassl round trips and the distinguishing filling", 0.0,
         [] {
             return std::vector<VerifyReport>{run_suite("hg-bijection", options()),
                                              run_suite("hg-vs-sulz-differ", options())};
         }},
        {"Greene-Kleitman word invariants, alphabet 4, length 7", 0.0,
         [] { return std::vector<VerifyReport>{run_suite("gk-words", options({}, 7))}; }},
        {"Greene-Kleitman diagonal profiles for both insertions", 0.0,
         [] { return std::vector<VerifyReport>{run_suite("gk-profiles", options())}; }},
        {"Knuth and RSK lemma suite, alphabet 4, length 6", 0.0,
         [] { return std::vector<VerifyReport>{run_suite("knuth-rsk", options({}, 6))}; }},
        {"prefix and subword structure of adjacent diagonal words", 0.0,
         [] { return std::vector<VerifyReport>{run_suite("prefix-subword", options())}; }},
    };

    int failures = 0;
    double total_seconds = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& criterion = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::vector<VerifyReport> reports;
        std::string error;
        try {
            reports = criterion.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        total_seconds += seconds;

        long long checked = 0;
        bool pass = error.empty() && !reports.empty();
        for (const VerifyReport& r : reports) {
            checked += r.checked;
            if (!r.pass) {
                pass = false;
                if (error.empty() && r.counterexample) error = r.suite + ": " + *r.counterexample;
            }
        }
        bool in_time = criterion.time_limit_seconds == 0.0 ||
                       seconds < criterion.time_limit_seconds;
        if (!in_time) {
            pass = false;
            if (error.empty())
                error = "exceeded the " + std::to_string(criterion.time_limit_seconds) +
                        "s budget";
        }
        if (!pass) ++failures;

        std::printf("[%s] %zu. %s: %lld checks in %.2fs\n", pass ? "PASS" : "FAIL", i + 1,
                    criterion.name.c_str(), checked, seconds);
        if (!pass && !error.empty()) std::printf("       %s\n", error.c_str());
    }

    bool in_budget = total_seconds <= 60.0;
    std::printf("[%s] total wall clock %.2fs (budget 60s)\n", in_budget ? "PASS" : "FAIL",
                total_seconds);
    if (!in_budget) ++failures;
    return failures;
}
