// Compares the serial reference driver against the OpenMP-sharded one on the
// heavier verification suites. Both must produce identical reports.

#include <chrono>
#include <cstdio>
#include <thread>

#include "rimhook/verify.hpp"

using namespace rimhook;

namespace {
double run_ms(const char* suite, int jobs, VerifyReport& report) {
    VerifyOptions options;
    options.jobs = jobs;
    auto start = std::chrono::steady_clock::now();
    report = run_suite(suite, options);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}
} // namespace

int main() {
    unsigned hw = std::thread::hardware_concurrency();
    int parallel_jobs = hw > 1 ? static_cast<int>(hw) : 2;
    std::printf("%-18s %12s %12s %9s  %s\n", "suite", "serial ms", "parallel ms", "speedup",
                "checks");

    int mismatches = 0;
    for (const char* suite :
         {"sulz-bijection", "equivalence", "hg-bijection", "gk-profiles", "gk-words",
          "knuth-rsk", "prefix-subword"}) {
        VerifyReport serial, parallel;
        double serial_ms = run_ms(suite, 1, serial);
        double parallel_ms = run_ms(suite, parallel_jobs, parallel);
        bool same = serial.pass == parallel.pass && serial.checked == parallel.checked &&
                    serial.counterexample == parallel.counterexample;
        if (!same) ++mismatches;
        std::printf("%-18s %12.1f %12.1f %8.2fx  %lld%s%s\n", suite, serial_ms, parallel_ms,
                    parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, serial.checked,
                    serial.pass ? "" : " FAIL", same ? "" : " REPORT-MISMATCH");
    }
    std::printf("threads: %d\n", parallel_jobs);
    return mismatches;
}
