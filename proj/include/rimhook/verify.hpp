#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rimhook/shape.hpp"

namespace rimhook {

struct VerifyOptions {
    std::vector<Shape> shapes; // empty: the default desk-scale set
    std::optional<int> limit;  // overrides the suite's primary bound
    int jobs = 1;              // > 1 shards the checks across OpenMP threads
};

struct VerifyReport {
    std::string suite;
    bool pass = false;
    long long checked = 0;
    std::optional<std::string> counterexample; // first failure in enumeration order
    std::optional<std::string> witness;        // positive witness, when a suite yields one
};

// Shapes every suite runs over unless overridden: small enough to enumerate
// exhaustively, wide enough to hit every branch of the insertions.
std::vector<Shape> default_shape_set();

std::vector<std::string> suite_names();

// Runs the named suite. Results are deterministic and independent of
// options.jobs; unknown names raise a domain_error.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options = {});

} // namespace rimhook
