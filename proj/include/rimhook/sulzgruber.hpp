#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rimhook/diag_engine.hpp"
#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

// One round of the cube-stacking loop: the strip as it stood, the minimal
// stack height under it, the segment that was raised, and whether the rest
// was shifted a step northwest along its diagonals.
struct InsertStep {
    std::vector<Cell> strip;
    int min_height = 0;
    std::vector<Cell> broken_off;
    bool shifted = false;
};
using InsertionTrace = std::vector<InsertStep>;

// Non-insertable hooks are a normal outcome, not a fault.
enum class InsertFailure {
    shifted_off_shape, // part of the hook left the shape
    no_terminal_run,   // the minimal height is not attained at the northeast end
    invalid_result,    // the finished filling is not a reverse plane partition
};

using InsertResult = std::variant<ReversePlanePartition, InsertFailure>;

InsertResult sulz_insert(const ReversePlanePartition& pi, const RimHook& hook,
                         InsertionTrace* trace = nullptr);

// Folds the hooks of m in insertion order. Insertion-order folds never fail;
// a failure here is an implementation bug.
ReversePlanePartition sulz_build(const RimHookMultiset& m,
                                 std::vector<InsertionTrace>* traces = nullptr);

struct ReverseStep {
    Cell candidate;
    std::vector<Cell> path; // southwest start to northeast end
    RimHook hook;
};

// Extracts the last-inserted hook, or nothing when pi is all zeros.
std::optional<std::pair<ReverseStep, ReversePlanePartition>> sulz_reverse(
    const ReversePlanePartition& pi);

RimHookMultiset sulz_decompose(const ReversePlanePartition& pi,
                               std::vector<ReverseStep>* trace = nullptr);

// Per-diagonal partitions computed purely from chain maxima on the
// northwest submatrices of the multiplicity tableau.
std::map<int, Shape> gk_profile(const RimHookMultiset& m, int oracle_bound = 14);

} // namespace rimhook
