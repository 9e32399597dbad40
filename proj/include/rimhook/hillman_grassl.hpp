#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

struct PeelStep {
    Cell start;             // bottom-most nonzero cell of the first nonzero column
    std::vector<Cell> path; // north/east lattice path from start
    RimHook hook;           // southwest end at start's column, northeast end at the path end
};

// One Hillman-Grassl peel, or nothing when pi is all zeros.
std::optional<std::pair<PeelStep, ReversePlanePartition>> hg_peel(const ReversePlanePartition& pi);

// Peels to zero and collects the hooks.
RimHookMultiset hg_decompose(const ReversePlanePartition& pi,
                             std::vector<PeelStep>* trace = nullptr);

// Build direction via HG diagonal RSK; inverse of hg_decompose.
ReversePlanePartition hg_build(const RimHookMultiset& m);

// Per-diagonal partitions from the HG chain maxima on the northwest
// submatrices of the multiplicity tableau.
std::map<int, Shape> hg_gk_profile(const RimHookMultiset& m, int oracle_bound = 14);

} // namespace rimhook
