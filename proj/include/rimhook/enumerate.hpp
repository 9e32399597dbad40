#pragma once

#include <vector>

#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

// Finite bound for the reverse-plane-partition enumeration: either the entry
// sum or the maximum entry.
struct RppBound {
    enum class Kind { sum, max_entry };
    Kind kind;
    int value;

    static RppBound sum(int n) { return {Kind::sum, n}; }
    static RppBound max_entry(int m) { return {Kind::max_entry, m}; }
};

// Every valid filling exactly once, lexicographic by row-major entries.
std::vector<ReversePlanePartition> enumerate_rpps(const Shape& shape, RppBound bound);

// Every multiset of defining cells with total multiplicity <= max_total,
// lexicographic by the row-major multiplicity vector.
std::vector<RimHookMultiset> enumerate_multisets(const Shape& shape, int max_total);

} // namespace rimhook
