#pragma once

#include <map>
#include <vector>

#include "rimhook/shape.hpp"

namespace rimhook {

// Rim hook h_{(i,j)}: the connected strip of border boxes running from the
// bottom of column j to the end of row i. Canonically identified by its
// defining cell; the support is derived geometry.
struct RimHook {
    Shape shape;
    Cell defining_cell;
    std::vector<Cell> support; // southwest end first, one cell per diagonal

    int lo_diagonal() const { return diagonal_of(support.front()); }
    int hi_diagonal() const { return diagonal_of(support.back()); }
    bool meets_diagonal(int d) const { return lo_diagonal() <= d && d <= hi_diagonal(); }
    int length() const { return static_cast<int>(support.size()); }

    friend bool operator==(const RimHook& a, const RimHook& b) {
        return a.shape == b.shape && a.defining_cell == b.defining_cell;
    }
};

RimHook rim_hook(const Shape& shape, Cell defining_cell);

// Diagonal span of h_{(i,j)} without materializing the support.
std::pair<int, int> rim_hook_span(const Shape& shape, Cell defining_cell);

// Multiset of rim hooks of a fixed shape, stored as multiplicities keyed by
// defining cell. This is the N-tableau view: entry (i,j) counts h_{(i,j)}.
class RimHookMultiset {
public:
    explicit RimHookMultiset(Shape shape);

    const Shape& shape() const { return shape_; }
    const std::map<Cell, int>& counts() const { return counts_; }

    void add(Cell defining_cell, int multiplicity = 1);
    int count(Cell defining_cell) const;
    int total() const;
    bool empty() const { return counts_.empty(); }

    friend bool operator==(const RimHookMultiset&, const RimHookMultiset&) = default;

private:
    Shape shape_;
    std::map<Cell, int> counts_; // only positive multiplicities are stored
};

} // namespace rimhook
