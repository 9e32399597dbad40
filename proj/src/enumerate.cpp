#include "rimhook/enumerate.hpp"

#include <algorithm>

namespace rimhook {

std::vector<ReversePlanePartition> enumerate_rpps(const Shape& shape, RppBound bound) {
    require_nonempty(shape, "enumerate_rpps");
    if (bound.value < 0)
        throw domain_error("invalid-bound", "enumeration bound must be >= 0");

    std::vector<Cell> cells = shape.cells_row_major();
    std::vector<ReversePlanePartition> out;
    Grid grid;
    for (int i = 1; i <= shape.rows(); ++i)
        grid.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);

    auto fill = [&](auto&& self, std::size_t idx, int used_sum) -> void {
        if (idx == cells.size()) {
            out.emplace_back(shape, grid);
            return;
        }
        Cell c = cells[idx];
        int left = c.col > 1 ? grid[c.row - 1][c.col - 2] : 0;
        int above = c.row > 1 ? grid[c.row - 2][c.col - 1] : 0;
        int lo = std::max(left, above);
        int hi = bound.kind == RppBound::Kind::max_entry ? bound.value : bound.value - used_sum;
        for (int v = lo; v <= hi; ++v) {
            grid[c.row - 1][c.col - 1] = v;
            self(self, idx + 1, used_sum + (bound.kind == RppBound::Kind::sum ? v : 0));
        }
        grid[c.row - 1][c.col - 1] = 0;
    };
    fill(fill, 0, 0);
    return out;
}

std::vector<RimHookMultiset> enumerate_multisets(const Shape& shape, int max_total) {
    require_nonempty(shape, "enumerate_multisets");
    if (max_total < 0)
        throw domain_error("invalid-bound", "enumeration bound must be >= 0");

    std::vector<Cell> cells = shape.cells_row_major();
    std::vector<RimHookMultiset> out;
    std::vector<int> mult(cells.size(), 0);

    auto fill = [&](auto&& self, std::size_t idx, int used) -> void {
        if (idx == cells.size()) {
            RimHookMultiset m(shape);
            for (std::size_t t = 0; t < cells.size(); ++t)
                if (mult[t]) m.add(cells[t], mult[t]);
            out.push_back(std::move(m));
            return;
        }
        for (int k = 0; k <= max_total - used; ++k) {
            mult[idx] = k;
            self(self, idx + 1, used + k);
        }
        mult[idx] = 0;
    };
    fill(fill, 0, 0);
    return out;
}

} // namespace rimhook
