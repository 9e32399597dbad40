#include "rimhook/rim_hook.hpp"

#include <numeric>

namespace rimhook {

std::pair<int, int> rim_hook_span(const Shape& shape, Cell c) {
    require_nonempty(shape, "rim_hook");
    if (!shape.contains(c))
        throw domain_error("cell-outside-shape",
                           "cell " + to_string(c) + " not in shape " + to_string(shape));
    return {c.col - shape.col_length(c.col), shape.row_length(c.row) - c.row};
}

RimHook rim_hook(const Shape& shape, Cell c) {
    auto [lo, hi] = rim_hook_span(shape, c);
    std::vector<Cell> support;
    support.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) support.push_back(shape.border_box(d));
    return RimHook{shape, c, std::move(support)};
}

RimHookMultiset::RimHookMultiset(Shape shape) : shape_(std::move(shape)) {
    require_nonempty(shape_, "RimHookMultiset");
}

void RimHookMultiset::add(Cell c, int multiplicity) {
    if (multiplicity < 0)
        throw domain_error("invalid-multiplicity",
                           "multiplicity " + std::to_string(multiplicity) + " is negative");
    if (!shape_.contains(c))
        throw domain_error("cell-outside-shape",
                           "cell " + to_string(c) + " not in shape " + to_string(shape_));
    if (multiplicity == 0) return;
    counts_[c] += multiplicity;
}

int RimHookMultiset::count(Cell c) const {
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
}

int RimHookMultiset::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0,
                           [](int acc, const auto& kv) { return acc + kv.second; });
}

} // namespace rimhook
