#include "rimhook/hillman_grassl.hpp"

#include "rimhook/diag_engine.hpp"
#include "rimhook/greene_kleitman.hpp"

namespace rimhook {

namespace {

// Columns left to right, each scanned bottom to top; first nonzero cell.
std::optional<Cell> first_nonzero(const ReversePlanePartition& pi) {
    const Shape& shape = pi.shape();
    for (int j = 1; j <= shape.row_length(1); ++j)
        for (int i = shape.col_length(j); i >= 1; --i)
            if (pi.at(Cell{i, j}) != 0) return Cell{i, j};
    return std::nullopt;
}

std::vector<Cell> peel_path(const ReversePlanePartition& pi, Cell start) {
    std::vector<Cell> path{start};
    Cell cur = start;
    while (true) {
        Cell above{cur.row - 1, cur.col};
        Cell right{cur.row, cur.col + 1};
        if (pi.shape().contains(above) && pi.at(above) == pi.at(cur)) {
            cur = above;
        } else if (pi.shape().contains(right)) {
            cur = right;
        } else {
            break;
        }
        path.push_back(cur);
    }
    return path;
}

} // namespace

std::optional<std::pair<PeelStep, ReversePlanePartition>> hg_peel(const ReversePlanePartition& pi) {
    const Shape& shape = pi.shape();
    require_nonempty(shape, "hg_peel");
    auto start = first_nonzero(pi);
    if (!start) return std::nullopt;
    // Columns weakly increase downward, so the start sits at the bottom of
    // its column and defines the hook's southwest end.
    if (shape.col_length(start->col) != start->row)
        throw std::logic_error("hg_peel: nonzero start above a zero entry");

    std::vector<Cell> path = peel_path(pi, *start);
    Cell end = path.back();
    RimHook hook = rim_hook(shape, Cell{end.row, start->col});
    if (hook.length() != static_cast<int>(path.size()))
        throw std::logic_error("hg_peel: hook length disagrees with path length");

    Grid grid = pi.rows();
    for (Cell c : path) --grid[c.row - 1][c.col - 1];
    if (auto v = find_rpp_violation(shape, grid))
        throw std::logic_error("hg_peel: subtraction broke the filling: " + v->message());

    PeelStep step{*start, std::move(path), std::move(hook)};
    return std::make_pair(std::move(step), ReversePlanePartition(shape, std::move(grid)));
}

RimHookMultiset hg_decompose(const ReversePlanePartition& pi, std::vector<PeelStep>* trace) {
    RimHookMultiset m(pi.shape());
    ReversePlanePartition cur = pi;
    int steps = 0;
    while (auto step = hg_peel(cur)) {
        if (++steps > pi.total()) throw std::logic_error("hg_decompose: |pi| failed to decrease");
        m.add(step->first.hook.defining_cell);
        cur = std::move(step->second);
        if (trace) trace->push_back(std::move(step->first));
    }
    return m;
}

ReversePlanePartition hg_build(const RimHookMultiset& m) {
    return diag_rsk(m, Scheme::hillman_grassl);
}

std::map<int, Shape> hg_gk_profile(const RimHookMultiset& m, int oracle_bound) {
    std::map<int, Shape> profile;
    const Shape& shape = m.shape();
    for (int d = shape.min_diagonal(); d <= shape.max_diagonal(); ++d)
        profile[d] = chain_partition(submatrix_nw(m, d), ChainVariant::a_hg, ChainVariant::c_hg,
                                     oracle_bound);
    return profile;
}

} // namespace rimhook
