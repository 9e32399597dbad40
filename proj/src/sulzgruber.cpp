#include "rimhook/sulzgruber.hpp"

#include <algorithm>

#include "rimhook/greene_kleitman.hpp"

namespace rimhook {

InsertResult sulz_insert(const ReversePlanePartition& pi, const RimHook& hook,
                         InsertionTrace* trace) {
    const Shape& shape = pi.shape();
    if (hook.shape != shape)
        throw domain_error("shape-mismatch", "hook belongs to " + to_string(hook.shape) +
                                                 ", filling has shape " + to_string(shape));
    Grid grid = pi.rows();
    std::vector<Cell> strip = hook.support;

    for (int rounds = 0; !strip.empty(); ++rounds) {
        if (rounds > hook.length())
            throw std::logic_error("sulz_insert: strip failed to shrink");

        int min_height = grid[strip[0].row - 1][strip[0].col - 1];
        for (Cell c : strip) min_height = std::min(min_height, grid[c.row - 1][c.col - 1]);

        InsertStep step{strip, min_height, {}, false};

        // Maximal northeast-terminal run sitting at the minimal height.
        std::size_t cut = strip.size();
        while (cut > 0 && grid[strip[cut - 1].row - 1][strip[cut - 1].col - 1] == min_height) --cut;

        if (cut == strip.size()) {
            // Minimal height only in the interior; segments cannot break off.
            if (trace) trace->push_back(std::move(step));
            return InsertFailure::no_terminal_run;
        }

        for (std::size_t t = cut; t < strip.size(); ++t) {
            ++grid[strip[t].row - 1][strip[t].col - 1];
            step.broken_off.push_back(strip[t]);
        }
        strip.resize(cut);

        if (!strip.empty()) {
            step.shifted = true;
            for (Cell& c : strip) {
                c = Cell{c.row - 1, c.col - 1}; // one step northwest, same diagonal
                if (!shape.contains(c)) {
                    if (trace) trace->push_back(std::move(step));
                    return InsertFailure::shifted_off_shape;
                }
            }
        }
        if (trace) trace->push_back(std::move(step));
    }

    if (find_rpp_violation(shape, grid)) return InsertFailure::invalid_result;
    return ReversePlanePartition(shape, std::move(grid));
}

ReversePlanePartition sulz_build(const RimHookMultiset& m,
                                 std::vector<InsertionTrace>* traces) {
    Numbering numbering(m.shape(), Scheme::sulzgruber);
    ReversePlanePartition pi = ReversePlanePartition::zero(m.shape());
    for (Cell c : insertion_sorted_cells(m, numbering)) {
        InsertionTrace trace;
        InsertResult result = sulz_insert(pi, rim_hook(m.shape(), c), traces ? &trace : nullptr);
        if (std::holds_alternative<InsertFailure>(result))
            throw std::logic_error("sulz_build: insertion-order fold hit a failure at hook " +
                                   to_string(c));
        pi = std::get<ReversePlanePartition>(std::move(result));
        if (traces) traces->push_back(std::move(trace));
    }
    return pi;
}

namespace {

// Upward when the box above holds an equal entry, else rightward, else stop.
std::vector<Cell> lattice_path(const ReversePlanePartition& pi, Cell start) {
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

// Rim hook spanning the path's diagonals: same length, same northeast end.
RimHook hook_from_path(const Shape& shape, const std::vector<Cell>& path) {
    int lo = diagonal_of(path.front());
    int hi = diagonal_of(path.back());
    if (hi - lo + 1 != static_cast<int>(path.size()))
        throw std::logic_error("path does not cover consecutive diagonals");
    Cell sw = shape.border_box(lo);
    if (shape.col_length(sw.col) != sw.row)
        throw std::logic_error("path start diagonal has no bottom-of-column border box");
    if (path.back() != shape.border_box(hi))
        throw std::logic_error("path does not end at a border box");
    RimHook hook = rim_hook(shape, Cell{path.back().row, sw.col});
    if (hook.length() != static_cast<int>(path.size()))
        throw std::logic_error("hook length disagrees with path length");
    return hook;
}

ReversePlanePartition subtract_path(const ReversePlanePartition& pi,
                                    const std::vector<Cell>& path, const char* op) {
    Grid grid = pi.rows();
    for (Cell c : path) --grid[c.row - 1][c.col - 1];
    if (auto v = find_rpp_violation(pi.shape(), grid))
        throw std::logic_error(std::string(op) + ": subtraction broke the filling: " + v->message());
    return ReversePlanePartition(pi.shape(), std::move(grid));
}

} // namespace

std::optional<std::pair<ReverseStep, ReversePlanePartition>> sulz_reverse(
    const ReversePlanePartition& pi) {
    const Shape& shape = pi.shape();
    require_nonempty(shape, "sulz_reverse");
    if (pi.is_zero()) return std::nullopt;

    for (int d = shape.max_diagonal(); d >= shape.min_diagonal(); --d) {
        CellClass cls = classify_diagonal(shape, d);
        if (cls == CellClass::neither) continue;
        for (Cell b : shape.diagonal_cells_se_to_nw(d)) {
            int entry = pi.at(b);
            int left = pi.at_or_zero(Cell{b.row, b.col - 1});
            int above = pi.at_or_zero(Cell{b.row - 1, b.col});
            bool candidate = cls == CellClass::type_o
                                 ? entry > left
                                 : entry > left && entry > above;
            if (!candidate) continue;
            std::vector<Cell> path = lattice_path(pi, b);
            ReverseStep step{b, path, hook_from_path(shape, path)};
            ReversePlanePartition rest = subtract_path(pi, path, "sulz_reverse");
            return std::make_pair(std::move(step), std::move(rest));
        }
    }
    throw std::logic_error("sulz_reverse: nonzero filling without a candidate");
}

RimHookMultiset sulz_decompose(const ReversePlanePartition& pi, std::vector<ReverseStep>* trace) {
    Numbering numbering(pi.shape(), Scheme::sulzgruber);
    RimHookMultiset m(pi.shape());
    ReversePlanePartition cur = pi;
    int last_order = pi.shape().size() + 1;
    while (auto step = sulz_reverse(cur)) {
        int order = numbering.order(step->first.hook.defining_cell);
        if (order > last_order)
            throw std::logic_error("sulz_decompose: hooks left out of insertion order");
        last_order = order;
        m.add(step->first.hook.defining_cell);
        cur = std::move(step->second);
        if (trace) trace->push_back(std::move(step->first));
    }
    return m;
}

std::map<int, Shape> gk_profile(const RimHookMultiset& m, int oracle_bound) {
    std::map<int, Shape> profile;
    const Shape& shape = m.shape();
    for (int d = shape.min_diagonal(); d <= shape.max_diagonal(); ++d)
        profile[d] = chain_partition(submatrix_nw(m, d), ChainVariant::a_s, ChainVariant::c_s,
                                     oracle_bound);
    return profile;
}

} // namespace rimhook
