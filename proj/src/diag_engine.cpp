#include "rimhook/diag_engine.hpp"

#include <algorithm>

namespace rimhook {

Numbering::Numbering(Shape shape, Scheme scheme) : shape_(std::move(shape)), scheme_(scheme) {
    require_nonempty(shape_, "Numbering");
    int n = shape_.size();
    by_order_.resize(static_cast<std::size_t>(n) + 1);
    by_label_.resize(static_cast<std::size_t>(n) + 1);

    int t = 0;
    if (scheme_ == Scheme::sulzgruber) {
        for (int j = 1; j <= shape_.row_length(1); ++j)
            for (int i = 1; i <= shape_.col_length(j); ++i) {
                order_[Cell{i, j}] = ++t;
                by_order_[t] = Cell{i, j};
            }
        t = 0;
        for (int i = 1; i <= shape_.rows(); ++i)
            for (int j = 1; j <= shape_.row_length(i); ++j) {
                label_[Cell{i, j}] = ++t;
                by_label_[t] = Cell{i, j};
            }
    } else {
        for (int j = shape_.row_length(1); j >= 1; --j)
            for (int i = 1; i <= shape_.col_length(j); ++i) {
                order_[Cell{i, j}] = ++t;
                by_order_[t] = Cell{i, j};
            }
        t = 0;
        for (int i = 1; i <= shape_.rows(); ++i)
            for (int j = shape_.row_length(i); j >= 1; --j) {
                label_[Cell{i, j}] = ++t;
                by_label_[t] = Cell{i, j};
            }
    }
}

namespace {
int lookup(const std::map<Cell, int>& table, Cell c, const Shape& shape, const char* what) {
    auto it = table.find(c);
    if (it == table.end())
        throw domain_error("cell-outside-shape", std::string(what) + " of cell " + to_string(c) +
                                                     " undefined in shape " + to_string(shape));
    return it->second;
}

Cell lookup_inverse(const std::vector<Cell>& table, int v, const char* what) {
    if (v < 1 || v >= static_cast<int>(table.size()))
        throw domain_error("out-of-range", std::string(what) + " " + std::to_string(v) +
                                               " out of range");
    return table[static_cast<std::size_t>(v)];
}
} // namespace

int Numbering::order(Cell c) const { return lookup(order_, c, shape_, "order"); }
int Numbering::label(Cell c) const { return lookup(label_, c, shape_, "label"); }
Cell Numbering::cell_at_order(int position) const { return lookup_inverse(by_order_, position, "order"); }
Cell Numbering::cell_with_label(int label) const { return lookup_inverse(by_label_, label, "label"); }

std::vector<Cell> insertion_sorted_cells(const RimHookMultiset& m, const Numbering& numbering) {
    if (m.shape() != numbering.shape())
        throw domain_error("shape-mismatch", "multiset and numbering shapes differ");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(m.total()));
    for (const auto& [cell, count] : m.counts())
        for (int c = 0; c < count; ++c) cells.push_back(cell);
    std::sort(cells.begin(), cells.end(),
              [&](Cell a, Cell b) { return numbering.order(a) < numbering.order(b); });
    return cells;
}

Word multiset_word(const RimHookMultiset& m, const Numbering& numbering) {
    Word w;
    for (Cell c : insertion_sorted_cells(m, numbering)) w.push_back(numbering.label(c));
    return w;
}

Word multiset_word(const RimHookMultiset& m, Scheme scheme) {
    return multiset_word(m, Numbering(m.shape(), scheme));
}

std::map<int, Word> diagonal_words(const RimHookMultiset& m, const Numbering& numbering) {
    const Shape& shape = numbering.shape();
    std::map<int, Word> words;
    for (int d = shape.min_diagonal(); d <= shape.max_diagonal(); ++d) words[d] = Word{};
    for (Cell c : insertion_sorted_cells(m, numbering)) {
        auto [lo, hi] = rim_hook_span(shape, c);
        int letter = numbering.label(c);
        for (int d = lo; d <= hi; ++d) words[d].push_back(letter);
    }
    return words;
}

std::map<int, Word> diagonal_words(const RimHookMultiset& m, Scheme scheme) {
    return diagonal_words(m, Numbering(m.shape(), scheme));
}

ReversePlanePartition assemble_rpp(const Shape& shape, const std::map<int, Shape>& per_diagonal) {
    require_nonempty(shape, "assemble_rpp");
    Grid grid;
    for (int i = 1; i <= shape.rows(); ++i)
        grid.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
    for (const auto& [d, mu] : per_diagonal) {
        if (mu.empty()) continue;
        auto cells = shape.diagonal_cells_se_to_nw(d);
        if (mu.rows() > static_cast<int>(cells.size()))
            throw domain_error("too-many-parts",
                               "partition " + to_string(mu) + " does not fit on diagonal " +
                                   std::to_string(d) + " of " + to_string(shape));
        for (int t = 0; t < mu.rows(); ++t)
            grid[cells[t].row - 1][cells[t].col - 1] = mu.parts()[t];
    }
    return ReversePlanePartition(shape, std::move(grid));
}

ReversePlanePartition diag_rsk(const RimHookMultiset& m, Scheme scheme) {
    Numbering numbering(m.shape(), scheme);
    std::map<int, Shape> shapes;
    for (const auto& [d, word] : diagonal_words(m, numbering))
        shapes[d] = insert_word(word).first.shape();
    return assemble_rpp(m.shape(), shapes);
}

} // namespace rimhook
