#include "rimhook/shape.hpp"

#include <algorithm>
#include <numeric>

namespace rimhook {

std::string to_string(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(const Shape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.parts()[i]);
    }
    return out + ")";
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw domain_error("invalid-shape",
                               "part " + std::to_string(i + 1) + " is " +
                                   std::to_string(parts_[i]) + ", must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("invalid-shape",
                               "parts must be weakly decreasing, got " +
                                   std::to_string(parts_[i - 1]) + " before " +
                                   std::to_string(parts_[i]));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Shape::col_length(int j) const {
    int n = 0;
    while (n < rows() && parts_[n] >= j) ++n;
    return j >= 1 ? n : 0;
}

Shape Shape::conjugate() const {
    require_nonempty(*this, "conjugate");
    std::vector<int> cols(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j) cols[j - 1] = col_length(j);
    return Shape(std::move(cols));
}

int Shape::diagonal_length(int d) const {
    if (!has_diagonal(d)) return 0;
    Cell r = border_box(d);
    return std::min(r.row, r.col);
}

Cell Shape::border_box(int d) const {
    require_nonempty(*this, "border_box");
    if (!has_diagonal(d))
        throw domain_error("empty-diagonal", "shape " + to_string(*this) +
                                                 " has no diagonal " + std::to_string(d));
    // The southeasternmost cell: deepest row i with lambda_i >= i + d.
    for (int i = rows(); i >= 1; --i) {
        int j = i + d;
        if (j >= 1 && parts_[i - 1] >= j) return Cell{i, j};
    }
    throw std::logic_error("border_box: nonempty diagonal without a maximal cell");
}

std::vector<Cell> Shape::diagonal_cells_se_to_nw(int d) const {
    std::vector<Cell> cells;
    if (!has_diagonal(d)) return cells;
    Cell r = border_box(d);
    for (int i = r.row; i >= 1 && i + d >= 1; --i) cells.push_back(Cell{i, i + d});
    return cells;
}

std::vector<Cell> Shape::cells_row_major() const {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) cells.push_back(Cell{i, j});
    return cells;
}

bool Shape::is_outer_corner(Cell c) const {
    return contains(c) && c.col == row_length(c.row) && row_length(c.row + 1) < c.col;
}

int hook_length(const Shape& shape, Cell cell) {
    require_nonempty(shape, "hook_length");
    if (!shape.contains(cell))
        throw domain_error("cell-outside-shape",
                           "cell " + to_string(cell) + " not in shape " + to_string(shape));
    int arm = shape.row_length(cell.row) - cell.col;
    int leg = shape.col_length(cell.col) - cell.row;
    return arm + leg + 1;
}

CellClass classify_diagonal(const Shape& shape, int d) {
    require_nonempty(shape, "classify_cell");
    // Outer-corner diagonals first; they win over type-A seeds.
    for (int i = 1; i <= shape.rows(); ++i) {
        Cell corner{i, shape.row_length(i)};
        if (shape.is_outer_corner(corner) && diagonal_of(corner) == d)
            return CellClass::type_o;
    }
    // Type-A seeds: bottom-of-column cells in the same row as an outer corner.
    for (int j = 1; j <= shape.row_length(1); ++j) {
        Cell bottom{shape.col_length(j), j};
        if (diagonal_of(bottom) != d) continue;
        Cell row_end{bottom.row, shape.row_length(bottom.row)};
        if (shape.is_outer_corner(row_end)) return CellClass::type_a;
    }
    return CellClass::neither;
}

CellClass classify_cell(const Shape& shape, Cell cell) {
    require_nonempty(shape, "classify_cell");
    if (!shape.contains(cell))
        throw domain_error("cell-outside-shape",
                           "cell " + to_string(cell) + " not in shape " + to_string(shape));
    return classify_diagonal(shape, diagonal_of(cell));
}

void require_nonempty(const Shape& shape, const char* op) {
    if (shape.empty())
        throw domain_error("empty-shape", std::string(op) + " requires a nonempty shape");
}

} // namespace rimhook
