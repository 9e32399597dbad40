#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rimhook/error.hpp"

namespace rimhook {

// Box of a Young diagram, 1-based, rows counted from the top.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr int diagonal_of(Cell c) { return c.col - c.row; }

std::string to_string(Cell c);

// Integer partition together with its Young-diagram geometry. Immutable.
// The default-constructed shape is empty; only validate_rpp, genfun_coeffs
// and the enumerators accept it, every other operation rejects it.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }

    // lambda_i; zero past the last row.
    int row_length(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    // lambda'_j = number of rows with at least j boxes.
    int col_length(int j) const;

    bool contains(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
    }

    Shape conjugate() const;

    // Diagonals d = col - row run contiguously from 1 - rows to lambda_1 - 1.
    int min_diagonal() const { return 1 - rows(); }
    int max_diagonal() const { return parts_.empty() ? -1 : parts_[0] - 1; }
    bool has_diagonal(int d) const {
        return !empty() && d >= min_diagonal() && d <= max_diagonal();
    }
    int diagonal_length(int d) const;

    // Border box r_d: the unique southeasternmost cell of diagonal d.
    Cell border_box(int d) const;
    std::vector<Cell> diagonal_cells_se_to_nw(int d) const;

    std::vector<Cell> cells_row_major() const;

    // Cell (i, lambda_i) whose removal leaves a partition.
    bool is_outer_corner(Cell c) const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::string to_string(const Shape& s);

// arm + leg + 1 of a cell.
int hook_length(const Shape& shape, Cell cell);

// Reverse-insertion cell classes. A cell is type O when it shares a diagonal
// with an outer corner, type A when it instead shares a diagonal with a
// bottom-of-column cell lying in the same row as an outer corner.
enum class CellClass { type_o, type_a, neither };

CellClass classify_cell(const Shape& shape, Cell cell);

// Class is constant along diagonals; this is the per-diagonal view.
CellClass classify_diagonal(const Shape& shape, int d);

void require_nonempty(const Shape& shape, const char* op);

} // namespace rimhook
