#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rimhook/shape.hpp"

namespace rimhook {

using Grid = std::vector<std::vector<int>>;

struct RppViolation {
    enum class Kind { shape_mismatch, negative_entry, row_decrease, col_decrease };
    Kind kind;
    Cell at;        // offending cell
    Cell neighbor;  // second cell of the pair for monotonicity violations
    std::string message() const;
};

// First violation in row-major scan order, or nullopt if the filling is a
// valid reverse plane partition of the shape.
std::optional<RppViolation> find_rpp_violation(const Shape& shape, const Grid& rows);

// Nonnegative filling weakly increasing along rows and down columns.
class ReversePlanePartition {
public:
    ReversePlanePartition(Shape shape, Grid rows); // throws domain_error on violation
    static ReversePlanePartition zero(const Shape& shape);

    const Shape& shape() const { return shape_; }
    const Grid& rows() const { return rows_; }

    int at(Cell c) const;
    // Missing neighbors read as 0 in all the insertion procedures.
    int at_or_zero(Cell c) const {
        return shape_.contains(c) ? rows_[c.row - 1][c.col - 1] : 0;
    }

    int total() const;
    bool is_zero() const { return total() == 0; }

    friend bool operator==(const ReversePlanePartition&, const ReversePlanePartition&) = default;

private:
    Shape shape_;
    Grid rows_;
};

ReversePlanePartition validate_rpp(const Shape& shape, Grid rows);

// Partition read along diagonal d, largest entry at the border box, moving
// northwest; trailing zeros stripped. Empty when the diagonal is all zero.
Shape diagonal_reading(const ReversePlanePartition& rpp, int d);

} // namespace rimhook
