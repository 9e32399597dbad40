#include "rimhook/rpp.hpp"

#include <numeric>

namespace rimhook {

std::string RppViolation::message() const {
    switch (kind) {
        case Kind::shape_mismatch:
            return "row " + std::to_string(at.row) + " does not match the shape";
        case Kind::negative_entry:
            return "negative entry at " + to_string(at);
        case Kind::row_decrease:
            return "row violation at " + to_string(at) + "-" + to_string(neighbor);
        case Kind::col_decrease:
            return "column violation at " + to_string(at) + "-" + to_string(neighbor);
    }
    return "invalid";
}

std::optional<RppViolation> find_rpp_violation(const Shape& shape, const Grid& rows) {
    using Kind = RppViolation::Kind;
    if (static_cast<int>(rows.size()) != shape.rows())
        return RppViolation{Kind::shape_mismatch, Cell{static_cast<int>(rows.size()), 0}, {}};
    for (int i = 1; i <= shape.rows(); ++i) {
        const auto& row = rows[i - 1];
        if (static_cast<int>(row.size()) != shape.row_length(i))
            return RppViolation{Kind::shape_mismatch, Cell{i, static_cast<int>(row.size())}, {}};
        for (int j = 1; j <= shape.row_length(i); ++j) {
            int v = row[j - 1];
            if (v < 0) return RppViolation{Kind::negative_entry, Cell{i, j}, {}};
            if (j > 1 && row[j - 2] > v)
                return RppViolation{Kind::row_decrease, Cell{i, j - 1}, Cell{i, j}};
            if (i > 1 && rows[i - 2][j - 1] > v)
                return RppViolation{Kind::col_decrease, Cell{i - 1, j}, Cell{i, j}};
        }
    }
    return std::nullopt;
}

ReversePlanePartition::ReversePlanePartition(Shape shape, Grid rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (auto v = find_rpp_violation(shape_, rows_))
        throw domain_error("invalid-rpp", v->message());
}

ReversePlanePartition ReversePlanePartition::zero(const Shape& shape) {
    Grid rows;
    rows.reserve(static_cast<std::size_t>(shape.rows()));
    for (int i = 1; i <= shape.rows(); ++i)
        rows.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
    return ReversePlanePartition(shape, std::move(rows));
}

int ReversePlanePartition::at(Cell c) const {
    if (!shape_.contains(c))
        throw domain_error("cell-outside-shape",
                           "cell " + to_string(c) + " not in shape " + to_string(shape_));
    return rows_[c.row - 1][c.col - 1];
}

int ReversePlanePartition::total() const {
    int sum = 0;
    for (const auto& row : rows_) sum += std::accumulate(row.begin(), row.end(), 0);
    return sum;
}

ReversePlanePartition validate_rpp(const Shape& shape, Grid rows) {
    return ReversePlanePartition(std::move(shape), std::move(rows));
}

Shape diagonal_reading(const ReversePlanePartition& rpp, int d) {
    std::vector<int> parts;
    for (Cell c : rpp.shape().diagonal_cells_se_to_nw(d)) {
        int v = rpp.at(c);
        if (v == 0) break; // entries weakly decrease toward the northwest
        parts.push_back(v);
    }
    return parts.empty() ? Shape() : Shape(std::move(parts));
}

} // namespace rimhook

