#include "rimhook/json_io.hpp"

namespace rimhook {

json to_json(const Shape& shape) { return json(shape.parts()); }

json to_json(Cell cell) { return json::array({cell.row, cell.col}); }

json to_json(const Grid& grid) {
    json j = json::array();
    for (const auto& row : grid) j.push_back(row);
    return j;
}

json to_json(const Word& word) { return json(word); }

json to_json(const Tableau& tableau) { return to_json(tableau.rows); }

json to_json(const ReversePlanePartition& rpp) { return to_json(rpp.rows()); }

json multiset_to_json(const RimHookMultiset& m, Scheme scheme) {
    Numbering numbering(m.shape(), scheme);
    json j = json::array();
    for (Cell c : insertion_sorted_cells(m, numbering)) j.push_back(to_json(c));
    return j;
}

json profile_to_json(const std::map<int, Shape>& profile) {
    json j = json::object();
    for (const auto& [d, mu] : profile) {
        json entry;
        entry["partition"] = mu.empty() ? json::array() : json(mu.parts());
        entry["conjugate"] = mu.empty() ? json::array() : json(mu.conjugate().parts());
        j[std::to_string(d)] = std::move(entry);
    }
    return j;
}

namespace {
int int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw domain_error("malformed-json", std::string(what) + " must be an integer");
    return j.get<int>();
}
} // namespace

Shape shape_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("malformed-json", "shape must be an array of integers");
    std::vector<int> parts;
    for (const auto& part : j) parts.push_back(int_from_json(part, "shape part"));
    return Shape(std::move(parts));
}

Cell cell_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw domain_error("malformed-json", "cell must be a [row, col] pair");
    return Cell{int_from_json(j[0], "cell row"), int_from_json(j[1], "cell col")};
}

Word word_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("malformed-json", "word must be an array of integers");
    Word w;
    for (const auto& letter : j) w.push_back(int_from_json(letter, "letter"));
    return w;
}

Grid grid_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("malformed-json", "filling must be an array of arrays");
    Grid grid;
    for (const auto& row : j) {
        if (!row.is_array())
            throw domain_error("malformed-json", "filling must be an array of arrays");
        std::vector<int> out;
        for (const auto& v : row) out.push_back(int_from_json(v, "entry"));
        grid.push_back(std::move(out));
    }
    return grid;
}

RimHookMultiset multiset_from_json(const Shape& shape, const json& j) {
    if (!j.is_array()) throw domain_error("malformed-json", "hooks must be an array of cells");
    RimHookMultiset m(shape);
    for (const auto& cell : j) m.add(cell_from_json(cell));
    return m;
}

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw domain_error("malformed-json", std::string(what) + " is not valid JSON: " + text);
    return j;
}

} // namespace rimhook
