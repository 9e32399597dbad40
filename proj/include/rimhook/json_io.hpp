#pragma once

#include <map>

#include <json.hpp>

#include "rimhook/diag_engine.hpp"
#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"
#include "rimhook/rsk.hpp"

// Wire format: shape = array of ints, cell = [row, col] 1-based, word =
// array of ints, filling = array of arrays, multiset = array of cells with
// repetition sorted by the active scheme's insertion order. Emitted
// documents are compact with keys in lexicographic order, so goldens are
// byte-stable.

namespace rimhook {

using json = nlohmann::json;

json to_json(const Shape& shape);
json to_json(Cell cell);
json to_json(const Grid& grid);
json to_json(const Word& word);
json to_json(const Tableau& tableau);
json to_json(const ReversePlanePartition& rpp);
json multiset_to_json(const RimHookMultiset& m, Scheme scheme);
// {"d": {"conjugate": [...], "partition": [...]}, ...}
json profile_to_json(const std::map<int, Shape>& profile);

Shape shape_from_json(const json& j);
Cell cell_from_json(const json& j);
Word word_from_json(const json& j);
Grid grid_from_json(const json& j);
RimHookMultiset multiset_from_json(const Shape& shape, const json& j);

// Parses text to JSON, mapping parse failures to domain errors.
json parse_json(const std::string& text, const char* what);

} // namespace rimhook
