#pragma once

#include <map>

#include "rimhook/rim_hook.hpp"
#include "rimhook/rpp.hpp"
#include "rimhook/rsk.hpp"

namespace rimhook {

// The two correspondences share one engine and differ only in these two cell
// numberings, both bijections onto 1..|shape|:
//   sulzgruber:     insertion order column-major; labels row-major.
//   hillman_grassl: insertion order down columns starting at the rightmost;
//                   labels right-to-left along rows starting at the top.
enum class Scheme { sulzgruber, hillman_grassl };

class Numbering {
public:
    Numbering(Shape shape, Scheme scheme);

    const Shape& shape() const { return shape_; }
    Scheme scheme() const { return scheme_; }

    int order(Cell c) const;
    int label(Cell c) const;
    Cell cell_at_order(int position) const;
    Cell cell_with_label(int label) const;

private:
    Shape shape_;
    Scheme scheme_;
    std::map<Cell, int> order_;
    std::map<Cell, int> label_;
    std::vector<Cell> by_order_;
    std::vector<Cell> by_label_;
};

// Defining cells of m expanded by multiplicity, in insertion order.
std::vector<Cell> insertion_sorted_cells(const RimHookMultiset& m, const Numbering& numbering);

// Labels of the hooks of m read in insertion order.
Word multiset_word(const RimHookMultiset& m, const Numbering& numbering);
Word multiset_word(const RimHookMultiset& m, Scheme scheme);

// Subword for each diagonal of the shape: the letters whose hooks have
// support on that diagonal. Every diagonal is keyed, possibly with an empty
// word.
std::map<int, Word> diagonal_words(const RimHookMultiset& m, const Numbering& numbering);
std::map<int, Word> diagonal_words(const RimHookMultiset& m, Scheme scheme);

// Writes each per-diagonal partition along its diagonal, largest part at the
// border box, zero-padded toward the northwest. Rejects partitions longer
// than their diagonal.
ReversePlanePartition assemble_rpp(const Shape& shape, const std::map<int, Shape>& per_diagonal);

// RSK-insert every diagonal word and assemble the P-shapes.
ReversePlanePartition diag_rsk(const RimHookMultiset& m, Scheme scheme);

} // namespace rimhook
