#pragma once

#include <utility>
#include <vector>

#include "rimhook/shape.hpp"

namespace rimhook {

// Finite sequence of positive integers.
using Word = std::vector<int>;

// Cells touched by one row insertion, top row first. Column indices weakly
// decrease down the path.
using BumpingPath = std::vector<Cell>;

// Ragged filling with positive entries. Semistandard means weakly increasing
// rows, strictly increasing columns, weakly decreasing row lengths.
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool empty() const { return rows.empty(); }
    Shape shape() const; // throws if row lengths are not weakly decreasing

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool is_semistandard(const Tableau& t);
// Semistandard and the entries are exactly 1..n, each once.
bool is_standard(const Tableau& t);

// Bump k into t (t must be semistandard). Adds one box.
std::pair<Tableau, BumpingPath> row_insert(const Tableau& t, int k);

// Insertion tableau P(w) and recording tableau Q(w).
std::pair<Tableau, Tableau> insert_word(const Word& w);

// Recovers w from (P(w), Q(w)). Throws on shape mismatch or non-standard Q.
Word reverse_insert_word(const Tableau& p, const Tableau& q);

// Rows left to right, bottom row first.
Word reading_word(const Tableau& t);

// Reachability under the elementary Knuth relations, decided by
// breadth-first closure so it stays independent of RSK. Words longer than
// max_length are rejected.
bool knuth_equivalent(const Word& u, const Word& v, int max_length = 8);

// Words one elementary Knuth relation away from w.
std::vector<Word> knuth_neighbors(const Word& w);

// Subsequence of letters lying in [lo, hi].
Word restrict_word(const Word& w, int lo, int hi);

// Boxes with entries <= k; always a valid tableau.
Tableau restrict_tableau(const Tableau& p, int k);

} // namespace rimhook
