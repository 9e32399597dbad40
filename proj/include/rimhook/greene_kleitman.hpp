#pragma once

#include <vector>

#include "rimhook/rim_hook.hpp"
#include "rimhook/rsk.hpp"
#include "rimhook/shape.hpp"

namespace rimhook {

// delta_k(w): largest total size of k pairwise-disjoint weakly increasing
// subwords, computed by memoized exhaustive search over chain tails. This is
// deliberately independent of RSK so it can serve as an oracle.
int delta(const Word& w, int k, int oracle_bound = 12);

// gamma_k(w): same with strictly decreasing subwords.
int gamma(const Word& w, int k, int oracle_bound = 12);

// Partition with parts delta_k - delta_{k-1}; the gamma differences are
// cross-checked against its conjugate before returning.
Shape shape_from_word(const Word& w, int oracle_bound = 12);

// Rectangular nonnegative integer matrix, 1-based access.
struct ChainMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> entries; // row-major

    static ChainMatrix zero(int rows, int cols);

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i - 1) * n_cols + (j - 1)]; }
    int& at(int i, int j) { return entries[static_cast<std::size_t>(i - 1) * n_cols + (j - 1)]; }
    int total() const;
    int nonzero_count() const;

    friend bool operator==(const ChainMatrix&, const ChainMatrix&) = default;
};

// The four chain orders. A-chains are multisets of positions, each usable up
// to its matrix entry; C-chains use distinct nonzero positions at most once.
//   a_hg: i weakly up, j weakly down      c_hg: i strictly up, j strictly up
//   a_s:  i weakly up, j weakly up        c_s:  i strictly down, j strictly up
enum class ChainVariant { a_hg, c_hg, a_s, c_s };

// Maximum of |W_1| + ... + |W_k| over collections of k chains of the given
// variant. Exhaustive search with memoization on chain tails.
int chain_max(const ChainMatrix& b, int k, ChainVariant variant, int oracle_bound = 14);

// B_d: multiplicities of the hooks whose defining cell lies weakly northwest
// of the border box r_d, as an i x j matrix for r_d = (i, j).
ChainMatrix submatrix_nw(const RimHookMultiset& m, int d);

// Partition whose parts are the a-variant chain-maximum differences; the
// c-variant differences are cross-checked against its conjugate.
Shape chain_partition(const ChainMatrix& b, ChainVariant a_variant, ChainVariant c_variant,
                      int oracle_bound = 14);

} // namespace rimhook
