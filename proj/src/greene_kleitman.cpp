#include "rimhook/greene_kleitman.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

namespace rimhook {

namespace {

// Max total of k disjoint chains in w. A chain accepts letter x after tail t
// when accepts(t, x); tails start at `empty_tail`.
class WordChainSearch {
public:
    WordChainSearch(const Word& w, bool weakly_increasing)
        : word_(w), weak_(weakly_increasing), memo_(w.size() + 1) {}

    int run(int k, int empty_tail) {
        if (k <= 0 || word_.empty()) return 0;
        std::vector<int> tails(static_cast<std::size_t>(k), empty_tail);
        return search(0, tails);
    }

private:
    bool accepts(int tail, int letter) const { return weak_ ? letter >= tail : letter < tail; }

    int search(std::size_t pos, std::vector<int>& tails) {
        if (pos == word_.size()) return 0;
        auto [it, fresh] = memo_[pos].try_emplace(tails, -1);
        if (!fresh) return it->second;
        int best = search(pos + 1, tails); // leave this letter unused
        int letter = word_[pos];
        for (std::size_t i = 0; i < tails.size(); ++i) {
            if (i > 0 && tails[i] == tails[i - 1]) continue; // identical chains
            if (!accepts(tails[i], letter)) continue;
            std::vector<int> next = tails;
            next[i] = letter;
            std::sort(next.begin(), next.end());
            best = std::max(best, 1 + search(pos + 1, next));
        }
        memo_[pos][tails] = best;
        return best;
    }

    const Word& word_;
    bool weak_;
    std::vector<std::map<std::vector<int>, int>> memo_;
};

void check_word_bound(const Word& w, int bound, const char* op) {
    if (static_cast<int>(w.size()) > bound)
        throw domain_error("bound-exceeded", std::string(op) + " is bounded at length " +
                                                 std::to_string(bound));
    for (int x : w)
        if (x < 1)
            throw domain_error("invalid-word", "letter " + std::to_string(x) + " is not positive");
}

} // namespace

int delta(const Word& w, int k, int oracle_bound) {
    check_word_bound(w, oracle_bound, "delta");
    return WordChainSearch(w, true).run(k, 0);
}

int gamma(const Word& w, int k, int oracle_bound) {
    check_word_bound(w, oracle_bound, "gamma");
    return WordChainSearch(w, false).run(k, INT_MAX);
}

Shape shape_from_word(const Word& w, int oracle_bound) {
    check_word_bound(w, oracle_bound, "shape_from_word");
    if (w.empty()) return Shape();
    int n = static_cast<int>(w.size());

    std::vector<int> parts;
    int prev = 0;
    for (int k = 1; prev < n; ++k) {
        int cur = delta(w, k, oracle_bound);
        int part = cur - prev;
        if (part <= 0 || (!parts.empty() && part > parts.back()))
            throw std::logic_error("shape_from_word: delta differences are not a partition");
        parts.push_back(part);
        prev = cur;
    }
    Shape shape(std::move(parts));

    std::vector<int> conj_parts;
    prev = 0;
    for (int k = 1; prev < n; ++k) {
        int cur = gamma(w, k, oracle_bound);
        if (cur <= prev) throw std::logic_error("shape_from_word: gamma maxima stalled");
        conj_parts.push_back(cur - prev);
        prev = cur;
    }
    if (Shape(std::move(conj_parts)) != shape.conjugate())
        throw std::logic_error("shape_from_word: gamma differences disagree with the conjugate");
    return shape;
}

ChainMatrix ChainMatrix::zero(int rows, int cols) {
    return ChainMatrix{rows, cols,
                       std::vector<int>(static_cast<std::size_t>(rows) * cols, 0)};
}

int ChainMatrix::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

int ChainMatrix::nonzero_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](int v) { return v != 0; }));
}

namespace {

struct Pos {
    int i, j;
};

// Chains sorted by a linear extension of the variant's comparability order
// can be grown left to right, so one pass over the occurrence list with k
// tails explores every collection. A position enters the list once per unit
// of multiplicity: an A-chain may repeat it, a C-chain cannot (its strict
// monotonicity refuses equal tails), but distinct chains of either kind may
// each consume one of its copies.
class MatrixChainSearch {
public:
    MatrixChainSearch(const ChainMatrix& b, ChainVariant v, int k) : variant_(v) {
        bool strict = v == ChainVariant::c_hg || v == ChainVariant::c_s;
        for (int i = 1; i <= b.n_rows; ++i)
            for (int j = 1; j <= b.n_cols; ++j) {
                int mult = b.at(i, j);
                if (mult <= 0) continue;
                // each chain takes a strict-variant position at most once
                if (strict) mult = std::min(mult, k);
                for (int c = 0; c < mult; ++c) occurrences_.push_back(Pos{i, j});
            }
        std::sort(occurrences_.begin(), occurrences_.end(), [v](Pos a, Pos b2) {
            switch (v) {
                case ChainVariant::a_s:
                case ChainVariant::c_hg:
                    return a.i != b2.i ? a.i < b2.i : a.j < b2.j;
                case ChainVariant::a_hg:
                    return a.i != b2.i ? a.i < b2.i : a.j > b2.j;
                case ChainVariant::c_s:
                    return a.j != b2.j ? a.j < b2.j : a.i > b2.i;
            }
            return false;
        });
        memo_.resize(occurrences_.size() + 1);
    }

    int run(int k) {
        if (k <= 0 || occurrences_.empty()) return 0;
        std::vector<int> tails(static_cast<std::size_t>(k), kEmpty);
        return search(0, tails);
    }

private:
    static constexpr int kEmpty = -1;

    static int encode(Pos p) { return p.i * 4096 + p.j; }

    bool accepts(int tail, Pos p) const {
        if (tail == kEmpty) return true;
        int ti = tail / 4096, tj = tail % 4096;
        switch (variant_) {
            case ChainVariant::a_s: return ti <= p.i && tj <= p.j;
            case ChainVariant::a_hg: return ti <= p.i && tj >= p.j;
            case ChainVariant::c_hg: return ti < p.i && tj < p.j;
            case ChainVariant::c_s: return ti > p.i && tj < p.j;
        }
        return false;
    }

    int search(std::size_t pos, std::vector<int>& tails) {
        if (pos == occurrences_.size()) return 0;
        auto [it, fresh] = memo_[pos].try_emplace(tails, -1);
        if (!fresh) return it->second;
        int best = search(pos + 1, tails);
        Pos p = occurrences_[pos];
        for (std::size_t i = 0; i < tails.size(); ++i) {
            if (i > 0 && tails[i] == tails[i - 1]) continue;
            if (!accepts(tails[i], p)) continue;
            std::vector<int> next = tails;
            next[i] = encode(p);
            std::sort(next.begin(), next.end());
            best = std::max(best, 1 + search(pos + 1, next));
        }
        memo_[pos][tails] = best;
        return best;
    }

    ChainVariant variant_;
    std::vector<Pos> occurrences_;
    std::vector<std::map<std::vector<int>, int>> memo_;
};

} // namespace

int chain_max(const ChainMatrix& b, int k, ChainVariant variant, int oracle_bound) {
    for (int v : b.entries)
        if (v < 0) throw domain_error("invalid-matrix", "entries must be nonnegative");
    bool multiset = variant == ChainVariant::a_hg || variant == ChainVariant::a_s;
    int load = multiset ? b.total() : b.nonzero_count();
    if (load > oracle_bound)
        throw domain_error("bound-exceeded", "chain_max is bounded at " + std::to_string(oracle_bound) +
                                                 (multiset ? " total entries" : " nonzero positions"));
    return MatrixChainSearch(b, variant, k).run(k);
}

ChainMatrix submatrix_nw(const RimHookMultiset& m, int d) {
    Cell r = m.shape().border_box(d); // rejects empty diagonals
    ChainMatrix b = ChainMatrix::zero(r.row, r.col);
    for (int i = 1; i <= r.row; ++i)
        for (int j = 1; j <= r.col; ++j) b.at(i, j) = m.count(Cell{i, j});
    return b;
}

Shape chain_partition(const ChainMatrix& b, ChainVariant a_variant, ChainVariant c_variant,
                      int oracle_bound) {
    int sum = b.total();
    if (sum == 0) return Shape();

    std::vector<int> parts;
    int prev = 0;
    for (int k = 1; prev < sum; ++k) {
        int cur = chain_max(b, k, a_variant, oracle_bound);
        int part = cur - prev;
        if (part <= 0 || (!parts.empty() && part > parts.back()))
            throw std::logic_error("chain_partition: a-chain differences are not a partition");
        parts.push_back(part);
        prev = cur;
    }
    Shape mu(std::move(parts));

    std::vector<int> conj_parts;
    prev = 0;
    for (int k = 1; prev < sum; ++k) {
        int cur = chain_max(b, k, c_variant, oracle_bound);
        if (cur <= prev)
            throw std::logic_error("chain_partition: c-chain maxima stalled below the total");
        conj_parts.push_back(cur - prev);
        prev = cur;
    }
    if (Shape(std::move(conj_parts)) != mu.conjugate())
        throw std::logic_error("chain_partition: c-chain differences disagree with the conjugate");
    return mu;
}

} // namespace rimhook
