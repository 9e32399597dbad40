#include "rimhook/rsk.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rimhook {

Shape Tableau::shape() const {
    if (rows.empty()) return Shape();
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Shape(std::move(parts));
}

bool is_semistandard(const Tableau& t) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        if (row.empty()) return false;
        if (i > 0 && row.size() > t.rows[i - 1].size()) return false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) return false;
            if (j > 0 && row[j - 1] > row[j]) return false;
            if (i > 0 && t.rows[i - 1][j] >= row[j]) return false;
        }
    }
    return true;
}

bool is_standard(const Tableau& t) {
    if (!is_semistandard(t)) return false;
    std::set<int> seen;
    int n = 0;
    for (const auto& row : t.rows)
        for (int v : row) {
            seen.insert(v);
            ++n;
        }
    return static_cast<int>(seen.size()) == n && (n == 0 || (*seen.begin() == 1 && *seen.rbegin() == n));
}

std::pair<Tableau, BumpingPath> row_insert(const Tableau& t, int k) {
    Tableau out = t;
    BumpingPath path;
    int carry = k;
    for (std::size_t r = 0; r < out.rows.size(); ++r) {
        auto& row = out.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
            row.push_back(carry);
            path.push_back(Cell{static_cast<int>(r) + 1, static_cast<int>(row.size())});
            return {out, path};
        }
        path.push_back(Cell{static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1});
        std::swap(*it, carry);
    }
    out.rows.push_back({carry});
    path.push_back(Cell{static_cast<int>(out.rows.size()), 1});
    return {out, path};
}

std::pair<Tableau, Tableau> insert_word(const Word& w) {
    Tableau p, q;
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (w[s] < 1)
            throw domain_error("invalid-word", "letter " + std::to_string(w[s]) + " is not positive");
        auto [next, path] = row_insert(p, w[s]);
        p = std::move(next);
        Cell added = path.back();
        if (added.row > static_cast<int>(q.rows.size())) q.rows.emplace_back();
        q.rows[added.row - 1].push_back(static_cast<int>(s) + 1);
    }
    return {p, q};
}

Word reverse_insert_word(const Tableau& p, const Tableau& q) {
    if (!is_semistandard(p))
        throw domain_error("not-semistandard", "P is not a semistandard tableau");
    if (!is_standard(q)) throw domain_error("not-standard", "Q is not a standard tableau");
    if (p.shape() != q.shape()) throw domain_error("shape-mismatch", "P and Q shapes differ");

    std::map<int, Cell> where; // recording entry -> box
    for (std::size_t i = 0; i < q.rows.size(); ++i)
        for (std::size_t j = 0; j < q.rows[i].size(); ++j)
            where[q.rows[i][j]] = Cell{static_cast<int>(i) + 1, static_cast<int>(j) + 1};

    Tableau work = p;
    Word letters;
    for (auto it = where.rbegin(); it != where.rend(); ++it) {
        Cell box = it->second;
        auto& last_row = work.rows[box.row - 1];
        if (static_cast<int>(last_row.size()) != box.col)
            throw std::logic_error("reverse_insert_word: recording box is not a corner");
        int carry = last_row.back();
        last_row.pop_back();
        if (last_row.empty()) work.rows.pop_back();
        for (int r = box.row - 1; r >= 1; --r) {
            auto& row = work.rows[r - 1];
            // rightmost entry strictly below the carried value gets evicted
            auto pos = std::lower_bound(row.begin(), row.end(), carry);
            std::swap(*(pos - 1), carry);
        }
        letters.push_back(carry);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

Word reading_word(const Tableau& t) {
    Word out;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return out;
}

std::vector<Word> knuth_neighbors(const Word& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        int a = w[i], b = w[i + 1], c = w[i + 2];
        // yzx ~ yxz for x < y <= z swaps the last two letters of the window.
        if ((c < a && a <= b) || (b < a && a <= c)) {
            Word n = w;
            std::swap(n[i + 1], n[i + 2]);
            out.push_back(std::move(n));
        }
        // xzy ~ zxy for x <= y < z swaps the first two letters of the window.
        if ((a <= c && c < b) || (b <= c && c < a)) {
            Word n = w;
            std::swap(n[i], n[i + 1]);
            out.push_back(std::move(n));
        }
    }
    return out;
}

bool knuth_equivalent(const Word& u, const Word& v, int max_length) {
    if (static_cast<int>(u.size()) > max_length || static_cast<int>(v.size()) > max_length)
        throw domain_error("bound-exceeded",
                           "knuth_equivalent is bounded at length " + std::to_string(max_length));
    if (u.size() != v.size()) return false;
    // The relations permute letters, so the content must match.
    Word su = u, sv = v;
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    if (su != sv) return false;

    std::set<Word> seen{u};
    std::vector<Word> frontier{u};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& x : frontier) {
            if (x == v) return true;
            for (Word& n : knuth_neighbors(x))
                if (seen.insert(n).second) next.push_back(std::move(n));
        }
        frontier = std::move(next);
    }
    return seen.count(v) > 0;
}

Word restrict_word(const Word& w, int lo, int hi) {
    if (lo > hi) throw domain_error("invalid-interval", "lo > hi");
    Word out;
    for (int x : w)
        if (lo <= x && x <= hi) out.push_back(x);
    return out;
}

Tableau restrict_tableau(const Tableau& p, int k) {
    Tableau out;
    for (const auto& row : p.rows) {
        std::vector<int> kept;
        for (int v : row) {
            if (v > k) break; // rows weakly increase, entries <= k form a prefix
            kept.push_back(v);
        }
        if (kept.empty()) break;
        out.rows.push_back(std::move(kept));
    }
    return out;
}

} // namespace rimhook
