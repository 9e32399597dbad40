#include "rimhook/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rimhook/diag_engine.hpp"
#include "rimhook/enumerate.hpp"
#include "rimhook/genfun.hpp"
#include "rimhook/greene_kleitman.hpp"
#include "rimhook/hillman_grassl.hpp"
#include "rimhook/rsk.hpp"
#include "rimhook/sulzgruber.hpp"

namespace rimhook {

namespace {

using Check = std::function<std::optional<std::string>()>;

std::string grid_str(const Grid& g) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < g[i].size(); ++j) {
            if (j) os << ",";
            os << g[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string word_str(const Word& w) {
    std::string s;
    for (int x : w) s += std::to_string(x) + ".";
    if (!s.empty()) s.pop_back();
    return s.empty() ? "(empty)" : s;
}

std::string multiset_str(const RimHookMultiset& m) {
    std::string s = "{";
    for (const auto& [cell, count] : m.counts()) {
        if (s.size() > 1) s += ", ";
        s += to_string(cell);
        if (count > 1) s += "x" + std::to_string(count);
    }
    return s + "}";
}

// Every word over [1, alphabet] of length <= max_length, shortest first,
// lexicographic within a length.
std::vector<Word> all_words(int max_length, int alphabet) {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (int a = 1; a <= alphabet; ++a) {
                Word n = w;
                n.push_back(a);
                next.push_back(std::move(n));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

RimHookMultiset make_multiset(const Shape& shape,
                              std::initializer_list<std::pair<Cell, int>> items) {
    RimHookMultiset m(shape);
    for (const auto& [cell, count] : items) m.add(cell, count);
    return m;
}

// Runs every check (never short-circuits, so the report does not depend on
// scheduling) and reports the first failure in enumeration order.
std::pair<long long, std::optional<std::string>> run_checks(const std::vector<Check>& checks,
                                                            int jobs) {
    long long n = static_cast<long long>(checks.size());
    auto run_one = [&](long long i) -> std::optional<std::string> {
        try {
            return checks[static_cast<std::size_t>(i)]();
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };

    long long first_fail = -1;
    std::string message;
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel num_threads(jobs)
        {
            long long local_fail = -1;
            std::string local_message;
#pragma omp for schedule(dynamic, 16) nowait
            for (long long i = 0; i < n; ++i) {
                if (auto m = run_one(i)) {
                    if (local_fail < 0 || i < local_fail) {
                        local_fail = i;
                        local_message = std::move(*m);
                    }
                }
            }
#pragma omp critical
            if (local_fail >= 0 && (first_fail < 0 || local_fail < first_fail)) {
                first_fail = local_fail;
                message = local_message;
            }
        }
        if (first_fail < 0) return {n, std::nullopt};
        return {n, message};
    }
#endif
    (void)jobs;
    for (long long i = 0; i < n; ++i) {
        if (auto m = run_one(i)) {
            if (first_fail < 0) {
                first_fail = i;
                message = std::move(*m);
            }
        }
    }
    if (first_fail < 0) return {n, std::nullopt};
    return {n, message};
}

// ---------------------------------------------------------------- goldens

std::vector<Check> build_goldens() {
    std::vector<Check> checks;

    checks.push_back([]() -> std::optional<std::string> {
        auto [p, q] = insert_word({1, 4, 2, 5, 2});
        Tableau wp{{{1, 2, 2}, {4, 5}}};
        Tableau wq{{{1, 2, 4}, {3, 5}}};
        if (p != wp || q != wq) return "RSK pair of 14252 does not match";
        return std::nullopt;
    });

    checks.push_back([]() -> std::optional<std::string> {
        if (!knuth_equivalent({2, 2, 1, 3, 4, 3}, {2, 4, 1, 2, 3, 3}))
            return "221343 and 241233 are not Knuth equivalent";
        Tableau t{{{1, 1, 2, 2, 4}, {2, 3, 4}, {4, 5, 5}, {6}}};
        if (reading_word(t) != Word{6, 4, 5, 5, 2, 3, 4, 1, 1, 2, 2, 4})
            return "reading word is not 645523411224";
        return std::nullopt;
    });

    checks.push_back([]() -> std::optional<std::string> {
        Shape shape({3, 3, 2});
        ReversePlanePartition pi(shape, {{0, 0, 1}, {1, 2, 2}, {3, 4}});
        std::vector<PeelStep> trace;
        RimHookMultiset m = hg_decompose(pi, &trace);
        RimHookMultiset want = make_multiset(
            shape, {{Cell{3, 1}, 2}, {Cell{2, 1}, 1}, {Cell{3, 2}, 1}, {Cell{1, 2}, 1}});
        if (m != want) return "peel multiset of the 332 filling is wrong: " + multiset_str(m);
        std::vector<Cell> want_hooks{{3, 1}, {3, 1}, {2, 1}, {3, 2}, {1, 2}};
        std::vector<std::vector<Cell>> want_paths{
            {{3, 1}, {3, 2}},
            {{3, 1}, {3, 2}},
            {{3, 1}, {2, 1}, {2, 2}, {2, 3}},
            {{3, 2}},
            {{3, 2}, {2, 2}, {2, 3}, {1, 3}}};
        if (trace.size() != want_hooks.size()) return "peel count is wrong";
        for (std::size_t s = 0; s < trace.size(); ++s)
            if (trace[s].hook.defining_cell != want_hooks[s] || trace[s].path != want_paths[s])
                return "peel step " + std::to_string(s + 1) + " is wrong";
        return std::nullopt;
    });

    checks.push_back([]() -> std::optional<std::string> {
        Shape shape({3, 3, 2, 1});
        ReversePlanePartition pi(shape, {{0, 0, 1}, {0, 2, 2}, {3, 3}, {3}});
        InsertResult ok = sulz_insert(pi, rim_hook(shape, Cell{1, 2}));
        auto* result = std::get_if<ReversePlanePartition>(&ok);
        if (!result || result->rows() != Grid{{1, 1, 2}, {1, 2, 2}, {3, 3}, {3}})
            return "inserting the (1,2) hook gave the wrong filling";
        InsertResult fail = sulz_insert(pi, rim_hook(shape, Cell{1, 1}));
        if (!std::holds_alternative<InsertFailure>(fail) ||
            std::get<InsertFailure>(fail) != InsertFailure::shifted_off_shape)
            return "inserting the (1,1) hook should fail off the shape";
        return std::nullopt;
    });

    checks.push_back([]() -> std::optional<std::string> {
        Shape shape({3, 3, 3});
        ReversePlanePartition pi(shape, {{0, 1, 2}, {1, 1, 3}, {4, 4, 4}});
        auto first = sulz_reverse(pi);
        if (!first) return "reverse insertion found nothing";
        const ReverseStep& step = first->first;
        if (step.candidate != Cell{2, 1} ||
            step.path != std::vector<Cell>{{2, 1}, {2, 2}, {1, 2}, {1, 3}} ||
            step.hook.defining_cell != Cell{1, 2})
            return "first reverse step is wrong";
        if (first->second.rows() != Grid{{0, 0, 1}, {0, 0, 3}, {4, 4, 4}})
            return "first reverse remainder is wrong";
        RimHookMultiset want = make_multiset(
            shape, {{Cell{1, 1}, 1}, {Cell{2, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}});
        RimHookMultiset m = sulz_decompose(pi);
        if (m != want) return "decomposition is wrong: " + multiset_str(m);
        return std::nullopt;
    });

    checks.push_back([]() -> std::optional<std::string> {
        Shape shape({3, 2, 2});
        RimHookMultiset m = make_multiset(
            shape, {{Cell{1, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}, {Cell{3, 2}, 3}});
        if (multiset_word(m, Scheme::sulzgruber) != Word{1, 1, 6, 2, 7, 7, 7})
            return "multiset word is not 1162777";
        Grid want{{0, 3, 3}, {1, 3}, {3, 6}};
        if (diag_rsk(m, Scheme::sulzgruber).rows() != want)
            return "diagonal RSK of 1162777 is wrong";
        if (sulz_build(m).rows() != want) return "insertion build of 1162777 is wrong";
        return std::nullopt;
    });

    return checks;
}

// ----------------------------------------------------------------- genfun

std::vector<Check> build_genfun(const std::vector<Shape>& shapes, int degree) {
    std::vector<Check> checks;
    for (const Shape& shape : shapes)
        checks.push_back([shape, degree]() -> std::optional<std::string> {
            auto coeffs = genfun_coeffs(shape, degree);
            std::vector<std::uint64_t> counts(static_cast<std::size_t>(degree) + 1, 0);
            for (const auto& pi : enumerate_rpps(shape, RppBound::sum(degree)))
                ++counts[static_cast<std::size_t>(pi.total())];
            for (int n = 0; n <= degree; ++n) {
                if (!coeffs[static_cast<std::size_t>(n)].fits_u64() ||
                    coeffs[static_cast<std::size_t>(n)].to_u64() != counts[static_cast<std::size_t>(n)])
                    return "shape " + to_string(shape) + ": coefficient of q^" +
                           std::to_string(n) + " is " + coeffs[static_cast<std::size_t>(n)].str() +
                           " but " + std::to_string(counts[static_cast<std::size_t>(n)]) +
                           " fillings have that sum";
            }
            return std::nullopt;
        });
    return checks;
}

// ---------------------------------------------------- bijection round trips

std::vector<Check> build_sulz_bijection(const std::vector<Shape>& shapes, int max_total,
                                        int max_entry) {
    std::vector<Check> checks;
    for (const Shape& shape : shapes) {
        for (const auto& m : enumerate_multisets(shape, max_total))
            checks.push_back([m]() -> std::optional<std::string> {
                ReversePlanePartition pi = sulz_build(m);
                std::vector<ReverseStep> trace;
                RimHookMultiset back = sulz_decompose(pi, &trace);
                if (back != m)
                    return "shape " + to_string(m.shape()) + " multiset " + multiset_str(m) +
                           ": decompose(build) gave " + multiset_str(back);
                Numbering numbering(m.shape(), Scheme::sulzgruber);
                int last = m.shape().size() + 1;
                for (const ReverseStep& step : trace) {
                    int ord = numbering.order(step.hook.defining_cell);
                    if (ord > last)
                        return "shape " + to_string(m.shape()) + " multiset " + multiset_str(m) +
                               ": hooks extracted out of insertion order";
                    last = ord;
                }
                return std::nullopt;
            });
        for (const auto& pi : enumerate_rpps(shape, RppBound::max_entry(max_entry)))
            checks.push_back([pi]() -> std::optional<std::string> {
                ReversePlanePartition back = sulz_build(sulz_decompose(pi));
                if (back != pi)
                    return "shape " + to_string(pi.shape()) + " filling " + grid_str(pi.rows()) +
                           ": build(decompose) gave " + grid_str(back.rows());
                return std::nullopt;
            });
    }
    return checks;
}

std::vector<Check> build_equivalence(const std::vector<Shape>& shapes, int max_total) {
    std::vector<Check> checks;
    for (const Shape& shape : shapes)
        for (const auto& m : enumerate_multisets(shape, max_total))
            checks.push_back([m]() -> std::optional<std::string> {
                ReversePlanePartition cubes = sulz_build(m);
                ReversePlanePartition rsk = diag_rsk(m, Scheme::sulzgruber);
                if (cubes != rsk)
                    return "shape " + to_string(m.shape()) + " multiset " + multiset_str(m) +
                           ": insertion gave " + grid_str(cubes.rows()) + ", diagonal RSK gave " +
                           grid_str(rsk.rows());
                return std::nullopt;
            });
    return checks;
}

std::vector<Check> build_hg_bijection(const std::vector<Shape>& shapes, int max_total,
                                      int max_entry) {
    std::vector<Check> checks;
    for (const Shape& shape : shapes) {
        for (const auto& m : enumerate_multisets(shape, max_total))
            checks.push_back([m]() -> std::optional<std::string> {
                RimHookMultiset back = hg_decompose(hg_build(m));
                if (back != m)
                    return "shape " + to_string(m.shape()) + " multiset " + multiset_str(m) +
                           ": decompose(build) gave " + multiset_str(back);
                return std::nullopt;
            });
        for (const auto& pi : enumerate_rpps(shape, RppBound::max_entry(max_entry)))
            checks.push_back([pi]() -> std::optional<std::string> {
                std::vector<PeelStep> trace;
                RimHookMultiset m = hg_decompose(pi, &trace);
                if (static_cast<int>(trace.size()) != m.total())
                    return "peel count differs from multiset size on " + grid_str(pi.rows());
                ReversePlanePartition back = hg_build(m);
                if (back != pi)
                    return "shape " + to_string(pi.shape()) + " filling " + grid_str(pi.rows()) +
                           ": build(decompose) gave " + grid_str(back.rows());
                return std::nullopt;
            });
    }
    return checks;
}

std::vector<Check> build_hg_vs_sulz(const std::vector<Shape>& shapes, int max_entry,
                                    std::shared_ptr<std::string> remark_witness,
                                    std::shared_ptr<std::string> scan_witness) {
    std::vector<Check> checks;

    bool has22 = std::any_of(shapes.begin(), shapes.end(),
                             [](const Shape& s) { return s.parts() == std::vector<int>{2, 2}; });
    if (has22)
        checks.push_back([remark_witness]() -> std::optional<std::string> {
            Shape shape({2, 2});
            ReversePlanePartition ones(shape, {{1, 1}, {1, 1}});
            RimHookMultiset hg = hg_decompose(ones);
            RimHookMultiset sulz = sulz_decompose(ones);
            if (hg != make_multiset(shape, {{Cell{1, 1}, 1}, {Cell{2, 2}, 1}}))
                return "HG decomposition of the all-ones 2x2 filling is " + multiset_str(hg);
            if (sulz != make_multiset(shape, {{Cell{2, 1}, 1}, {Cell{1, 2}, 1}}))
                return "Sulzgruber decomposition of the all-ones 2x2 filling is " +
                       multiset_str(sulz);
            *remark_witness = grid_str(ones.rows());
            return std::nullopt;
        });

    checks.push_back([shapes, max_entry, scan_witness]() -> std::optional<std::string> {
        for (const Shape& shape : shapes)
            for (const auto& pi : enumerate_rpps(shape, RppBound::max_entry(max_entry)))
                if (hg_decompose(pi) != sulz_decompose(pi)) {
                    *scan_witness = grid_str(pi.rows());
                    return std::nullopt;
                }
        return std::string("the two correspondences agree on every enumerated filling");
    });

    return checks;
}

// -------------------------------------------------------- Greene--Kleitman

std::vector<Check> build_gk_words(int max_length, int alphabet) {
    std::vector<Check> checks;
    for (Word& w : all_words(max_length, alphabet))
        checks.push_back([w = std::move(w)]() -> std::optional<std::string> {
            Shape oracle = shape_from_word(w);
            Shape via_rsk = insert_word(w).first.shape();
            if (oracle != via_rsk)
                return "word " + word_str(w) + ": chain oracle says " + to_string(oracle) +
                       ", insertion tableau has shape " + to_string(via_rsk);
            return std::nullopt;
        });
    return checks;
}

std::vector<Check> build_gk_profiles(const std::vector<Shape>& shapes, int max_total) {
    std::vector<Check> checks;
    for (const Shape& shape : shapes)
        for (const auto& m : enumerate_multisets(shape, max_total))
            checks.push_back([m]() -> std::optional<std::string> {
                ReversePlanePartition sulz = sulz_build(m);
                for (const auto& [d, mu] : gk_profile(m))
                    if (mu != diagonal_reading(sulz, d))
                        return "multiset " + multiset_str(m) + " on " + to_string(m.shape()) +
                               ": Sulzgruber chain profile differs on diagonal " +
                               std::to_string(d);
                ReversePlanePartition hg = hg_build(m);
                for (const auto& [d, mu] : hg_gk_profile(m))
                    if (mu != diagonal_reading(hg, d))
                        return "multiset " + multiset_str(m) + " on " + to_string(m.shape()) +
                               ": HG chain profile differs on diagonal " + std::to_string(d);
                return std::nullopt;
            });
    return checks;
}

// ----------------------------------------------------- Knuth / RSK lemmas

std::string tableau_key(const Tableau& t) {
    std::string key;
    for (const auto& row : t.rows) {
        for (int v : row) key += std::to_string(v) + ",";
        key += ";";
    }
    return key;
}

std::optional<std::string> knuth_classes_match_insertion(int max_length, int alphabet) {
    std::vector<Word> words = all_words(max_length, alphabet);
    std::map<Word, int> class_of;
    int next_class = 0;
    for (const Word& w : words) {
        if (class_of.count(w)) continue;
        int id = next_class++;
        std::vector<Word> frontier{w};
        class_of[w] = id;
        while (!frontier.empty()) {
            std::vector<Word> next;
            for (const Word& x : frontier)
                for (Word& n : knuth_neighbors(x))
                    if (class_of.emplace(n, id).second) next.push_back(std::move(n));
            frontier = std::move(next);
        }
    }

    std::map<std::string, int> class_by_tableau;
    std::map<int, std::string> tableau_by_class;
    for (const Word& w : words) {
        std::string p = tableau_key(insert_word(w).first);
        int cls = class_of.at(w);
        auto [it, fresh] = class_by_tableau.try_emplace(p, cls);
        if (!fresh && it->second != cls)
            return "words with equal insertion tableaux are not Knuth equivalent (word " +
                   word_str(w) + ")";
        auto [jt, fresh2] = tableau_by_class.try_emplace(cls, p);
        if (!fresh2 && jt->second != p)
            return "Knuth-equivalent words with different insertion tableaux (word " +
                   word_str(w) + ")";
    }
    return std::nullopt;
}

std::optional<std::string> check_restriction(const Word& w, int alphabet) {
    Tableau p = insert_word(w).first;
    for (int k = 0; k <= alphabet; ++k) {
        Tableau restricted = insert_word(k == 0 ? Word{} : restrict_word(w, 1, k)).first;
        if (restricted != restrict_tableau(p, k))
            return "word " + word_str(w) + ": restriction to [1," + std::to_string(k) +
                   "] does not commute with insertion";
    }
    return std::nullopt;
}

std::optional<std::string> check_bumping_paths(const Word& w, int alphabet) {
    Tableau t = insert_word(w).first;
    for (int i = 1; i <= alphabet; ++i) {
        auto [after_i, path_i] = row_insert(t, i);
        for (std::size_t s = 0; s < path_i.size(); ++s) {
            if (path_i[s].row != static_cast<int>(s) + 1)
                return "word " + word_str(w) + ": bumping path of " + std::to_string(i) +
                       " skips a row";
            if (s > 0 && path_i[s].col > path_i[s - 1].col)
                return "word " + word_str(w) + ": bumping path of " + std::to_string(i) +
                       " moves right";
        }
        for (int j = i; j <= alphabet; ++j) {
            auto path_j = row_insert(after_i, j).second;
            for (std::size_t r = 0; r < std::min(path_i.size(), path_j.size()); ++r)
                if (path_i[r].col >= path_j[r].col)
                    return "word " + word_str(w) + ": path of " + std::to_string(i) +
                           " is not strictly left of the path of " + std::to_string(j) +
                           " in row " + std::to_string(r + 1);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_horizontal_strip(const Word& w) {
    std::set<int> letters(w.begin(), w.end());
    Tableau p = insert_word(w).first;
    for (int a : letters) {
        Word tail;
        for (int x : w)
            if (x >= a) tail.push_back(x);
        if (!std::is_sorted(tail.begin(), tail.end())) continue;
        std::set<int> used_columns;
        for (std::size_t i = 0; i < p.rows.size(); ++i)
            for (std::size_t j = 0; j < p.rows[i].size(); ++j)
                if (p.rows[i][j] >= a && !used_columns.insert(static_cast<int>(j)).second)
                    return "word " + word_str(w) + ": letters >= " + std::to_string(a) +
                           " do not form a horizontal strip";
    }
    return std::nullopt;
}

std::vector<Check> build_knuth_rsk(int max_length, int alphabet) {
    std::vector<Check> checks;
    checks.push_back([max_length, alphabet] { return knuth_classes_match_insertion(max_length, alphabet); });
    for (Word& w : all_words(max_length, alphabet))
        checks.push_back([w = std::move(w), alphabet]() -> std::optional<std::string> {
            if (auto fail = check_restriction(w, alphabet)) return fail;
            if (auto fail = check_bumping_paths(w, alphabet)) return fail;
            if (auto fail = check_horizontal_strip(w)) return fail;
            // r(P(w)) is Knuth equivalent to w
            Tableau p = insert_word(w).first;
            if (insert_word(reading_word(p)).first != p)
                return "word " + word_str(w) + ": reading word of P(w) has a different tableau";
            return std::nullopt;
        });
    return checks;
}

// -------------------------------------------------- prefix/subword lemmas

std::optional<std::string> check_prefix_subword(const RimHookMultiset& m) {
    const Shape& shape = m.shape();
    Numbering numbering(shape, Scheme::sulzgruber);
    auto words = diagonal_words(m, numbering);
    for (int d = shape.min_diagonal(); d < shape.max_diagonal(); ++d) {
        Cell rd = shape.border_box(d);
        Cell rd1 = shape.border_box(d + 1);
        const Word& wd = words.at(d);
        const Word& wd1 = words.at(d + 1);
        if (rd1 == Cell{rd.row, rd.col + 1}) {
            // border box directly right: the lower word is a prefix
            if (wd.size() > wd1.size() || !std::equal(wd.begin(), wd.end(), wd1.begin()))
                return "multiset " + multiset_str(m) + " on " + to_string(shape) + ": word " +
                       word_str(wd) + " of diagonal " + std::to_string(d) +
                       " is not a prefix of " + word_str(wd1);
        } else if (rd == Cell{rd1.row + 1, rd1.col}) {
            // border box directly above: restriction to a label interval
            std::set<int> upper_labels;
            int max_upper = 0;
            for (int i = 1; i <= rd1.row; ++i)
                for (int j = 1; j <= rd1.col; ++j) {
                    int label = numbering.label(Cell{i, j});
                    upper_labels.insert(label);
                    max_upper = std::max(max_upper, label);
                }
            Word filtered;
            for (int x : wd)
                if (upper_labels.count(x)) filtered.push_back(x);
            if (filtered != wd1)
                return "multiset " + multiset_str(m) + " on " + to_string(shape) +
                       ": diagonal " + std::to_string(d + 1) + " word is not the restriction of " +
                       word_str(wd);
            // hooks meeting d but not d+1 all carry strictly larger labels
            for (int i = 1; i <= rd.row; ++i)
                for (int j = 1; j <= rd.col; ++j) {
                    int label = numbering.label(Cell{i, j});
                    if (!upper_labels.count(label) && label < max_upper)
                        return "shape " + to_string(shape) + ": label " + std::to_string(label) +
                               " breaks the interval property between diagonals " +
                               std::to_string(d) + " and " + std::to_string(d + 1);
                }
        } else {
            return "shape " + to_string(shape) + ": border boxes of diagonals " +
                   std::to_string(d) + " and " + std::to_string(d + 1) + " are not adjacent";
        }
    }
    return std::nullopt;
}

std::vector<Check> build_prefix_subword(const std::vector<Shape>& shapes, int max_total) {
    std::vector<Check> checks;
    for (const Shape& shape : shapes)
        for (const auto& m : enumerate_multisets(shape, max_total))
            checks.push_back([m] { return check_prefix_subword(m); });
    return checks;
}

} // namespace

std::vector<Shape> default_shape_set() {
    return {Shape({1}),       Shape({2, 2}),    Shape({3, 1}),    Shape({3, 2, 2}),
            Shape({3, 3, 2}), Shape({4, 2, 1}), Shape({3, 3, 3})};
}

std::vector<std::string> suite_names() {
    return {"goldens",      "genfun",   "sulz-bijection", "equivalence",
            "hg-bijection", "hg-vs-sulz-differ", "gk-words", "gk-profiles",
            "knuth-rsk",    "prefix-subword"};
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
    std::vector<Shape> shapes = options.shapes.empty() ? default_shape_set() : options.shapes;
    for (const Shape& s : shapes) require_nonempty(s, "verify");
    auto limit = options.limit;

    VerifyReport report;
    report.suite = suite;
    // Written by at most one check each, so the merged report stays
    // deterministic under parallel runs. The remark witness wins.
    auto remark_witness = std::make_shared<std::string>();
    auto scan_witness = std::make_shared<std::string>();

    std::vector<Check> checks;
    if (suite == "goldens") {
        checks = build_goldens();
    } else if (suite == "genfun") {
        checks = build_genfun(shapes, limit.value_or(8));
    } else if (suite == "sulz-bijection") {
        checks = build_sulz_bijection(shapes, limit.value_or(4), 3);
    } else if (suite == "equivalence") {
        checks = build_equivalence(shapes, limit.value_or(4));
    } else if (suite == "hg-bijection") {
        checks = build_hg_bijection(shapes, limit.value_or(4), 3);
    } else if (suite == "hg-vs-sulz-differ") {
        checks = build_hg_vs_sulz(shapes, limit.value_or(3), remark_witness, scan_witness);
    } else if (suite == "gk-words") {
        checks = build_gk_words(limit.value_or(7), 4);
    } else if (suite == "gk-profiles") {
        checks = build_gk_profiles(shapes, limit.value_or(4));
    } else if (suite == "knuth-rsk") {
        checks = build_knuth_rsk(limit.value_or(6), 4);
    } else if (suite == "prefix-subword") {
        checks = build_prefix_subword(shapes, limit.value_or(4));
    } else {
        throw domain_error("unknown-suite", "no verification suite named '" + suite + "'");
    }

    auto [checked, failure] = run_checks(checks, options.jobs);
    report.checked = checked;
    report.pass = !failure.has_value();
    report.counterexample = std::move(failure);
    if (report.pass) {
        if (!remark_witness->empty())
            report.witness = *remark_witness;
        else if (!scan_witness->empty())
            report.witness = *scan_witness;
    }
    return report;
}

} // namespace rimhook
