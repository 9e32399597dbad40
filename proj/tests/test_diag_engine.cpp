#include <doctest.h>

#include "rimhook/diag_engine.hpp"
#include "testutil.hpp"

using namespace rimhook;

TEST_CASE("sulzgruber numbering") {
    // the worked (5,4,4,3,2) insertion-order table
    Numbering n(Shape({5, 4, 4, 3, 2}), Scheme::sulzgruber);
    Grid order{{1, 6, 11, 15, 18}, {2, 7, 12, 16}, {3, 8, 13, 17}, {4, 9, 14}, {5, 10}};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order[i].size(); ++j) {
            Cell c{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
            CHECK(n.order(c) == order[i][j]);
            CHECK(n.cell_at_order(order[i][j]) == c);
        }

    Numbering small(Shape({3, 2, 2}), Scheme::sulzgruber);
    CHECK(small.label(Cell{1, 1}) == 1);
    CHECK(small.label(Cell{3, 2}) == 7);
    CHECK(small.cell_with_label(6) == Cell{3, 1});
    CHECK_THROWS_AS(small.label(Cell{1, 4}), domain_error);
    CHECK_THROWS_AS(small.cell_with_label(8), domain_error);
}

TEST_CASE("hillman-grassl numbering") {
    // the worked (3,3,2) order/label tables
    Numbering n(Shape({3, 3, 2}), Scheme::hillman_grassl);
    Grid order{{6, 3, 1}, {7, 4, 2}, {8, 5}};
    Grid label{{3, 2, 1}, {6, 5, 4}, {8, 7}};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order[i].size(); ++j) {
            Cell c{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
            CHECK(n.order(c) == order[i][j]);
            CHECK(n.label(c) == label[i][j]);
        }
}

TEST_CASE("numberings are bijections") {
    for (int n = 1; n <= 9; ++n)
        for (const Shape& s : testutil::partitions_of(n))
            for (Scheme scheme : {Scheme::sulzgruber, Scheme::hillman_grassl}) {
                Numbering numbering(s, scheme);
                std::vector<bool> order_seen(static_cast<std::size_t>(s.size()) + 1, false);
                std::vector<bool> label_seen(static_cast<std::size_t>(s.size()) + 1, false);
                for (Cell c : s.cells_row_major()) {
                    order_seen[static_cast<std::size_t>(numbering.order(c))] = true;
                    label_seen[static_cast<std::size_t>(numbering.label(c))] = true;
                    CHECK(numbering.cell_at_order(numbering.order(c)) == c);
                    CHECK(numbering.cell_with_label(numbering.label(c)) == c);
                }
                for (int t = 1; t <= s.size(); ++t) {
                    CHECK(order_seen[static_cast<std::size_t>(t)]);
                    CHECK(label_seen[static_cast<std::size_t>(t)]);
                }
            }
}

TEST_CASE("multiset words") {
    Shape shape({3, 2, 2});
    RimHookMultiset example = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}, {Cell{3, 2}, 3}});
    CHECK(multiset_word(example, Scheme::sulzgruber) == Word{1, 1, 6, 2, 7, 7, 7});

    RimHookMultiset one_each(shape);
    for (Cell c : shape.cells_row_major()) one_each.add(c);
    CHECK(multiset_word(one_each, Scheme::sulzgruber) == Word{1, 4, 6, 2, 5, 7, 3});

    CHECK(multiset_word(RimHookMultiset(shape), Scheme::sulzgruber).empty());
}

TEST_CASE("diagonal words") {
    Shape shape({3, 2, 2});
    RimHookMultiset example = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}, {Cell{3, 2}, 3}});
    auto words = diagonal_words(example, Scheme::sulzgruber);
    CHECK(words.at(-2) == Word{1, 1, 6});
    CHECK(words.at(-1) == Word{1, 1, 6, 2, 7, 7, 7});
    CHECK(words.at(0) == Word{1, 1, 2});
    CHECK(words.at(1) == Word{1, 1, 2});
    CHECK(words.at(2) == Word{1, 1, 2});

    RimHookMultiset one_each(shape);
    for (Cell c : shape.cells_row_major()) one_each.add(c);
    auto each = diagonal_words(one_each, Scheme::sulzgruber);
    CHECK(each.at(-2) == Word{1, 4, 6});
    CHECK(each.at(-1) == Word{1, 4, 6, 2, 5, 7});
    CHECK(each.at(0) == Word{1, 4, 2, 5});

    for (const auto& [d, w] : diagonal_words(RimHookMultiset(shape), Scheme::sulzgruber))
        CHECK(w.empty());
}

TEST_CASE("assemble_rpp") {
    Shape shape({3, 2, 2});
    std::map<int, Shape> per_diag{{-2, Shape({3})},
                                  {-1, Shape({6, 1})},
                                  {0, Shape({3})},
                                  {1, Shape({3})},
                                  {2, Shape({3})}};
    CHECK(assemble_rpp(shape, per_diag).rows() == Grid{{0, 3, 3}, {1, 3}, {3, 6}});

    CHECK(assemble_rpp(shape, {}).rows() == Grid{{0, 0, 0}, {0, 0}, {0, 0}});

    std::map<int, Shape> square{{0, Shape({1, 1})}, {-1, Shape({1})}, {1, Shape({1})}};
    CHECK(assemble_rpp(Shape({2, 2}), square).rows() == Grid{{1, 1}, {1, 1}});

    CHECK_THROWS_AS(assemble_rpp(Shape({2, 2}), {{1, Shape({1, 1})}}), domain_error);
}

TEST_CASE("diag_rsk worked examples") {
    Shape shape({3, 2, 2});
    RimHookMultiset example = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}, {Cell{3, 2}, 3}});
    CHECK(diag_rsk(example, Scheme::sulzgruber).rows() == Grid{{0, 3, 3}, {1, 3}, {3, 6}});

    Shape square({2, 2});
    CHECK(diag_rsk(testutil::multiset(square, {{Cell{1, 1}, 1}, {Cell{2, 2}, 1}}),
                   Scheme::hillman_grassl)
              .rows() == Grid{{1, 1}, {1, 1}});
    CHECK(diag_rsk(testutil::multiset(square, {{Cell{2, 1}, 1}, {Cell{1, 2}, 1}}),
                   Scheme::sulzgruber)
              .rows() == Grid{{1, 1}, {1, 1}});
}
