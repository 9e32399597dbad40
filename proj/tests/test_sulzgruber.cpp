#include <doctest.h>

#include "rimhook/enumerate.hpp"
#include "rimhook/sulzgruber.hpp"
#include "testutil.hpp"

using namespace rimhook;

TEST_CASE("sulz_insert worked examples") {
    Shape shape({3, 3, 2, 1});
    ReversePlanePartition pi(shape, {{0, 0, 1}, {0, 2, 2}, {3, 3}, {3}});

    InsertionTrace trace;
    InsertResult ok = sulz_insert(pi, rim_hook(shape, Cell{1, 2}), &trace);
    REQUIRE(std::holds_alternative<ReversePlanePartition>(ok));
    CHECK(std::get<ReversePlanePartition>(ok).rows() == Grid{{1, 1, 2}, {1, 2, 2}, {3, 3}, {3}});
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].min_height == 1);
    CHECK(trace[0].broken_off == std::vector<Cell>{{1, 3}});
    CHECK(trace[0].shifted);
    CHECK(trace[1].strip == std::vector<Cell>{{2, 1}, {1, 1}, {1, 2}});
    CHECK(trace[1].min_height == 0);
    CHECK(!trace[1].shifted);

    InsertResult fail = sulz_insert(pi, rim_hook(shape, Cell{1, 1}));
    REQUIRE(std::holds_alternative<InsertFailure>(fail));
    CHECK(std::get<InsertFailure>(fail) == InsertFailure::shifted_off_shape);

    Shape square({2, 2});
    InsertResult flat = sulz_insert(ReversePlanePartition::zero(square),
                                    rim_hook(square, Cell{2, 2}));
    REQUIRE(std::holds_alternative<ReversePlanePartition>(flat));
    CHECK(std::get<ReversePlanePartition>(flat).rows() == Grid{{0, 0}, {0, 1}});

    CHECK_THROWS_AS(sulz_insert(pi, rim_hook(square, Cell{1, 1})), domain_error);
}

TEST_CASE("sulz_build worked examples") {
    Shape square3({3, 3, 3});
    RimHookMultiset m = testutil::multiset(
        square3, {{Cell{1, 1}, 1}, {Cell{2, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}});
    CHECK(sulz_build(m).rows() == Grid{{0, 1, 2}, {1, 1, 3}, {4, 4, 4}});

    Shape shape({3, 2, 2});
    CHECK(sulz_build(RimHookMultiset(shape)) == ReversePlanePartition::zero(shape));

    RimHookMultiset example = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}, {Cell{3, 2}, 3}});
    CHECK(sulz_build(example) == diag_rsk(example, Scheme::sulzgruber));
}

TEST_CASE("sulz_reverse worked examples") {
    Shape square3({3, 3, 3});
    ReversePlanePartition pi(square3, {{0, 1, 2}, {1, 1, 3}, {4, 4, 4}});
    auto step = sulz_reverse(pi);
    REQUIRE(step.has_value());
    CHECK(step->first.candidate == Cell{2, 1});
    CHECK(step->first.path == std::vector<Cell>{{2, 1}, {2, 2}, {1, 2}, {1, 3}});
    CHECK(step->first.hook.defining_cell == Cell{1, 2});
    CHECK(step->second.rows() == Grid{{0, 0, 1}, {0, 0, 3}, {4, 4, 4}});

    CHECK(!sulz_reverse(ReversePlanePartition::zero(square3)).has_value());

    Shape square({2, 2});
    ReversePlanePartition ones(square, {{1, 1}, {1, 1}});
    auto last = sulz_reverse(ones);
    REQUIRE(last.has_value());
    CHECK(last->first.hook.defining_cell == Cell{1, 2});
    CHECK(last->second ==
          sulz_build(testutil::multiset(square, {{Cell{2, 1}, 1}})));
    CHECK(last->second.rows() == Grid{{0, 0}, {1, 1}});
}

TEST_CASE("sulz_decompose worked examples") {
    Shape square3({3, 3, 3});
    ReversePlanePartition pi(square3, {{0, 1, 2}, {1, 1, 3}, {4, 4, 4}});
    std::vector<ReverseStep> trace;
    CHECK(sulz_decompose(pi, &trace) ==
          testutil::multiset(square3, {{Cell{1, 1}, 1},
                                       {Cell{2, 1}, 2},
                                       {Cell{3, 1}, 1},
                                       {Cell{1, 2}, 1}}));
    // hooks come out weakly decreasing in insertion order
    Numbering numbering(square3, Scheme::sulzgruber);
    for (std::size_t s = 1; s < trace.size(); ++s)
        CHECK(numbering.order(trace[s].hook.defining_cell) <=
              numbering.order(trace[s - 1].hook.defining_cell));

    CHECK(sulz_decompose(ReversePlanePartition::zero(square3)).empty());

    Shape square({2, 2});
    CHECK(sulz_decompose(ReversePlanePartition(square, {{1, 1}, {1, 1}})) ==
          testutil::multiset(square, {{Cell{2, 1}, 1}, {Cell{1, 2}, 1}}));
}

TEST_CASE("gk_profile worked examples") {
    Shape shape({3, 2, 2});
    RimHookMultiset example = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{3, 1}, 1}, {Cell{1, 2}, 1}, {Cell{3, 2}, 3}});
    auto profile = gk_profile(example);
    CHECK(profile.at(-1) == Shape({6, 1}));
    CHECK(profile.at(0) == Shape({3}));
    CHECK(profile.at(-2) == Shape({3}));

    for (const auto& [d, mu] : gk_profile(RimHookMultiset(shape))) CHECK(mu == Shape());
}

TEST_CASE("insertion-order builds never fail") {
    for (const Shape& shape : {Shape({3, 2, 2}), Shape({2, 2}), Shape({4, 2, 1})})
        for (const auto& m : enumerate_multisets(shape, 3)) CHECK_NOTHROW(sulz_build(m));
}

TEST_CASE("out-of-order insertion can fail without faulting") {
    // inserting the long hook after the single-box hook runs off the shape
    Shape square({2, 2});
    ReversePlanePartition one = std::get<ReversePlanePartition>(
        sulz_insert(ReversePlanePartition::zero(square), rim_hook(square, Cell{2, 2})));
    InsertResult result = sulz_insert(one, rim_hook(square, Cell{1, 1}));
    REQUIRE(std::holds_alternative<InsertFailure>(result));

    // minimal height attained only in the interior of the strip
    ReversePlanePartition interior(square, {{0, 1}, {0, 1}});
    InsertResult stuck = sulz_insert(interior, rim_hook(square, Cell{1, 1}));
    REQUIRE(std::holds_alternative<InsertFailure>(stuck));
    CHECK(std::get<InsertFailure>(stuck) == InsertFailure::no_terminal_run);

    // every step stays inside the shape but the finished filling is invalid
    InsertResult broken = sulz_insert(one, rim_hook(square, Cell{1, 2}));
    REQUIRE(std::holds_alternative<InsertFailure>(broken));
    CHECK(std::get<InsertFailure>(broken) == InsertFailure::invalid_result);
}
