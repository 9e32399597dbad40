#include <doctest.h>

#include "rimhook/diag_engine.hpp"
#include "rimhook/enumerate.hpp"
#include "rimhook/greene_kleitman.hpp"
#include "rimhook/rsk.hpp"
#include "testutil.hpp"

using namespace rimhook;

TEST_CASE("delta on worked words") {
    CHECK(delta({1, 4, 2, 5, 2}, 1) == 3);
    CHECK(delta({1, 4, 2, 5, 2}, 2) == 5);
    CHECK(delta({}, 0) == 0);
    CHECK(delta({}, 3) == 0);
    CHECK(delta({1, 1, 6, 2, 7, 7, 7}, 1) == 6);
    CHECK(delta({1, 1, 6, 2, 7, 7, 7}, 2) == 7);
    CHECK(delta({3, 2, 1}, 1) == 1);
    CHECK(delta({3, 2, 1}, 3) == 3);
    CHECK_THROWS_AS(delta({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 1), domain_error);
    CHECK_THROWS_AS(delta({0, 1}, 1), domain_error);
}

TEST_CASE("gamma on worked words") {
    CHECK(gamma({1, 4, 2, 5, 2}, 1) == 2);
    CHECK(gamma({1, 4, 2, 5, 2}, 3) == 5);
    CHECK(gamma({}, 2) == 0);
    CHECK(gamma({1, 1, 1}, 1) == 1);
    CHECK(gamma({1, 1, 1}, 2) == 2);
    CHECK(gamma({1, 1, 1}, 3) == 3);
}

TEST_CASE("delta and gamma are monotone and concave in k") {
    std::vector<Word> words{{1, 4, 2, 5, 2}, {1, 1, 6, 2, 7, 7, 7}, {2, 2, 1, 3, 4, 3}, {}};
    for (const Word& w : words) {
        int n = static_cast<int>(w.size());
        for (auto stat : {delta, gamma}) {
            int prev = 0, prev_diff = n + 1;
            for (int k = 1; k <= n + 1; ++k) {
                int cur = stat(w, k, 12);
                CHECK(cur >= prev);
                CHECK(cur - prev <= prev_diff);
                prev_diff = cur - prev;
                prev = cur;
            }
            CHECK(prev == n);
        }
    }
}

TEST_CASE("shape_from_word") {
    CHECK(shape_from_word({1, 4, 2, 5, 2}) == Shape({3, 2}));
    CHECK(shape_from_word({}) == Shape());
    CHECK(shape_from_word({1, 1, 6, 2, 7, 7, 7}) == Shape({6, 1}));
}

TEST_CASE("chain_max on worked matrices") {
    ChainMatrix single{1, 1, {7}};
    CHECK(chain_max(single, 1, ChainVariant::a_s) == 7);
    CHECK(chain_max(single, 3, ChainVariant::a_s) == 7);
    CHECK(chain_max(single, 0, ChainVariant::a_s) == 0);

    // northwest submatrix of diagonal -1 in the worked (3,2,2) example
    ChainMatrix b{3, 2, {2, 1, 0, 0, 1, 3}};
    CHECK(chain_max(b, 1, ChainVariant::a_s) == 6);
    CHECK(chain_max(b, 2, ChainVariant::a_s) == 7);
    CHECK(chain_max(b, 1, ChainVariant::c_s) == 2);

    ChainMatrix diag{2, 2, {1, 0, 0, 1}};
    CHECK(chain_max(diag, 1, ChainVariant::a_hg) == 1);
    CHECK(chain_max(diag, 2, ChainVariant::a_hg) == 2);
    CHECK(chain_max(diag, 1, ChainVariant::c_hg) == 2);

    // a position used once per chain across several strict chains
    ChainMatrix repeated{1, 1, {2}};
    CHECK(chain_max(repeated, 1, ChainVariant::c_s) == 1);
    CHECK(chain_max(repeated, 2, ChainVariant::c_s) == 2);
    CHECK(chain_max(repeated, 3, ChainVariant::c_s) == 2);

    CHECK_THROWS_AS(chain_max(ChainMatrix{1, 1, {15}}, 1, ChainVariant::a_s), domain_error);
    CHECK_THROWS_AS(chain_max(ChainMatrix{1, 1, {-1}}, 1, ChainVariant::a_s), domain_error);
}

TEST_CASE("submatrix_nw") {
    Shape shape({3, 2, 2});
    RimHookMultiset m = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{1, 2}, 1}, {Cell{3, 1}, 1}, {Cell{3, 2}, 3}});
    CHECK(submatrix_nw(m, -1) == ChainMatrix{3, 2, {2, 1, 0, 0, 1, 3}});
    CHECK(submatrix_nw(m, 2) == ChainMatrix{1, 3, {2, 1, 0}});
    CHECK(submatrix_nw(RimHookMultiset(shape), -2) == ChainMatrix::zero(3, 1));
    CHECK_THROWS_AS(submatrix_nw(m, 3), domain_error);
}

TEST_CASE("chain partitions against word statistics on diagonal words") {
    // A_S/C_S chain maxima must match delta/gamma of the diagonal word.
    Shape shape({3, 2, 2});
    RimHookMultiset m = testutil::multiset(
        shape, {{Cell{1, 1}, 2}, {Cell{1, 2}, 1}, {Cell{3, 1}, 1}, {Cell{3, 2}, 3}});
    Word w{1, 1, 6, 2, 7, 7, 7}; // diagonal -1 word of the worked example
    ChainMatrix b = submatrix_nw(m, -1);
    for (int k = 0; k <= 3; ++k) {
        CHECK(chain_max(b, k, ChainVariant::a_s) == delta(w, k));
        CHECK(chain_max(b, k, ChainVariant::c_s) == gamma(w, k));
    }
    CHECK(chain_partition(b, ChainVariant::a_s, ChainVariant::c_s) == Shape({6, 1}));
    CHECK(chain_partition(ChainMatrix::zero(2, 2), ChainVariant::a_s, ChainVariant::c_s) ==
          Shape());
}

TEST_CASE("chain maxima equal the word statistics of every diagonal word") {
    for (const Shape& shape : {Shape({2, 2}), Shape({3, 1}), Shape({3, 2, 2})})
        for (const auto& m : enumerate_multisets(shape, 3))
            for (int d = shape.min_diagonal(); d <= shape.max_diagonal(); ++d) {
                ChainMatrix b = submatrix_nw(m, d);
                auto sulz_words = diagonal_words(m, Scheme::sulzgruber);
                auto hg_words = diagonal_words(m, Scheme::hillman_grassl);
                for (int k = 0; k <= 3; ++k) {
                    CHECK(chain_max(b, k, ChainVariant::a_s) == delta(sulz_words.at(d), k));
                    CHECK(chain_max(b, k, ChainVariant::c_s) == gamma(sulz_words.at(d), k));
                    CHECK(chain_max(b, k, ChainVariant::a_hg) == delta(hg_words.at(d), k));
                    CHECK(chain_max(b, k, ChainVariant::c_hg) == gamma(hg_words.at(d), k));
                }
            }
}

TEST_CASE("word oracle matches insertion shapes exhaustively at small scale") {
    // alphabet [1,3], length <= 5: 364 words
    std::vector<Word> words{Word{}};
    std::size_t begin = 0;
    for (int len = 1; len <= 5; ++len) {
        std::size_t end = words.size();
        for (std::size_t i = begin; i < end; ++i)
            for (int a = 1; a <= 3; ++a) {
                Word w = words[i];
                w.push_back(a);
                words.push_back(std::move(w));
            }
        begin = end;
    }
    for (const Word& w : words) CHECK(shape_from_word(w) == insert_word(w).first.shape());
}
