#include <doctest.h>

#include "qchroma/hits.hpp"
#include "qchroma/report.hpp"

using namespace qchroma;

TEST_CASE("hit vectors, both routes") {
    BoardShape s({2, 1}, Board{2, 3});
    auto H = hit_numbers_basis(s);
    REQUIRE(H.size() == 3);
    CHECK(H[0].str() == "1");
    CHECK(H[1].str() == "2q+2q^2");
    CHECK(H[2].str() == "q^3");
    CHECK(hit_numbers_stat(s) == H);

    // Empty shape: every full placement misses, H_0 collects all of them.
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= m; ++n) {
            auto He = hit_numbers_basis(BoardShape::empty(Board{n, m}));
            REQUIRE(He.size() == static_cast<size_t>(n) + 1);
            CHECK(He[0] == q_falling(m, n));
            for (size_t j = 1; j < He.size(); ++j) CHECK(He[j].is_zero());
        }

    // More rows than columns: no full placement exists.
    auto Hz = hit_numbers_basis(BoardShape({1, 1}, Board{2, 1}));
    REQUIRE(Hz.size() == 3);
    for (const QLaurent& h : Hz) CHECK(h.is_zero());
    CHECK(hit_numbers_stat(BoardShape({1, 1}, Board{2, 1})) == Hz);
}

TEST_CASE("per-placement statistic") {
    BoardShape s({2, 1}, Board{2, 3});
    CHECK(stat_statistic(s, {3, 2}) == 0);
    CHECK(stat_statistic(s, {1, 2}) == 1);
    CHECK(stat_statistic(s, {2, 1}) == 3);
    CHECK_THROWS_AS(stat_statistic(s, {1}), PreconditionViolation);
    CHECK_THROWS_AS(stat_statistic(s, {2, 2}), PreconditionViolation);
    CHECK_THROWS_AS(stat_statistic(s, {4, 1}), PreconditionViolation);
}

TEST_CASE("route agreement and column-count totals") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (const BoardShape& s : enumerate_shapes(m, n)) {
                auto H = hit_numbers_basis(s);
                CHECK(H == hit_numbers_stat(s));
                QLaurent total;
                for (const QLaurent& h : H) {
                    CHECK(h.natural());
                    total += h;
                }
                CHECK(total == q_falling(m, n));
            }
}

TEST_CASE("square-board shifted variant") {
    auto G1 = gr_hit_square(BoardShape::empty(Board{3, 3}));
    REQUIRE(G1.size() == 4);
    CHECK(G1[0] == q_factorial(3));
    CHECK(G1[1].is_zero());

    auto G2 = gr_hit_square(BoardShape({1}, Board{1, 1}));
    REQUIRE(G2.size() == 2);
    CHECK(G2[0].is_zero());
    CHECK(G2[1] == QLaurent::one());

    CHECK_NOTHROW(gr_hit_square(BoardShape({2, 1}, Board{3, 3})));
    CHECK_THROWS_AS(gr_hit_square(BoardShape({2, 1}, Board{2, 3})), PreconditionViolation);
}

TEST_CASE("rectangle closed form") {
    // Complete cross-check against the basis route on the 3 x 3 board.
    for (int m = 0; m <= 3; ++m)
        for (int j = 0; j <= 3; ++j) {
            std::vector<int> parts(static_cast<size_t>(j), m);
            auto H = hit_numbers_basis(BoardShape(parts, Board{3, 3}));
            for (int k = 0; k <= j; ++k) CHECK(rect_hit_closed_form(3, m, j, k) == H[static_cast<size_t>(k)]);
        }
    // One larger spot check.
    auto H6 = hit_numbers_basis(BoardShape({4, 4, 4}, Board{6, 6}));
    CHECK(rect_hit_closed_form(6, 4, 3, 2) == H6[2]);

    CHECK(rect_hit_closed_form(3, 1, 2, 2).is_zero());  // two hits in one column
    CHECK(rect_hit_closed_form(2, 2, 2, 0).is_zero());  // j - k > N - m
    CHECK_THROWS_AS(rect_hit_closed_form(3, 1, 4, 0), PreconditionViolation);
    CHECK_THROWS_AS(rect_hit_closed_form(3, 4, 2, 0), PreconditionViolation);
    CHECK_THROWS_AS(rect_hit_closed_form(3, 1, 2, -1), PreconditionViolation);
}

TEST_CASE("near-full rectangle hit vector") {
    // (m-1)^k on n x m: zero below k-1, then two explicit entries.
    auto H = hit_numbers_basis(BoardShape({2, 2}, Board{2, 3}));
    REQUIRE(H.size() == 3);
    CHECK(H[0].is_zero());
    CHECK(H[1] == q_number(2) * q_falling(2, 1));
    CHECK(H[2] == q_power(2) * q_number(1) * q_falling(2, 1));
}

TEST_CASE("corner deletion-contraction") {
    CHECK(verify_del_contract(BoardShape({1}, Board{1, 2}), {1, 1}).ok());
    BoardShape s({2, 1}, Board{2, 3});
    for (CellRef e : corner_cells(s)) CHECK(verify_del_contract(s, e).ok());
    CHECK_THROWS_AS(verify_del_contract(s, CellRef{1, 1}), PreconditionViolation);
}

TEST_CASE("board padding and spare rows") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (const BoardShape& s : enumerate_shapes(m, n)) {
                CheckOutcome out = verify_board_padding(s);
                CHECK(out.ok());
                CHECK(out.cases > 0);
            }
}

TEST_CASE("weighted deletion sums") {
    for (int k = 0; k <= 2; ++k) {
        CHECK(verify_hit_identities(BoardShape({2, 1}, Board{2, 3}), k).ok());
        CHECK(verify_hit_identities(BoardShape::empty(Board{2, 3}), k).ok());
    }
    for (const BoardShape& s : enumerate_shapes(3, 2))
        for (int k = 0; k <= 2; ++k) CHECK(verify_hit_identities(s, k).ok());
}

TEST_CASE("own board against enlarged squares") {
    CHECK(verify_keyrels(BoardShape({1}, Board{1, 2})).ok());
    CheckOutcome out = verify_keyrels(BoardShape({2, 1}, Board{2, 3}));
    CHECK(out.ok());
    CHECK(out.cases > 0);
}
