#include <doctest.h>

#include "qchroma/rooks.hpp"

using namespace qchroma;

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("surviving-cell statistic") {
    BoardShape s({2, 1}, Board{2, 3});
    CHECK(inv_statistic(s, {}) == 3);
    CHECK(inv_statistic(s, {{1, 1}}) == 2);
    CHECK(inv_statistic(s, {{1, 2}}) == 1);
    CHECK(inv_statistic(s, {{2, 1}}) == 1);
    CHECK(inv_statistic(s, {{1, 2}, {2, 1}}) == 0);
    CHECK_THROWS_AS(inv_statistic(s, {{2, 2}}), PreconditionViolation);
}

TEST_CASE("placement generating functions") {
    BoardShape s({2, 1}, Board{2, 3});
    auto R = rook_numbers(s);
    REQUIRE(R.size() == 3);
    CHECK(R[0].str() == "q^3");
    CHECK(R[1].str() == "2q+q^2");
    CHECK(R[2].str() == "1");
    CHECK(rook_number(s, 1) == R[1]);
    CHECK(rook_number(s, 3).is_zero());
    CHECK(rook_number(s, -1).is_zero());

    BoardShape empty = BoardShape::empty(Board{2, 3});
    CHECK(rook_number(empty, 0) == QLaurent::one());

    // Full rectangle: R_k = qbin(n,k) * [m]_k up to the q^(cells - ...) shift.
    BoardShape rect({3, 3}, Board{2, 3});
    auto Rr = rook_numbers(rect);
    CHECK(Rr[0] == q_power(6));
    CHECK(Rr[2] == q_binomial(3, 2) * q_factorial(2));
}

TEST_CASE("counts at q = 1") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n)
            for (const BoardShape& s : enumerate_shapes(m, n))
                for (int k = 0; k <= s.length() + 1; ++k) {
                    CHECK(rook_number(s, k).at_one() == placement_count(s, k));
                    CHECK(placement_count(s, k) == placement_count(conjugate(s), k));
                }
    // k rooks on the full n x m rectangle: choose rows, choose columns, match.
    BoardShape rect({4, 4, 4}, Board{3, 4});
    for (int k = 0; k <= 3; ++k) {
        Int expect = binom(3, k) * binom(4, k);
        for (int i = 2; i <= k; ++i) expect *= i;
        CHECK(placement_count(rect, k) == expect);
    }
}

TEST_CASE("factorization through the sum of falling factorials") {
    CHECK(f_eval(BoardShape({2, 1}, Board{2, 3}), 2).str() == "1+2q+3q^2+2q^3+q^4");
    CHECK(f_eval(BoardShape::empty(Board{1, 2}), 5) == QLaurent::one());
    CHECK(f_eval(BoardShape({1}, Board{1, 1}), 1) == q_number(2));
    // The two routes inside f_eval must agree for every shape and argument.
    for (const BoardShape& s : enumerate_shapes(3, 3))
        for (int x = s.length(); x <= s.length() + 4; ++x) CHECK_NOTHROW(f_eval(s, x));
}

TEST_CASE("cleared ratio identity") {
    for (auto parts : {std::vector<int>{1}, {2, 1}, {3, 3, 1}}) {
        BoardShape s(parts, Board{static_cast<int>(parts.size()), parts[0]});
        CheckOutcome out = verify_f_ratio(s);
        CHECK(out.ok());
        CHECK(out.cases > 0);
    }
    CheckOutcome degenerate = verify_f_ratio(BoardShape::empty(Board{1, 1}));
    CHECK(degenerate.ok());
    CHECK(degenerate.cases > 0);
}

TEST_CASE("deletion and contraction identities") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (const BoardShape& s : enumerate_shapes(m, n))
                for (int k = 0; k <= n + 1; ++k) {
                    CheckOutcome out = verify_rook_identities(s, k);
                    CHECK(out.ok());
                    CHECK(out.cases == 3);
                }
}
