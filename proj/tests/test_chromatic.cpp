#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "qchroma/chromatic.hpp"

using namespace qchroma;

namespace {

OrderedGraph complete(int n) {
    OrderedGraph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

}  // namespace

TEST_CASE("graphs from shapes") {
    CHECK(graph_from_shape(BoardShape::empty(Board{2, 3})) == complete(5));

    OrderedGraph rect = graph_from_shape(BoardShape({3, 3}, Board{2, 3}));
    CHECK(rect.vertex_count == 5);
    CHECK(rect.edges.size() == 4);  // two cliques, nothing across
    for (auto [u, v] : rect.edges) CHECK((v < 2 || u >= 2));

    OrderedGraph g = graph_from_shape(BoardShape({2, 1}, Board{2, 3}));
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(g.edges == want);

    // The path staircase gives the same pair set, 1-based.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (const BoardShape& s : enumerate_shapes(m, n)) {
                std::vector<std::pair<int, int>> shifted;
                for (auto [i, j] : dyck_cells(s)) shifted.emplace_back(i - 1, j - 1);
                CHECK(graph_from_shape(s).edges == shifted);
            }
}

TEST_CASE("coloring sums of small graphs") {
    OrderedGraph k2 = graph_from_shape(BoardShape::empty(Board{1, 1}));
    SymPoly p2 = csf_bruteforce(k2, 2);
    CHECK(p2.terms().size() == 1);
    CHECK(p2.coeff({1, 1}) == q_number(2));

    OrderedGraph iso2 = graph_from_shape(BoardShape({1}, Board{1, 1}));
    SymPoly pi = csf_bruteforce(iso2, 2);
    CHECK(pi.coeff({2}) == QLaurent::one());
    CHECK(pi.coeff({1, 1}).str() == "2");

    OrderedGraph k3 = graph_from_shape(BoardShape::empty(Board{1, 2}));
    CHECK(csf_bruteforce(k3, 2).is_zero());
    CHECK(csf_bruteforce(k3, 3) == esym(3, 3).scaled(q_factorial(3)));

    CHECK(csf_bruteforce(k2, 1).is_zero());
    CHECK(csf_bruteforce(iso2, 1).coeff({2}) == QLaurent::one());
    CHECK(csf_bruteforce(graph_from_shape(BoardShape::empty(Board{0, 0})), 3) == SymPoly::one(3));
}

TEST_CASE("full count vectors") {
    // Coefficients depend only on the multiset of counts, and the weakly
    // decreasing keys are exactly what the representative form stores.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m && m + n <= 4; ++n)
            for (const BoardShape& s : enumerate_shapes(m, n)) {
                OrderedGraph g = graph_from_shape(s);
                auto raw = csf_by_color_counts(g, 3);
                SymPoly rep = csf_bruteforce(g, 3);
                size_t reps = 0;
                for (const auto& [key, c] : raw) {
                    std::vector<int> sorted = key;
                    std::sort(sorted.rbegin(), sorted.rend());
                    CHECK(raw.at(sorted) == c);
                    if (key != sorted) continue;
                    ++reps;
                    std::vector<int> trimmed = key;
                    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                    CHECK(rep.coeff(trimmed) == c);
                }
                CHECK(rep.terms().size() == reps);
            }

    auto count_colorings = [](const OrderedGraph& g, int colors) {
        Int total = 0;
        for (const auto& [key, c] : csf_by_color_counts(g, colors)) total += c.at_one();
        return total;
    };
    CHECK(count_colorings(graph_from_shape(BoardShape::empty(Board{1, 1})), 3) == 6);
    CHECK(count_colorings(graph_from_shape(BoardShape({1}, Board{1, 1})), 3) == 9);
    CHECK(count_colorings(graph_from_shape(BoardShape::empty(Board{1, 2})), 3) == 6);
    CHECK(csf_by_color_counts(graph_from_shape(BoardShape::empty(Board{1, 2})), 2).empty());
}

TEST_CASE("recursion equals enumeration") {
    CsfEngine eng;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m + n <= 5; ++m)
            for (const BoardShape& s : enumerate_shapes(m, n)) {
                int M = m + n;
                CHECK(csf_recursive(s, M, &eng) == csf_bruteforce(graph_from_shape(s), M));
            }
    CHECK(eng.size() > 0);

    // Degenerate inputs, and the memo-free entry point.
    CHECK(csf_recursive(BoardShape::empty(Board{0, 0}), 2) == SymPoly::one(2));
    CHECK(csf_recursive(BoardShape({1}, Board{1, 2}), 0).is_zero());
    CHECK(csf_recursive(BoardShape({2, 1}, Board{2, 3}), 3) ==
          csf_bruteforce(graph_from_shape(BoardShape({2, 1}, Board{2, 3})), 3));
    // Too few colors for the column clique.
    CHECK(csf_recursive(BoardShape::empty(Board{2, 2}), 3, &eng).is_zero());
}

TEST_CASE("elementary pieces") {
    CHECK(esym(0, 3) == SymPoly::one(3));
    CHECK(esym(4, 3).is_zero());
    CHECK(esym(2, 2).terms().size() == 1);
    CHECK(esym(2, 2).coeff({1, 1}) == QLaurent::one());
    CHECK(esym(3, 3).coeff({1, 1, 1}) == QLaurent::one());

    SymPoly sq = mul_by_esym(esym(1, 2), 1);
    CHECK(sq.coeff({2}) == QLaurent::one());
    CHECK(sq.coeff({1, 1}).str() == "2");
    CHECK(mul_by_esym(esym(2, 2), 1).coeff({2, 1}) == QLaurent::one());

    SymPoly e1e2 = mul_by_esym(esym(2, 3), 1);
    CHECK(e1e2 == mul_by_esym(esym(1, 3), 2));
    CHECK(e1e2.coeff({2, 1}) == QLaurent::one());
    CHECK(e1e2.coeff({1, 1, 1}).str() == "3");

    CHECK(mul_by_esym(e1e2, 0) == e1e2);
    CHECK(mul_by_esym(SymPoly(3), 2).is_zero());
    CHECK(mul_by_esym(mul_by_esym(SymPoly::one(4), 1), 2) == mul_by_esym(esym(2, 4), 1));
}

TEST_CASE("expansion through rectangles") {
    BoardShape s({2, 1}, Board{2, 3});
    CHECK(gp_expansion(s, 5) == csf_bruteforce(graph_from_shape(s), 5));
    CHECK(gp_expansion(BoardShape::empty(Board{1, 2}), 3) ==
          csf_bruteforce(graph_from_shape(BoardShape::empty(Board{1, 2})), 3));
    BoardShape rect({3, 3}, Board{2, 3});
    CHECK(gp_expansion(rect, 4) == csf_bruteforce(graph_from_shape(rect), 4));
    CHECK_THROWS_AS(gp_expansion(BoardShape({1, 1}, Board{2, 1}), 3), PreconditionViolation);
}

TEST_CASE("expansion through elementary terms") {
    auto terms = an_e_terms(BoardShape::empty(Board{1, 2}));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coeff == q_factorial(3));
    CHECK(terms[0].outer == 3);
    CHECK(terms[0].inner == 0);
    CHECK(an_expansion(BoardShape::empty(Board{1, 2}), 3) == esym(3, 3).scaled(q_factorial(3)));

    // One cell in a 1 x 1 board: the sum collapses to e_1 * e_1.
    CHECK(an_expansion(BoardShape({1}, Board{1, 1}), 2) ==
          csf_bruteforce(graph_from_shape(BoardShape({1}, Board{1, 1})), 2));

    BoardShape s({2, 1}, Board{2, 3});
    CHECK(an_expansion(s, 5) == csf_bruteforce(graph_from_shape(s), 5));

    CHECK_THROWS_AS(an_e_terms(BoardShape({1, 1}, Board{2, 2})), PreconditionViolation);
    CHECK_THROWS_AS(an_expansion(BoardShape({1, 1}, Board{2, 2}), 4), PreconditionViolation);
}

TEST_CASE("rectangle identities") {
    CsfEngine eng;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n)
            for (int k = 0; k <= n; ++k)
                for (int colors : {1, m + n}) {
                    CheckOutcome out = verify_rect_recursion(m, n, k, colors, &eng);
                    CHECK(out.ok());
                    CHECK(out.cases >= 2);
                }
    CHECK(verify_rect_recursion(2, 1, 1, 3).ok());
    CHECK_THROWS_AS(verify_rect_recursion(2, 1, 2, 3), PreconditionViolation);
    CHECK_THROWS_AS(verify_rect_recursion(2, 1, 1, 0), PreconditionViolation);
    CHECK_THROWS_AS(verify_rect_recursion(0, 1, 0, 3), PreconditionViolation);
}

TEST_CASE("representative bookkeeping") {
    SymPoly p(2);
    CHECK_THROWS_AS(p.add_term({1, 2}, QLaurent::one()), PreconditionViolation);
    CHECK_THROWS_AS(p.add_term({2, 0}, QLaurent::one()), PreconditionViolation);
    CHECK_THROWS_AS(p.add_term({1, 1, 1}, QLaurent::one()), PreconditionViolation);
    p.add_term({2, 1}, q_number(2));
    p.add_term({2, 1}, -q_number(2));
    CHECK(p.is_zero());
    CHECK(p.coeff({2}).is_zero());
    p.add_term({2}, QLaurent::one());
    CHECK(p.scaled(QLaurent()).is_zero());
    SymPoly q3(3);
    CHECK_THROWS_AS(p += q3, PreconditionViolation);
    CHECK(p.str() == "[2]*(1)");
}

TEST_CASE("variable lifts") {
    CHECK(SymPoly::one(2).lifted(0) == SymPoly::one(3));

    SymPoly base = SymPoly::one(0).lifted(1);
    CHECK(base.vars() == 1);
    CHECK(base.coeff({1}) == QLaurent::one());

    SymPoly p(2);
    p.add_term({2, 1}, QLaurent::one());
    CHECK(p.lifted(1).coeff({2, 1, 1}) == QLaurent::one());
    CHECK(p.lifted(3).is_zero());
    CHECK(p.lifted(2).is_zero());  // appending 2 after 1 breaks the order

    SymPoly shortkey(2);
    shortkey.add_term({2}, QLaurent::one());
    CHECK(shortkey.lifted(1).is_zero());  // padded slot is 0, appended 1 breaks it
    CHECK(shortkey.lifted(0).coeff({2}) == QLaurent::one());

    CHECK_THROWS_AS(p.lifted(-1), PreconditionViolation);
}
