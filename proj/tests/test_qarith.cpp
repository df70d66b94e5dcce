#include <doctest.h>

#include "qchroma/qarith.hpp"

using namespace qchroma;

namespace {

// Deterministic LCG so the randomized laws are reproducible.
struct Rng {
    unsigned long long s = 0x9e3779b97f4a7c15ULL;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

QLaurent random_poly(Rng& r) {
    int len = r.next(0, 5);
    std::vector<Int> c;
    for (int i = 0; i < len; ++i) c.emplace_back(r.next(-4, 4));
    return QLaurent(r.next(-5, 5), c);
}

}  // namespace

TEST_CASE("q-number values and the splitting identity") {
    CHECK(q_number(0).is_zero());
    CHECK(q_number(0).str() == "0");
    CHECK(q_number(1) == QLaurent::one());
    CHECK(q_number(3).str() == "1+q+q^2");
    CHECK(q_number(-1).str() == "-q^-1");
    CHECK(q_number(-2).str() == "-q^-2-q^-1");
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) CHECK(q_number(a + b) == q_number(a) + q_number(b).shifted(a));
}

TEST_CASE("falling products and factorials") {
    CHECK(q_falling(3, 2).str() == "1+2q+2q^2+q^3");
    CHECK(q_falling(4, 0) == QLaurent::one());
    for (int m = 0; m <= 5; ++m) CHECK(q_falling(m, m) == q_factorial(m));
    CHECK(q_factorial(0) == QLaurent::one());
    CHECK(q_factorial(3) == q_number(3) * q_number(2) * q_number(1));
    CHECK_THROWS_AS(q_falling(2, 3), PreconditionViolation);
    CHECK_THROWS_AS(q_falling(2, -1), PreconditionViolation);
    CHECK_THROWS_AS(q_falling(-1, 0), PreconditionViolation);
}

TEST_CASE("binomial coefficients in q") {
    CHECK(q_binomial(4, 2).str() == "1+q+2q^2+q^3+q^4");
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(3, 5).is_zero());
    CHECK_THROWS_AS(q_binomial(-1, 0), PreconditionViolation);
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            QLaurent b = q_binomial(n, k);
            CHECK(b == q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k));
            CHECK(b == q_binomial(n, n - k));
            CHECK(b.natural());
            if (k > 0 && k < n) CHECK(b.max_exp() == k * (n - k));
            Int ones = b.at_one();
            Int direct = 1;
            for (int t = 0; t < k; ++t) direct = direct * (n - t) / (t + 1);
            CHECK(ones == direct);
        }
}

TEST_CASE("falling products at arbitrary integers") {
    for (int x = -3; x <= 5; ++x)
        for (int len = 0; len <= 4; ++len) {
            QLaurent direct = QLaurent::one();
            for (int t = 0; t < len; ++t) direct *= q_number(x - t);
            CHECK(q_int_falling(x, len) == direct);
        }
    CHECK(q_int_falling(2, 3).is_zero());  // the factor at zero kills it
    CHECK_THROWS_AS(q_int_falling(0, -1), PreconditionViolation);
}

TEST_CASE("exact division") {
    CHECK(exact_div(q_falling(3, 2), q_number(2)) == q_number(3));
    QLaurent p = q_binomial(5, 2) * q_number(-2);
    CHECK(exact_div(p, QLaurent::one()) == p);
    CHECK(exact_div(QLaurent(), p).is_zero());
    CHECK_THROWS_AS(exact_div(q_number(2), q_number(3)), NonExactDivision);
    CHECK_THROWS_AS(exact_div(QLaurent::monomial(1), QLaurent::monomial(2)), NonExactDivision);
    CHECK_THROWS_AS(exact_div(QLaurent::one(), QLaurent()), DivisionByZero);

    Rng r;
    for (int i = 0; i < 200; ++i) {
        QLaurent a = random_poly(r), b = random_poly(r);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("ring laws and normalization on random values") {
    Rng r;
    for (int i = 0; i < 200; ++i) {
        QLaurent a = random_poly(r), b = random_poly(r), c = random_poly(r);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        CHECK((a - a).is_zero());
        CHECK(a * QLaurent() == QLaurent());
        CHECK(a * QLaurent::one() == a);
        for (const QLaurent& p : {a + b, a * b, a - c}) {
            if (p.is_zero()) continue;
            CHECK(p.coeff(p.min_exp()) != 0);
            CHECK(p.coeff(p.max_exp()) != 0);
        }
    }
}

TEST_CASE("canonical text") {
    CHECK(QLaurent().str() == "0");
    CHECK(QLaurent::one().str() == "1");
    CHECK(QLaurent::monomial(2, 1).str() == "2q");
    CHECK(QLaurent::monomial(1, 3).str() == "q^3");
    CHECK(QLaurent::monomial(-1, -1).str() == "-q^-1");
    CHECK(QLaurent::monomial(-3, 2).str() == "-3q^2");
    CHECK(QLaurent(1, {2, 2}).str() == "2q+2q^2");
    CHECK(QLaurent(0, {1, -2, 1}).str() == "1-2q+q^2");
    CHECK(QLaurent(-1, {1, 0, 3}).str() == "q^-1+3q");
}

TEST_CASE("shifting, evaluation at one, naturality") {
    CHECK(q_number(3).shifted(2) == q_power(2) * q_number(3));
    CHECK(q_number(3).shifted(0) == q_number(3));
    CHECK(q_falling(3, 2).at_one() == 6);
    CHECK(q_factorial(4).at_one() == 24);
    CHECK(q_number(3).natural());
    CHECK(!q_number(-1).natural());
    CHECK(!(q_number(1) - q_number(2)).natural());
    CHECK(!q_number(2).shifted(-1).natural());
    CHECK(QLaurent().natural());
    CHECK_THROWS_AS(QLaurent().min_exp(), PreconditionViolation);
}

TEST_CASE("polynomials in x over Laurent coefficients") {
    CHECK(x_pochhammer(0) == XPoly::one());
    XPoly p2 = x_pochhammer(2);  // (1-x)(1-xq)
    CHECK(p2.degree() == 2);
    CHECK(p2.coeff(0) == QLaurent::one());
    CHECK(p2.coeff(1) == -(QLaurent::one() + q_power(1)));
    CHECK(p2.coeff(2) == q_power(1));
    CHECK(p2.coeff(7).is_zero());
    CHECK((p2 * x_pochhammer(1)).degree() == 3);
    CHECK(p2.scaled(QLaurent()).is_zero());
    XPoly sum = p2 + p2.scaled(QLaurent::monomial(-1, 0));
    CHECK(sum.is_zero());
    CHECK(sum.degree() == -1);
}
