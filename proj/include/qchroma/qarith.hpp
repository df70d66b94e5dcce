#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "qchroma/errors.hpp"

namespace qchroma {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// coeffs_[i] is the coefficient of q^(min_ + i).  Invariant: coeffs_ is empty
// (and min_ == 0) for the zero value; otherwise its first and last entries are
// nonzero.  Equal values therefore have identical representations.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(int min_exp, std::vector<Int> coeffs);

    static QLaurent one() { return monomial(1, 0); }
    static QLaurent monomial(Int c, int e = 0);

    bool is_zero() const { return coeffs_.empty(); }
    // min_exp/max_exp require a nonzero value.
    int min_exp() const;
    int max_exp() const;
    Int coeff(int e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    // True iff every exponent is >= 0 and every coefficient is >= 0.
    bool natural() const;
    Int at_one() const;

    QLaurent shifted(int e) const;  // multiply by q^e

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

    bool operator==(const QLaurent&) const = default;

    // Canonical text: "0", "1", "2q+2q^2", "-q^-1", "1-2q+q^2".
    // Terms in increasing exponent order, no spaces.
    std::string str() const;

private:
    int min_ = 0;
    std::vector<Int> coeffs_;

    void normalize();
};

// Quotient in the Laurent ring; throws NonExactDivision unless den divides
// num exactly (integer coefficients, zero remainder).
QLaurent exact_div(const QLaurent& num, const QLaurent& den);

// [a] = (1 - q^a)/(1 - q).  For a >= 0 this is 1 + q + ... + q^(a-1);
// for a < 0 it is -(q^a + ... + q^-1).
QLaurent q_number(int a);
QLaurent q_power(int e);  // the monomial q^e

// [m][m-1]...[m-k+1].  Requires 0 <= k <= m: the identity-level callers never
// leave that range, so an out-of-range argument is a caller bug.
QLaurent q_falling(int m, int k);
QLaurent q_factorial(int n);
// Gaussian binomial; zero for k < 0 or k > n.
QLaurent q_binomial(int n, int k);
// [x][x-1]...[x-len+1] for an arbitrary integer x (factors may vanish or
// have negative arguments); len >= 0.
QLaurent q_int_falling(int x, int len);

// Polynomial in a formal variable x with QLaurent coefficients.
// c_[i] multiplies x^i; trailing zero coefficients are stripped.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<QLaurent> coeffs);

    static XPoly one() { return XPoly({QLaurent::one()}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const QLaurent& coeff(int d) const;

    XPoly scaled(const QLaurent& c) const;
    XPoly& operator+=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);

    bool operator==(const XPoly&) const = default;

private:
    std::vector<QLaurent> c_;

    void normalize();
};

// (x;q)_i = prod_{t=0}^{i-1} (1 - x q^t); i >= 0.
XPoly x_pochhammer(int i);

}  // namespace qchroma
