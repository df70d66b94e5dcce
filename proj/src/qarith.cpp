#include "qchroma/qarith.hpp"

#include <algorithm>
#include <utility>

namespace qchroma {

QLaurent::QLaurent(int min_exp, std::vector<Int> coeffs)
    : min_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
}

void QLaurent::normalize() {
    size_t lo = 0;
    size_t hi = coeffs_.size();
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        min_ = 0;
        return;
    }
    if (lo > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
    coeffs_.resize(hi - lo);
    min_ += static_cast<int>(lo);
}

QLaurent QLaurent::monomial(Int c, int e) {
    QLaurent r;
    if (c == 0) return r;
    r.min_ = e;
    r.coeffs_.push_back(std::move(c));
    return r;
}

int QLaurent::min_exp() const {
    if (is_zero()) throw PreconditionViolation("min_exp of zero");
    return min_;
}

int QLaurent::max_exp() const {
    if (is_zero()) throw PreconditionViolation("max_exp of zero");
    return min_ + static_cast<int>(coeffs_.size()) - 1;
}

Int QLaurent::coeff(int e) const {
    long i = static_cast<long>(e) - min_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

bool QLaurent::natural() const {
    if (is_zero()) return true;
    if (min_ < 0) return false;
    for (const Int& c : coeffs_)
        if (c < 0) return false;
    return true;
}

Int QLaurent::at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

QLaurent QLaurent::shifted(int e) const {
    QLaurent r = *this;
    if (!r.is_zero()) r.min_ += e;
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(min_, o.min_);
    int hi = std::max(max_exp(), o.max_exp());
    std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<size_t>(min_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<size_t>(o.min_ - lo) + i] += o.coeffs_[i];
    min_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.min_ = a.min_ + b.min_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

std::string QLaurent::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        int e = min_ + static_cast<int>(i);
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (!s.empty())
            s += neg ? '-' : '+';
        else if (neg)
            s += '-';
        if (a != 1 || e == 0) s += a.str();
        if (e != 0) {
            s += 'q';
            if (e != 1) {
                s += '^';
                s += std::to_string(e);
            }
        }
    }
    return s;
}

QLaurent exact_div(const QLaurent& num, const QLaurent& den) {
    if (den.is_zero()) throw DivisionByZero("exact_div: zero divisor");
    if (num.is_zero()) return {};
    const std::vector<Int>& nc = num.coeffs();
    const std::vector<Int>& dc = den.coeffs();
    if (nc.size() < dc.size())
        throw NonExactDivision("exact_div: " + num.str() + " / " + den.str());
    // Long division from the top.  If den divides num in the ring, every
    // leading-coefficient step divides exactly and the remainder vanishes;
    // anything else is reported, never rounded.
    std::vector<Int> rem(nc);
    std::vector<Int> quot(nc.size() - dc.size() + 1);
    const Int& lead = dc.back();
    for (size_t i = quot.size(); i-- > 0;) {
        Int& top = rem[i + dc.size() - 1];
        if (top % lead != 0)
            throw NonExactDivision("exact_div: " + num.str() + " / " + den.str());
        Int t = top / lead;
        if (t != 0)
            for (size_t j = 0; j < dc.size(); ++j) rem[i + j] -= t * dc[j];
        quot[i] = std::move(t);
    }
    for (const Int& r : rem)
        if (r != 0) throw NonExactDivision("exact_div: " + num.str() + " / " + den.str());
    return QLaurent(num.min_exp() - den.min_exp(), std::move(quot));
}

QLaurent q_number(int a) {
    if (a == 0) return {};
    if (a > 0) return QLaurent(0, std::vector<Int>(static_cast<size_t>(a), 1));
    return QLaurent(a, std::vector<Int>(static_cast<size_t>(-a), -1));
}

QLaurent q_power(int e) { return QLaurent::monomial(1, e); }

QLaurent q_falling(int m, int k) {
    if (k < 0 || m < 0 || k > m)
        throw PreconditionViolation("q_falling(" + std::to_string(m) + "," + std::to_string(k) + ")");
    QLaurent r = QLaurent::one();
    for (int t = 0; t < k; ++t) r *= q_number(m - t);
    return r;
}

QLaurent q_factorial(int n) {
    if (n < 0) throw PreconditionViolation("q_factorial(" + std::to_string(n) + ")");
    return q_falling(n, n);
}

QLaurent q_binomial(int n, int k) {
    if (n < 0) throw PreconditionViolation("q_binomial(" + std::to_string(n) + ",...)");
    if (k < 0 || k > n) return {};
    return exact_div(q_falling(n, k), q_factorial(k));
}

QLaurent q_int_falling(int x, int len) {
    if (len < 0) throw PreconditionViolation("q_int_falling: negative length");
    QLaurent r = QLaurent::one();
    for (int t = 0; t < len; ++t) r *= q_number(x - t);
    return r;
}

XPoly::XPoly(std::vector<QLaurent> coeffs) : c_(std::move(coeffs)) { normalize(); }

void XPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QLaurent& XPoly::coeff(int d) const {
    static const QLaurent kZero;
    if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(d)];
}

XPoly XPoly::scaled(const QLaurent& c) const {
    XPoly r;
    if (c.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const QLaurent& a : c_) r.c_.push_back(a * c);
    r.normalize();
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, QLaurent());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

XPoly x_pochhammer(int i) {
    if (i < 0) throw PreconditionViolation("x_pochhammer: negative index");
    XPoly r = XPoly::one();
    for (int t = 0; t < i; ++t) r = r * XPoly({QLaurent::one(), -q_power(t)});
    return r;
}

}  // namespace qchroma
