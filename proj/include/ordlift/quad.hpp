#pragma once

#include "ordlift/rat.hpp"

namespace ordlift {

/// Element a + b*pi of the ramified quadratic extension K(pi), pi^2 = d*p.
/// Valuations are stored doubled so they stay integral: w(pi) = 1, w(p) = 2.
struct QuadElem {
    Rat a, b;
    long p = 0;
    Rat d; // p-local unit

    QuadElem() = default;
    QuadElem(Rat a_, Rat b_, long p_, Rat d_) : a(std::move(a_)), b(std::move(b_)), p(p_), d(std::move(d_)) {}

    static QuadElem zero(long p, const Rat& d) { return {0, 0, p, d}; }
    static QuadElem one(long p, const Rat& d) { return {1, 0, p, d}; }
    static QuadElem pi(long p, const Rat& d) { return {0, 1, p, d}; }

    bool is_zero() const { return a == 0 && b == 0; }

    void check_compat(const QuadElem& o) const {
        if (p != o.p || d != o.d)
            throw std::domain_error("QuadElem: mixed (p, d) parameters");
    }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        x.check_compat(y);
        return {x.a + y.a, x.b + y.b, x.p, x.d};
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        x.check_compat(y);
        return {x.a - y.a, x.b - y.b, x.p, x.d};
    }
    friend QuadElem operator-(const QuadElem& x) { return {-x.a, -x.b, x.p, x.d}; }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        x.check_compat(y);
        Rat dp = x.d * x.p;
        return {x.a * y.a + dp * x.b * y.b, x.a * y.b + x.b * y.a, x.p, x.d};
    }
    friend QuadElem operator*(const Rat& c, const QuadElem& y) { return {c * y.a, c * y.b, y.p, y.d}; }
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.p == y.p && x.d == y.d && x.a == y.a && x.b == y.b;
    }

    QuadElem conj() const { return {a, -b, p, d}; }

    QuadElem inverse() const {
        // (a+b pi)^-1 = conj / norm, norm = a^2 - d p b^2
        Rat n = a * a - d * Rat(p) * b * b;
        if (n == 0) throw std::domain_error("QuadElem inverse of zero");
        return {a / n, -b / n, p, d};
    }
};

inline Rat trace(const QuadElem& x) { return 2 * x.a; }
inline Rat norm(const QuadElem& x) { return x.a * x.a - x.d * Rat(x.p) * x.b * x.b; }

// doubled valuation: w(a + b pi) = min(2 vp(a), 2 vp(b) + 1)
inline long dval(const QuadElem& x) {
    if (x.is_zero()) return VAL_INF;
    long va = (x.a == 0) ? VAL_INF : 2 * vp(x.a, x.p);
    long vb = (x.b == 0) ? VAL_INF : 2 * vp(x.b, x.p) + 1;
    return va < vb ? va : vb;
}

} // namespace ordlift
