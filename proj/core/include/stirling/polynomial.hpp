/// @file polynomial.hpp
/// @brief Dense univariate polynomials over an exact ring.
///
/// Coefficients are stored constant term first; the zero polynomial has an
/// empty coefficient vector and degree -1.

#pragma once

#include "stirling/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirling {

template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(const T& v) { return v == 0 ? Poly() : Poly(std::vector<T>{v}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const T& lc() const {
        if (c.empty()) throw std::domain_error("lc of zero polynomial");
        return c.back();
    }
    const T& coeff(int i) const {
        static const T zero = T(0);
        return (i < 0 || i >= static_cast<int>(c.size())) ? zero : c[static_cast<size_t>(i)];
    }

    bool operator==(const Poly&) const = default;

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const T& s) {
        if (s == 0) return *this = Poly();
        for (auto& v : c) v *= s;
        return *this;
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * T(static_cast<long>(i));
        return r;
    }

    /// p / x; requires p(0) = 0.
    Poly shifted_down() const {
        if (is_zero()) return Poly();
        if (c[0] != 0) throw std::domain_error("shifted_down: nonzero constant term");
        Poly r;
        r.c.assign(c.begin() + 1, c.end());
        return r;
    }

    template <class S>
    S evaluate(const S& x) const {
        S acc = S(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + S(c[i]);
        return acc;
    }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& v : p.c) r.c.push_back(Rat(v));
    return r;
}

/// gcd of coefficients, always nonnegative; 0 for the zero polynomial.
inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& v : p.c) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

inline IntPoly divide_exact_scalar(const IntPoly& p, const Int& d) {
    if (d == 0) throw std::domain_error("divide_exact_scalar: zero divisor");
    IntPoly r = p;
    for (auto& v : r.c) {
        Int q, rem;
        boost::multiprecision::divide_qr(v, d, q, rem);
        if (rem != 0) throw std::domain_error("divide_exact_scalar: non-exact");
        v = q;
    }
    return r;
}

inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.lc() < 0) g = -g;
    return divide_exact_scalar(p, g);
}

/// Pseudo-remainder of a by b scaled by an even power of lc(b), so the
/// result is a positive multiple of the true remainder (sign-safe for
/// Sturm sequences).
inline IntPoly even_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("even_pseudo_remainder: zero divisor");
    int delta = a.degree() - b.degree();
    if (delta < 0) return a;
    unsigned long e = static_cast<unsigned long>(delta) + 1;
    if (e % 2 == 1) ++e;
    IntPoly r = a;
    r.scale(pow_int(b.lc(), e));
    const Int& blc = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        Int q, rem;
        boost::multiprecision::divide_qr(r.lc(), blc, q, rem);
        if (rem != 0) throw std::domain_error("even_pseudo_remainder: non-exact step");
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<size_t>(i + shift)] -= q * b.c[static_cast<size_t>(i)];
        r.trim();
    }
    return r;
}

/// Exact division in Z[x]; throws if b does not divide a.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("divide_exact: degree mismatch");
    IntPoly r = a, q;
    q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        Int qc, rem;
        boost::multiprecision::divide_qr(r.lc(), b.lc(), qc, rem);
        if (rem != 0) throw std::domain_error("divide_exact: non-exact leading term");
        q.c[static_cast<size_t>(shift)] = qc;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<size_t>(i + shift)] -= qc * b.c[static_cast<size_t>(i)];
        r.trim();
    }
    if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    q.trim();
    return q;
}

/// Primitive gcd in Z[x] via a pseudo-remainder sequence.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(even_pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Synthetic division by (x - root); requires p(root) = 0.
inline IntPoly deflate_root(const IntPoly& p, const Int& root) {
    if (p.is_zero()) return p;
    IntPoly q;
    q.c.assign(p.c.size() - 1, Int(0));
    Int carry = 0;
    for (size_t i = p.c.size(); i-- > 1;) {
        carry = p.c[i] + root * carry;
        q.c[i - 1] = carry;
    }
    if (p.c[0] + root * carry != 0) throw std::domain_error("deflate_root: not a root");
    return q;
}

template <class T>
std::string poly_to_string(const Poly<T>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += ';';
        s += p.c[i].str();
    }
    return s;
}

} // namespace stirling
