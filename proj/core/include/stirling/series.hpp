/// @file series.hpp
/// @brief Truncated formal power series whose coefficients are exact
///        multivariate polynomials, with just enough calculus to solve
///        autonomous first-order ODEs and expand Thron-type continued
///        fractions.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "multivar.hpp"
#include "numeric.hpp"

namespace stirling {

class Series {
public:
    Series(unsigned order, unsigned nvars)
        : order_(order), nvars_(nvars), c_(order + 1, MultiPoly(nvars)) {}

    static Series one(unsigned order, unsigned nvars) {
        Series s(order, nvars);
        s.c_[0] = MultiPoly::constant(nvars, 1);
        return s;
    }

    /// The series consisting of the formal variable itself.
    static Series identity(unsigned order, unsigned nvars) {
        Series s(order, nvars);
        if (order >= 1) s.c_[1] = MultiPoly::constant(nvars, 1);
        return s;
    }

    unsigned order() const { return order_; }
    unsigned nvars() const { return nvars_; }
    const MultiPoly& coeff(unsigned i) const {
        if (i > order_) throw std::out_of_range("Series::coeff");
        return c_[i];
    }
    void set_coeff(unsigned i, MultiPoly p) {
        if (i > order_) throw std::out_of_range("Series::set_coeff");
        if (p.nvars() != nvars_) throw std::invalid_argument("Series::set_coeff: arity");
        c_[i] = std::move(p);
    }

    bool operator==(const Series& o) const {
        return order_ == o.order_ && nvars_ == o.nvars_ && c_ == o.c_;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }

    /// Equality of the coefficients 0..upto only.
    bool agrees_with(const Series& o, unsigned upto) const {
        if (nvars_ != o.nvars_ || upto > order_ || upto > o.order_) return false;
        for (unsigned i = 0; i <= upto; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }

    Series& operator+=(const Series& o) {
        check_shape(o);
        for (unsigned i = 0; i <= order_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_shape(o);
        for (unsigned i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_shape(b);
        Series out(a.order_, a.nvars_);
        for (unsigned i = 0; i <= a.order_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= a.order_; ++j) {
                if (b.c_[j].is_zero()) continue;
                out.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const MultiPoly& m) const {
        Series out(order_, nvars_);
        for (unsigned i = 0; i <= order_; ++i) out.c_[i] = c_[i] * m;
        return out;
    }
    Series scaled(const Rat& q) const {
        Series out = *this;
        for (auto& p : out.c_) p.scale(q);
        return out;
    }

    /// Multiplication by the formal variable (coefficients shift up).
    Series shifted_up() const {
        Series out(order_, nvars_);
        for (unsigned i = 0; i + 1 <= order_; ++i) out.c_[i + 1] = c_[i];
        return out;
    }

    Series derivative() const {
        Series out(order_, nvars_);
        for (unsigned i = 1; i <= order_; ++i) {
            out.c_[i - 1] = c_[i];
            out.c_[i - 1].scale(Rat(i));
        }
        return out;
    }

    /// Definite integral from 0; the top coefficient is dropped to keep the
    /// truncation order.
    Series antiderivative() const {
        Series out(order_, nvars_);
        for (unsigned i = 0; i + 1 <= order_; ++i) {
            out.c_[i + 1] = c_[i];
            out.c_[i + 1].scale(Rat(1, static_cast<long>(i) + 1));
        }
        return out;
    }

private:
    void check_shape(const Series& o) const {
        if (order_ != o.order_ || nvars_ != o.nvars_)
            throw std::invalid_argument("Series: shape mismatch");
    }

    unsigned order_;
    unsigned nvars_;
    std::vector<MultiPoly> c_;
};

/// outer(inner); inner must have zero constant term.
inline Series compose(const Series& outer, const Series& inner) {
    if (!inner.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner constant term must vanish");
    const unsigned order = inner.order();
    Series acc(order, inner.nvars());
    for (unsigned i = outer.order() + 1; i-- > 0;) {
        acc = acc * inner;
        MultiPoly head = outer.coeff(i);
        if (inner.nvars() != outer.nvars())
            throw std::invalid_argument("compose: arity mismatch");
        Series c(order, inner.nvars());
        c.set_coeff(0, head);
        acc += c;
    }
    return acc;
}

/// 1 / s for s with constant term exactly 1.
inline Series reciprocal_unit(const Series& s) {
    if (s.coeff(0) != MultiPoly::constant(s.nvars(), 1))
        throw std::invalid_argument("reciprocal_unit: constant term must be 1");
    Series out(s.order(), s.nvars());
    out.set_coeff(0, MultiPoly::constant(s.nvars(), 1));
    for (unsigned n = 1; n <= s.order(); ++n) {
        MultiPoly acc(s.nvars());
        for (unsigned i = 1; i <= n; ++i) acc += s.coeff(i) * out.coeff(n - i);
        out.set_coeff(n, -acc);
    }
    return out;
}

/// exp(s) for s with zero constant term.
inline Series exp_series(const Series& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("exp_series: constant term must vanish");
    Series out = Series::one(s.order(), s.nvars());
    Series power = Series::one(s.order(), s.nvars());
    Rat fact = 1;
    for (unsigned k = 1; k <= s.order(); ++k) {
        power *= s;
        fact *= k;
        out += power.scaled(Rat(1) / fact);
    }
    return out;
}

/// log(1 - s) for s with zero constant term.
inline Series log_one_minus(const Series& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("log_one_minus: constant term must vanish");
    Series out(s.order(), s.nvars());
    Series power = Series::one(s.order(), s.nvars());
    for (unsigned k = 1; k <= s.order(); ++k) {
        power *= s;
        out -= power.scaled(Rat(1, static_cast<long>(k)));
    }
    return out;
}

/// Unique series F with F' = phi(F) and F(0) = 0.  Each substitution into
/// the integral form F = int phi(F) settles one more coefficient, so the
/// fixed point is reached after exactly `order` passes from F = 0.
inline Series solve_autonomous_ode(const std::function<Series(const Series&)>& phi,
                                   unsigned order, unsigned nvars) {
    Series f(order, nvars);
    for (unsigned pass = 0; pass < order; ++pass) f = phi(f).antiderivative();
    return f;
}

/// Thron-type continued fraction
///   f = 1 / (1 - delta_1 t - alpha_1 t g_1),
///   g_k = 1 / (1 - delta_{k+1} t - alpha_{k+1} t g_{k+1}),
/// truncated at depth = order, where the innermost tail is 1.
inline Series t_fraction(unsigned order, unsigned nvars,
                         const std::function<MultiPoly(unsigned)>& alpha,
                         const std::function<MultiPoly(unsigned)>& delta) {
    Series g = Series::one(order, nvars);
    for (unsigned k = order; k >= 1; --k) {
        Series inner = g.scaled(alpha(k));
        Series lin(order, nvars);
        lin.set_coeff(0, delta(k));
        inner += lin;
        g = reciprocal_unit(Series::one(order, nvars) - inner.shifted_up());
    }
    return g;
}

/// Exponential generating function of the unordered phylogenetic family:
/// the fixed point of  W = t + sum_{j>=2} x_{j-1} W^j / j!  with one formal
/// variable per child count.  Coefficient n+1 times (n+1)! recovers the
/// polynomial produced by multivariate_ward(n) for n < order.
inline Series phylo_egf(unsigned order) {
    if (order == 0) throw std::invalid_argument("phylo_egf: order must be positive");
    const unsigned nvars = order > 1 ? order - 1 : 1;
    Series w(order, nvars);
    const Series t = Series::identity(order, nvars);
    for (unsigned pass = 0; pass < order; ++pass) {
        Series rhs = t;
        Series power = w * w;
        Rat fact = 2;
        for (unsigned j = 2; j <= order; ++j) {
            if (j > 2) {
                power *= w;
                fact *= j;
            }
            rhs += power.scaled(Rat(1) / fact).scaled(MultiPoly::variable(nvars, j - 2));
        }
        w = rhs;
    }
    return w;
}

/// (n+1)! [t^{n+1}] of an exponential generating function in the shifted
/// normalization used by phylo_egf.
inline MultiPoly egf_extract(const Series& egf, unsigned n) {
    MultiPoly p = egf.coeff(n + 1);
    p.scale(Rat(factorial(n + 1)));
    return p;
}

/// The pair of autonomous ODEs behind the tree correspondence, checked to a
/// given order.  Inputs are series in a dormant variable u with polynomial
/// coefficients in x (index 0) and y (index 1):
///   - hat must satisfy hat' = chi(hat) (this precondition is verified);
///   - A solves A' = 1 + x hat(A), B solves B' = (1 + x B) chi(B);
///   - the claims are B = hat(A) and A' = 1 + x B.
struct CorrespondenceReport {
    bool precondition = false;
    bool composed_equal = false;
    bool derivative_equal = false;
    bool pass() const { return precondition && composed_equal && derivative_equal; }
};

inline CorrespondenceReport verify_tree_ode_correspondence(const Series& hat, const Series& chi) {
    const unsigned order = hat.order();
    const unsigned nvars = hat.nvars();
    const MultiPoly x = MultiPoly::variable(nvars, 0);
    CorrespondenceReport rep;
    rep.precondition = hat.derivative().agrees_with(compose(chi, hat), order - 1);

    const Series one = Series::one(order, nvars);
    const Series a = solve_autonomous_ode(
        [&](const Series& u) { return one + compose(hat, u).scaled(x); }, order, nvars);
    const Series b = solve_autonomous_ode(
        [&](const Series& u) { return (one + u.scaled(x)) * compose(chi, u); }, order, nvars);

    rep.composed_equal = (b == compose(hat, a));
    rep.derivative_equal = a.derivative().agrees_with(one + b.scaled(x), order - 1);
    return rep;
}

/// Named inputs for the correspondence: the main rational pair and the three
/// closed-form variants.  Variables: x has index 0, y index 1.
namespace correspondence {

inline Series geometric_hat(unsigned order) {
    Series s(order, 2);
    MultiPoly::Expo e{0, 0};
    for (unsigned j = 1; j <= order; ++j) {
        MultiPoly c(2);
        e[1] = j - 1;
        c.add_term(e, 1);
        s.set_coeff(j, c);
    }
    return s; // u / (1 - y u)
}

inline Series exponential_hat(unsigned order) {
    Series s(order, 2);
    MultiPoly::Expo e{0, 0};
    for (unsigned j = 1; j <= order; ++j) {
        MultiPoly c(2);
        e[1] = j - 1;
        c.add_term(e, Rat(1) / Rat(factorial(j)));
        s.set_coeff(j, c);
    }
    return s; // (e^{y u} - 1) / y
}

inline Series half_integer_hat(unsigned order) {
    Series s(order, 2);
    MultiPoly::Expo e{0, 0};
    for (unsigned j = 1; j <= order; ++j) {
        MultiPoly c(2);
        e[1] = j - 1;
        c.add_term(e, Rat(double_factorial(2 * j - 1)) / Rat(factorial(j)));
        s.set_coeff(j, c);
    }
    return s; // ((1 - 2 y u)^{-1/2} - 1) / y
}

inline Series logarithmic_hat(unsigned order) {
    Series s(order, 2);
    MultiPoly::Expo e{0, 0};
    for (unsigned j = 1; j <= order; ++j) {
        MultiPoly c(2);
        e[1] = j - 1;
        c.add_term(e, Rat(1, static_cast<long>(j)));
        s.set_coeff(j, c);
    }
    return s; // -log(1 - y u) / y
}

/// (1 + y s)^power.
inline Series affine_power_chi(unsigned order, unsigned power) {
    Series base(order, 2);
    base.set_coeff(0, MultiPoly::constant(2, 1));
    if (order >= 1) base.set_coeff(1, MultiPoly::variable(2, 1));
    Series out = Series::one(order, 2);
    for (unsigned i = 0; i < power; ++i) out *= base;
    return out;
}

inline Series exponential_chi(unsigned order) {
    return exp_series(Series::identity(order, 2).scaled(MultiPoly::variable(2, 1)));
}

} // namespace correspondence

} // namespace stirling
