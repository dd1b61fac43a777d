/// @file aberth.hpp
/// @brief Simultaneous root finding (Aberth iteration) in multiprecision
/// floating point, cross-checked against exact Sturm counts.
///
/// Numerics never certify anything here: every run recomputes the number of
/// real roots exactly and refuses to return when the numeric classification
/// disagrees. Precision defaults to 256 bits and is doubled once on failure.

#pragma once

#include "stirling/numeric.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/sturm.hpp"
#include "stirling/triangle.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirling {

using Mpf = boost::multiprecision::mpfr_float;

inline unsigned digits_for_bits(unsigned bits) {
    return static_cast<unsigned>(static_cast<double>(bits) * 0.30103) + 4;
}

/// Scoped default-precision switch for mpfr_float (decimal digits backend).
struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned bits) : saved(Mpf::default_precision()) {
        Mpf::default_precision(digits_for_bits(bits));
    }
    ~PrecisionGuard() { Mpf::default_precision(saved); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
};

struct MpComplex {
    Mpf re, im;
};

inline MpComplex operator+(const MpComplex& a, const MpComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline MpComplex operator-(const MpComplex& a, const MpComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Mpf abs2(const MpComplex& a) { return a.re * a.re + a.im * a.im; }
inline Mpf cabs(const MpComplex& a) { return sqrt(abs2(a)); }
inline MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    const Mpf d = abs2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

struct NumericRoot {
    Mpf re, im;
    Mpf residual; ///< |p(root)| / l1(coefficients)
};

struct NumericRoots {
    long zero_multiplicity = 0;      ///< power of x divided out before iterating
    std::vector<NumericRoot> roots;  ///< nonzero roots, sorted by (angle, modulus)
    unsigned precision_bits = 0;     ///< precision that produced the result
    long real_count = 0;             ///< numeric roots with |Im| below the tolerance
    long sturm_real_count = 0;       ///< exact count for the deflated polynomial
};

struct AberthOptions {
    unsigned precision_bits = 256;
    int max_iterations = 512;
    bool cross_check_real_count = true;
};

namespace detail {

struct AberthAttempt {
    std::vector<NumericRoot> roots;
    bool converged = false;
    bool residuals_ok = false;
    long real_count = 0;
};

inline AberthAttempt aberth_attempt(const IntPoly& q, unsigned bits, int max_iterations) {
    PrecisionGuard guard(bits);
    const long deg = q.degree();
    std::vector<MpComplex> coeff(static_cast<size_t>(deg) + 1);
    Mpf l1 = 0;
    for (long i = 0; i <= deg; ++i) {
        coeff[static_cast<size_t>(i)] = {Mpf(q.c[static_cast<size_t>(i)].str()), Mpf(0)};
        l1 += abs(coeff[static_cast<size_t>(i)].re);
    }
    std::vector<MpComplex> dcoeff(static_cast<size_t>(deg));
    for (long i = 1; i <= deg; ++i)
        dcoeff[static_cast<size_t>(i - 1)] = {coeff[static_cast<size_t>(i)].re * i, Mpf(0)};
    std::vector<Mpf> acoeff(static_cast<size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) acoeff[static_cast<size_t>(i)] = abs(coeff[static_cast<size_t>(i)].re);

    const auto horner = [](const std::vector<MpComplex>& cs, const MpComplex& z) {
        MpComplex acc{Mpf(0), Mpf(0)};
        for (size_t i = cs.size(); i-- > 0;) acc = acc * z + cs[i];
        return acc;
    };

    // Fujiwara upper bound for the root moduli
    const Mpf alead = cabs(coeff[static_cast<size_t>(deg)]);
    Mpf radius = 0;
    for (long k = 1; k <= deg; ++k) {
        Mpf t = cabs(coeff[static_cast<size_t>(deg - k)]) / alead;
        if (k == deg) t /= 2;
        if (t > 0) t = pow(t, Mpf(1) / k);
        if (t > radius) radius = t;
    }
    radius *= 2;
    if (radius == 0) radius = 1;

    const Mpf two_pi = 8 * atan(Mpf(1));
    std::vector<MpComplex> z(static_cast<size_t>(deg));
    for (long i = 0; i < deg; ++i) {
        const Mpf theta = two_pi * (Mpf(i) + Mpf(3) / 10) / deg + Mpf(2) / 5;
        z[static_cast<size_t>(i)] = {radius * cos(theta), radius * sin(theta)};
    }

    const Mpf step_tol = ldexp(Mpf(1), -static_cast<long>(bits) + 24);
    // Backward-stable stop: once |p(z)| is below the evaluation noise floor
    // (relative to the majorant sum |c_i| |z|^i) the point cannot improve at
    // this precision.
    const Mpf noise_tol = ldexp(Mpf(1), -static_cast<long>(bits) + 16);
    std::vector<bool> frozen(static_cast<size_t>(deg), false);
    AberthAttempt out;
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool all_done = true;
        for (long i = 0; i < deg; ++i) {
            auto& zi = z[static_cast<size_t>(i)];
            if (frozen[static_cast<size_t>(i)]) continue;
            const MpComplex pv = horner(coeff, zi);
            if (pv.re == 0 && pv.im == 0) {
                frozen[static_cast<size_t>(i)] = true;
                continue;
            }
            const Mpf az = cabs(zi);
            Mpf majorant = 0;
            for (size_t k = acoeff.size(); k-- > 0;) majorant = majorant * az + acoeff[k];
            if (cabs(pv) <= noise_tol * majorant) {
                frozen[static_cast<size_t>(i)] = true;
                continue;
            }
            const MpComplex dv = horner(dcoeff, zi);
            if (dv.re == 0 && dv.im == 0) {
                zi.re += step_tol + 1;
                all_done = false;
                continue;
            }
            const MpComplex newton = pv / dv;
            MpComplex s{Mpf(0), Mpf(0)};
            for (long j = 0; j < deg; ++j) {
                if (j == i) continue;
                const MpComplex d = zi - z[static_cast<size_t>(j)];
                const Mpf n2 = abs2(d);
                if (n2 == 0) continue;
                s.re += d.re / n2;
                s.im -= d.im / n2;
            }
            const MpComplex denom = MpComplex{Mpf(1), Mpf(0)} - newton * s;
            const MpComplex w = (abs2(denom) == 0) ? newton : newton / denom;
            zi = zi - w;
            if (cabs(w) <= step_tol * (1 + cabs(zi)))
                frozen[static_cast<size_t>(i)] = true;
            else
                all_done = false;
        }
        if (all_done) {
            out.converged = true;
            break;
        }
    }

    const Mpf res_tol = ldexp(Mpf(1), -64);
    const Mpf real_tol = ldexp(Mpf(1), -static_cast<long>(bits) / 2);
    out.residuals_ok = true;
    out.roots.reserve(static_cast<size_t>(deg));
    for (long i = 0; i < deg; ++i) {
        const auto& zi = z[static_cast<size_t>(i)];
        NumericRoot root{zi.re, zi.im, cabs(horner(coeff, zi)) / l1};
        if (!(root.residual <= res_tol)) out.residuals_ok = false;
        if (abs(root.im) <= real_tol * (1 + cabs(zi))) ++out.real_count;
        out.roots.push_back(std::move(root));
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const NumericRoot& a, const NumericRoot& b) {
        const Mpf ta = atan2(a.im, a.re), tb = atan2(b.im, b.re);
        if (ta != tb) return ta < tb;
        return a.re * a.re + a.im * a.im < b.re * b.re + b.im * b.im;
    });
    return out;
}

} // namespace detail

/// All roots of p: the multiplicity of the root 0 is split off exactly, the
/// rest are found by Aberth iteration. Fails (after one precision doubling)
/// if iteration stalls, a residual exceeds 2^-64 relative to the coefficient
/// 1-norm, or the numeric real-root count disagrees with the Sturm count.
inline NumericRoots numeric_roots(const IntPoly& p, const AberthOptions& opt = {}) {
    if (p.is_zero()) throw std::invalid_argument("numeric_roots: zero polynomial");
    IntPoly q = p;
    NumericRoots out;
    while (q.degree() >= 1 && q.coeff(0) == 0) {
        q = q.shifted_down();
        ++out.zero_multiplicity;
    }
    if (q.degree() == 0) {
        out.precision_bits = opt.precision_bits;
        return out;
    }
    out.sturm_real_count = count_real_roots(q);
    std::string last_error;
    for (unsigned bits = opt.precision_bits, attempt = 0; attempt < 2; ++attempt, bits *= 2) {
        auto res = detail::aberth_attempt(q, bits, opt.max_iterations);
        if (!res.converged) {
            last_error = "iteration did not converge";
            continue;
        }
        if (!res.residuals_ok) {
            last_error = "residual above threshold";
            continue;
        }
        if (opt.cross_check_real_count && res.real_count != out.sturm_real_count) {
            last_error = "numeric real-root count disagrees with Sturm count";
            continue;
        }
        out.roots = std::move(res.roots);
        out.precision_bits = bits;
        out.real_count = res.real_count;
        return out;
    }
    throw std::runtime_error("numeric_roots: " + last_error + " at " +
                             std::to_string(opt.precision_bits) + " and doubled bits");
}

struct RootCloudRecord {
    int r = 0, n = 0;
    bool zero_root = false; ///< exact root at the origin, recorded as a flag row
    Mpf re, im;             ///< raw root
    Mpf norm_re, norm_im;   ///< n^(r-2) * root
    Mpf residual;
};

enum class CloudKind { Cycle, Subset };

inline const char* cloud_kind_name(CloudKind k) {
    return k == CloudKind::Cycle ? "cycle" : "subset";
}

/// Root clouds of the order-r row polynomials for each requested n, scaled by
/// n^(r-2). The root 0 leads each group as an exact zero record.
inline std::vector<RootCloudRecord> normalized_root_cloud(CloudKind kind, int r,
                                                          const std::vector<int>& n_list,
                                                          const AberthOptions& opt = {}) {
    if (r < 1) throw std::invalid_argument("normalized_root_cloud: need r >= 1");
    std::vector<RootCloudRecord> out;
    int n_top = 0;
    for (int n : n_list) n_top = std::max(n_top, n);
    const Triangle t = kind == CloudKind::Cycle ? stirling_cycle_r(r, n_top)
                                                : stirling_subset_r(r, n_top);
    for (int n : n_list) {
        if (n < 1) throw std::invalid_argument("normalized_root_cloud: need n >= 1");
        IntPoly p;
        p.c = t.rows[static_cast<size_t>(n)];
        p.trim();
        const NumericRoots roots = numeric_roots(p, opt);
        PrecisionGuard guard(roots.precision_bits);
        const Mpf scale = pow(Mpf(n), r - 2);
        for (long i = 0; i < roots.zero_multiplicity; ++i)
            out.push_back({r, n, true, Mpf(0), Mpf(0), Mpf(0), Mpf(0), Mpf(0)});
        for (const auto& root : roots.roots)
            out.push_back({r, n, false, root.re, root.im, scale * root.re, scale * root.im,
                           root.residual});
    }
    return out;
}

} // namespace stirling
