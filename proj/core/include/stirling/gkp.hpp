/// @file gkp.hpp
/// @brief Binomial transforms of two-term triangle recurrences.
///
/// If A satisfies A(n,k) = (alpha n + beta k + gamma) A(n-1,k)
///                        + (alphap n + betap k + gammap) A(n-1,k-1),
/// then C = A B_xi satisfies a three-term recurrence whose coefficients are
/// again linear forms in n and k; the C(n-1,k+1) term vanishes exactly at
/// xi = -beta/betap.

#pragma once

#include "stirling/numeric.hpp"
#include "stirling/triangle.hpp"

#include <stdexcept>

namespace stirling {

struct LinearForm {
    Rat n_coeff, k_coeff, constant;

    Rat operator()(long n, long k) const { return n_coeff * n + k_coeff * k + constant; }
    bool operator==(const LinearForm&) const = default;
};

struct DegenerateTransform : std::domain_error {
    explicit DegenerateTransform(const std::string& what) : std::domain_error(what) {}
};

/// C(n,k) = same_k(n,k) C(n-1,k) + down_k(n,k) C(n-1,k-1) + up_k(n,k) C(n-1,k+1).
struct ThreeTermRecurrence {
    LinearForm same_k;
    LinearForm down_k;
    LinearForm up_k;
    GkpCoefficients base;
    Rat xi;
};

inline ThreeTermRecurrence gkp_binomial_transform(const GkpCoefficients& c, const Rat& xi) {
    ThreeTermRecurrence t;
    t.base = c;
    t.xi = xi;
    t.same_k = {c.alpha + xi * c.alphap, c.beta + 2 * xi * c.betap,
                c.gamma + xi * (c.betap + c.gammap)};
    t.down_k = {c.alphap, c.betap, c.gammap};
    const Rat u = xi * (c.beta + xi * c.betap);
    t.up_k = {Rat(0), u, u};
    return t;
}

/// Applying B_eta on top of B_xi is applying B_(xi+eta).
inline ThreeTermRecurrence then_transform(const ThreeTermRecurrence& t, const Rat& eta) {
    return gkp_binomial_transform(t.base, t.xi + eta);
}

/// The xi killing the C(n-1,k+1) term.
inline Rat vanishing_xi(const GkpCoefficients& c) {
    if (c.betap == 0)
        throw DegenerateTransform("vanishing_xi: betap = 0, no finite xi kills the third term");
    return -c.beta / c.betap;
}

/// Exact check that gkp_generate(c) * B_xi satisfies the transformed
/// recurrence on rows 1..n_max.
inline bool verify_transformed_recurrence(const GkpCoefficients& c, const Rat& xi, int n_max) {
    const Triangle a = gkp_generate(c, n_max);
    const Triangle b = binomial_matrix(xi, n_max);
    const Triangle prod = matmul(a, b);
    const ThreeTermRecurrence t = gkp_binomial_transform(c, xi);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            Rat expect = t.same_k(n, k) * Rat(prod.at(n - 1, k)) +
                         t.down_k(n, k) * Rat(prod.at(n - 1, k - 1)) +
                         t.up_k(n, k) * Rat(prod.at(n - 1, k + 1));
            if (expect != Rat(prod.at(n, k))) return false;
        }
    return true;
}

inline GkpCoefficients eulerian2_coeffs() {
    return {Rat(0), Rat(1), Rat(1), Rat(2), Rat(-1), Rat(-1)};
}

/// Row-reversed-and-shifted variant of the second-order Eulerian triangle.
inline GkpCoefficients flipped_eulerian2_coeffs() {
    return {Rat(1), Rat(1), Rat(0), Rat(1), Rat(-1), Rat(0)};
}

} // namespace stirling
