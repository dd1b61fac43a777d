/// @file numeric.hpp
/// @brief Exact arbitrary-precision integer and rational scalars.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace stirling {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Thrown when a request exceeds a hard resource cap (enumeration sizes,
/// matrix dimensions).  Callers distinguish this from a wrong answer.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

/// n!! = n (n-2) (n-4) ...
inline Int double_factorial(unsigned long n) {
    Int r;
    mpz_2fac_ui(r.backend().data(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

/// Binomial with big upper index, small lower index.
inline Int binomial(const Int& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= n - Int(i);
    return num / factorial(k);
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Exact conversion; throws unless q is an integer.
inline Int to_integer(const Rat& q) {
    if (denominator(q) != 1)
        throw std::domain_error("to_integer: non-integral rational " + q.str());
    return numerator(q);
}

} // namespace stirling
