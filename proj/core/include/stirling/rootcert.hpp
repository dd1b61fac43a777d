/// @file rootcert.hpp
/// @brief Row-generating polynomials and exact root certificates.
///
/// Real-rootedness, root location and interlacing are certified purely over
/// the rationals: Sturm counts place all roots of q_n = p_n/x inside (-1,0),
/// gcd(q_n, q_n') certifies simplicity, and interlacing with q_{n-1} is
/// certified by refining isolating intervals of q_{n-1} until they are free
/// of q_n roots and checking strict sign alternation of q_n across them.

#pragma once

#include "stirling/numeric.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/sturm.hpp"
#include "stirling/triangle.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stirling {

/// Row-generating polynomial sum_k T(n,k) x^k.
inline IntPoly row_poly(const Triangle& t, int n) {
    if (n < 0 || n > t.n_max()) throw std::out_of_range("row_poly: row out of range");
    IntPoly p;
    p.c = t.rows[static_cast<size_t>(n)];
    p.trim();
    return p;
}

enum class RootFamily { Cycle2, Subset2, OrderedPhylo };

inline const char* root_family_name(RootFamily f) {
    switch (f) {
        case RootFamily::Cycle2: return "cycle2";
        case RootFamily::Subset2: return "subset2";
        case RootFamily::OrderedPhylo: return "ordered-phylo";
    }
    return "?";
}

inline Triangle root_family_triangle(RootFamily f, int n_max) {
    switch (f) {
        case RootFamily::Cycle2: return stirling_cycle_r(2, n_max);
        case RootFamily::Subset2: return stirling_subset_r(2, n_max);
        case RootFamily::OrderedPhylo: return ordered_phylo_triangle(n_max);
    }
    throw std::invalid_argument("root_family_triangle: bad family");
}

struct RootCertificate {
    int n = 0;
    bool zero_root = false;           ///< p_n(0) == 0 so q_n = p_n/x is a polynomial
    bool all_real = false;            ///< deg(q_n) distinct real roots, all in (lo, hi)
    Rat lo{-1}, hi{0};
    bool simple = false;              ///< gcd(q_n, q_n') is constant
    bool interlaces_previous = false; ///< roots of q_{n-1} strictly interlace those of q_n
    std::vector<int> sturm_counts;    ///< {count in (lo,hi), count over the whole line}
    std::string failure;              ///< empty when the certificate passes

    bool pass() const { return failure.empty(); }
};

namespace detail {

/// Moves `from` toward `toward` until avoid() is nonzero there and no root
/// counted by `keep` lies strictly between `from` and the returned point.
inline Rat nudge_inward(const IntPoly& avoid, const SturmSequence& keep, const Rat& from,
                        const Rat& toward) {
    Rat x = from + (toward - from) / 2;
    while (avoid.evaluate<Rat>(x) == 0 ||
           keep.count_open(std::min(from, x), std::max(from, x)) > 0)
        x = from + (x - from) / 2;
    return x;
}

} // namespace detail

/// Certifies that the roots of `prev` strictly interlace those of `cur`
/// inside (lo, hi). Requires deg(cur) = deg(prev) + 1 and that both are
/// already certified real-rooted with all roots in (lo, hi).
inline bool certify_interlacing(const IntPoly& prev, const IntPoly& cur, const Rat& lo,
                                const Rat& hi, std::string* why = nullptr) {
    const auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (prev.degree() + 1 != cur.degree()) return fail("degree step is not one");
    if (prev.degree() == 0) return true;
    if (poly_gcd(prev, cur).degree() != 0) return fail("common root with previous row");
    if (cur.evaluate<Rat>(lo) == 0 || cur.evaluate<Rat>(hi) == 0)
        return fail("current polynomial vanishes at an interval endpoint");

    SturmSequence sprev(prev);
    SturmSequence scur(cur);
    const IntPoly both = prev * cur;
    auto intervals = isolate_roots(prev, lo, hi);
    if (static_cast<long>(intervals.size()) != prev.degree())
        return fail("previous row is not fully isolated in the interval");

    std::vector<int> signs;
    signs.reserve(intervals.size() + 2);
    signs.push_back(sign_of(cur.evaluate<Rat>(lo)));
    for (auto& iv : intervals) {
        Rat a = detail::nudge_inward(cur, sprev, iv.lo, iv.hi);
        Rat b = detail::nudge_inward(cur, sprev, iv.hi, a);
        while (scur.count_open(a, b) > 0) {
            Rat mid = nonroot_split_point(both, a, b);
            if (sprev.count_open(a, mid) == 1)
                b = mid;
            else
                a = mid;
        }
        signs.push_back(sign_of(cur.evaluate<Rat>(a)));
    }
    signs.push_back(sign_of(cur.evaluate<Rat>(hi)));
    for (size_t i = 0; i + 1 < signs.size(); ++i)
        if (signs[i] == 0 || signs[i + 1] == 0 || signs[i] != -signs[i + 1])
            return fail("sign of current row does not alternate across previous roots");
    return true;
}

/// Full certificate chain for rows 1..n_max of one family: each row poly has
/// 0 as a root, and q_n = p_n/x has only simple real roots in (-1,0) that are
/// strictly interlaced by those of q_{n-1}.
inline std::vector<RootCertificate> certify_roots(RootFamily family, int n_max) {
    const Triangle t = root_family_triangle(family, n_max);
    const Rat lo(-1), hi(0);
    std::vector<RootCertificate> out;
    out.reserve(static_cast<size_t>(n_max));
    IntPoly prev_q;
    bool prev_ok = false;
    for (int n = 1; n <= n_max; ++n) {
        RootCertificate cert;
        cert.n = n;
        cert.lo = lo;
        cert.hi = hi;
        const IntPoly p = row_poly(t, n);
        if (p.is_zero() || p.coeff(0) != 0) {
            cert.failure = "row polynomial does not vanish at 0";
            out.push_back(cert);
            prev_ok = false;
            continue;
        }
        cert.zero_root = true;
        const IntPoly q = p.shifted_down();
        const long deg = q.degree();
        if (deg == 0) {
            cert.all_real = cert.simple = true;
            cert.interlaces_previous = true;
            cert.sturm_counts = {0, 0};
        } else {
            if (q.evaluate<Rat>(lo) == 0 || q.evaluate<Rat>(hi) == 0) {
                cert.failure = "root at an interval endpoint";
                out.push_back(cert);
                prev_ok = false;
                continue;
            }
            SturmSequence sturm(q);
            const int inside = sturm.count_open(lo, hi);
            const int total = sturm.count_all_real();
            cert.sturm_counts = {inside, total};
            cert.all_real = (inside == deg && total == deg);
            cert.simple = (poly_gcd(q, q.derivative()).degree() == 0);
            std::string why;
            if (!prev_ok)
                cert.interlaces_previous = (n == 1);
            else
                cert.interlaces_previous = certify_interlacing(prev_q, q, lo, hi, &why);
            if (!cert.all_real)
                cert.failure = "not all roots are real and inside the interval";
            else if (!cert.simple)
                cert.failure = "repeated root";
            else if (!cert.interlaces_previous)
                cert.failure = why.empty() ? "interlacing with previous row failed" : why;
        }
        out.push_back(cert);
        prev_q = q;
        prev_ok = out.back().pass();
    }
    return out;
}

enum class HatKind { Cycle, Subset };

/// One step of the shifted row-polynomial recurrences:
///   cycle:  q_n = [(n+2)x + n+1] q_{n-1} + x(x+1) q_{n-1}'
///   subset: q_n = [(n+2)x + 1]   q_{n-1} + x(x+1) q_{n-1}'
/// where q_n denotes the degree-n member of the family (q_0 = 1).
inline IntPoly hat_recurrence_step(const IntPoly& prev, long n, HatKind kind) {
    IntPoly lin;
    lin.c = {kind == HatKind::Cycle ? Int(n + 1) : Int(1), Int(n + 2)};
    IntPoly x_xp1;
    x_xp1.c = {Int(0), Int(1), Int(1)};
    return lin * prev + x_xp1 * prev.derivative();
}

/// Values of the degree-n shifted row polynomial at 0 and at -1:
///   cycle:  (n+1)!  and (-1)^n
///   subset: 1       and (-1)^n (n+1)!
inline std::pair<Int, Int> hat_boundary_expected(HatKind kind, long n) {
    const Int f = factorial(static_cast<unsigned long>(n + 1));
    const Int s = (n % 2 == 0) ? Int(1) : Int(-1);
    if (kind == HatKind::Cycle) return {f, s};
    return {Int(1), s * f};
}

/// Subdiagonal entry T(n, n-1) of the order-r cycle triangle, in closed form:
/// (r(n-1)+1)! / ((r+1) r^{n-2} (n-2)!).  Requires r >= 1, n >= 2.
inline Int subdiagonal_first(long r, long n) {
    if (r < 1 || n < 2) throw std::invalid_argument("subdiagonal_first: need r >= 1, n >= 2");
    const Int num = factorial(static_cast<unsigned long>(r * (n - 1) + 1));
    const Int den = Int(r + 1) * pow_int(Int(r), static_cast<unsigned long>(n - 2)) *
                    factorial(static_cast<unsigned long>(n - 2));
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw std::logic_error("subdiagonal_first: non-exact division");
    return q;
}

/// Second subdiagonal entry T(n, n-2) of the order-r cycle triangle:
/// (r(n-2)+2)! (r(r+2)(n-1)+2) / (2 (r+1)^2 (r+2) r^{n-3} (n-3)!).
/// Requires r >= 1, n >= 3.
inline Int subdiagonal_second(long r, long n) {
    if (r < 1 || n < 3) throw std::invalid_argument("subdiagonal_second: need r >= 1, n >= 3");
    const Int num = factorial(static_cast<unsigned long>(r * (n - 2) + 2)) *
                    Int(r * (r + 2) * (n - 1) + 2);
    const Int den = Int(2) * Int(r + 1) * Int(r + 1) * Int(r + 2) *
                    pow_int(Int(r), static_cast<unsigned long>(n - 3)) *
                    factorial(static_cast<unsigned long>(n - 3));
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw std::logic_error("subdiagonal_second: non-exact division");
    return q;
}

/// Both closed-form subdiagonal entries (T(n,n-1), T(n,n-2)); n >= 3.
inline std::pair<Int, Int> subdiagonal_closed_forms(long r, long n) {
    return {subdiagonal_first(r, n), subdiagonal_second(r, n)};
}

/// Exact sign of the discriminant
///   D = ((n-2)! T(n,n-1))^2 - 2 (n-1)! (n-3)! T(n,n) T(n,n-2)
/// of the quadratic obtained by differentiating row n of T away to degree 2.
inline int discriminant_sign_of(const Triangle& t, long n) {
    if (n < 3) throw std::invalid_argument("discriminant_sign_of: need n >= 3");
    if (n > t.n_max()) throw std::out_of_range("discriminant_sign_of: row out of range");
    const int ni = static_cast<int>(n);
    const Int b = factorial(static_cast<unsigned long>(n - 2)) * t.at(ni, ni - 1);
    const Int ac = Int(2) * factorial(static_cast<unsigned long>(n - 1)) *
                   factorial(static_cast<unsigned long>(n - 3)) * t.at(ni, ni) *
                   t.at(ni, ni - 2);
    return sign_of(Int(b * b - ac));
}

/// Discriminant sign for the order-r cycle triangle.
inline int discriminant_sign(long r, long n) {
    if (r < 1 || n < 3) throw std::invalid_argument("discriminant_sign: need r >= 1, n >= 3");
    return discriminant_sign_of(stirling_cycle_r(static_cast<int>(r), static_cast<int>(n)), n);
}

struct LogConcavityReport {
    bool all_pass = true;
    bool support_contiguous = true;
    std::vector<std::pair<int, int>> violations; ///< (n, k) with T(n,k)^2 < T(n,k-1) T(n,k+1)
};

/// Checks T(n,k)^2 >= T(n,k-1) T(n,k+1) over the (contiguous) support of
/// every row n <= n_max.
inline LogConcavityReport log_concave_rows(const Triangle& t, int n_max) {
    if (n_max > t.n_max()) throw std::out_of_range("log_concave_rows: row out of range");
    LogConcavityReport rep;
    for (int n = 0; n <= n_max; ++n) {
        const auto& row = t.rows[static_cast<size_t>(n)];
        int lo = -1, hi = -1;
        for (int k = 0; k < static_cast<int>(row.size()); ++k)
            if (row[static_cast<size_t>(k)] != 0) {
                if (lo < 0) lo = k;
                hi = k;
            }
        for (int k = lo; k >= 0 && k <= hi; ++k)
            if (row[static_cast<size_t>(k)] == 0) rep.support_contiguous = false;
        for (int k = lo + 1; k >= 1 && k < hi; ++k) {
            const Int& mid = row[static_cast<size_t>(k)];
            if (mid * mid < row[static_cast<size_t>(k - 1)] * row[static_cast<size_t>(k + 1)]) {
                rep.all_pass = false;
                rep.violations.emplace_back(n, k);
            }
        }
    }
    if (!rep.support_contiguous) rep.all_pass = false;
    return rep;
}

} // namespace stirling
