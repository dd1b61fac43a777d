/// @file triangle.hpp
/// @brief Jagged integer triangles and their exact generators.
///
/// A Triangle stores rows 0..n_max; row n holds exactly n+1 entries.
/// Entries outside a row are implicitly zero and never materialized
/// except transiently inside matmul.

#pragma once

#include "stirling/numeric.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stirling {

enum class TriangleKind {
    StirlingCycle,
    StirlingSubset,
    AssocCycle,
    AssocSubset,
    Eulerian,
    QuasiEulerianCycle,
    QuasiEulerianSubset,
    OrderedPhylo,
    Generic,
};

inline const char* kind_name(TriangleKind k) {
    switch (k) {
        case TriangleKind::StirlingCycle: return "cycle";
        case TriangleKind::StirlingSubset: return "subset";
        case TriangleKind::AssocCycle: return "assoc-cycle";
        case TriangleKind::AssocSubset: return "assoc-subset";
        case TriangleKind::Eulerian: return "eulerian";
        case TriangleKind::QuasiEulerianCycle: return "quasi-cycle";
        case TriangleKind::QuasiEulerianSubset: return "quasi-subset";
        case TriangleKind::OrderedPhylo: return "ordered-phylo";
        case TriangleKind::Generic: return "generic";
    }
    return "generic";
}

struct Triangle {
    TriangleKind kind = TriangleKind::Generic;
    int r = 0;
    std::vector<std::vector<Int>> rows;

    int n_max() const { return static_cast<int>(rows.size()) - 1; }

    /// Entry with implicit zeros outside the stored wedge.
    const Int& at(int n, int k) const {
        static const Int zero = 0;
        if (n < 0 || n >= static_cast<int>(rows.size())) return zero;
        if (k < 0 || k > n) return zero;
        return rows[n][static_cast<size_t>(k)];
    }

    std::vector<Int> row_sums() const {
        std::vector<Int> s;
        s.reserve(rows.size());
        for (const auto& row : rows) {
            Int acc = 0;
            for (const auto& v : row) acc += v;
            s.push_back(acc);
        }
        return s;
    }
};

struct NonIntegralEntry : std::domain_error {
    explicit NonIntegralEntry(const std::string& what) : std::domain_error(what) {}
};

/// Recurrence coefficients: A(n,k) = (alpha n + beta k + gamma) A(n-1,k)
///                                 + (alphap n + betap k + gammap) A(n-1,k-1).
struct GkpCoefficients {
    Rat alpha, beta, gamma;
    Rat alphap, betap, gammap;
};

inline Triangle gkp_generate(const GkpCoefficients& c, int n_max) {
    if (n_max < 0) throw std::invalid_argument("gkp_generate: n_max < 0");
    std::vector<std::vector<Rat>> work(static_cast<size_t>(n_max) + 1);
    work[0] = {Rat(1)};
    for (int n = 1; n <= n_max; ++n) {
        auto& row = work[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Rat(0));
        const auto& prev = work[static_cast<size_t>(n) - 1];
        for (int k = 0; k <= n; ++k) {
            Rat v = 0;
            if (k <= n - 1)
                v += (c.alpha * n + c.beta * k + c.gamma) * prev[static_cast<size_t>(k)];
            if (k >= 1 && k - 1 <= n - 1)
                v += (c.alphap * n + c.betap * k + c.gammap) * prev[static_cast<size_t>(k) - 1];
            row[static_cast<size_t>(k)] = v;
        }
    }
    Triangle t;
    t.kind = TriangleKind::Generic;
    t.rows.resize(work.size());
    for (size_t n = 0; n < work.size(); ++n) {
        t.rows[n].reserve(work[n].size());
        for (const auto& q : work[n]) {
            if (denominator(q) != 1)
                throw NonIntegralEntry("gkp_generate: entry at row " + std::to_string(n) +
                                       " is " + q.str());
            t.rows[n].push_back(numerator(q));
        }
    }
    return t;
}

/// Cycle numbers of order r.
/// Recurrence: T(n,k) = (r-1)! C(n+(r-1)k-1, r-1) T(n-1,k-1) + (n+(r-1)k-1) T(n-1,k).
inline Triangle stirling_cycle_r(int r, int n_max) {
    if (r < 1) throw std::invalid_argument("stirling_cycle_r: r < 1");
    if (n_max < 0) throw std::invalid_argument("stirling_cycle_r: n_max < 0");
    Triangle t;
    t.kind = TriangleKind::StirlingCycle;
    t.r = r;
    t.rows.resize(static_cast<size_t>(n_max) + 1);
    t.rows[0] = {Int(1)};
    const Int rm1_fac = factorial(static_cast<unsigned long>(r - 1));
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Int(0));
        for (int k = 0; k <= n; ++k) {
            const long w = static_cast<long>(n) + static_cast<long>(r - 1) * k - 1;
            Int v = 0;
            if (k >= 1)
                v += rm1_fac *
                     binomial(static_cast<unsigned long>(w), static_cast<unsigned long>(r - 1)) *
                     t.at(n - 1, k - 1);
            v += Int(w) * t.at(n - 1, k);
            row[static_cast<size_t>(k)] = v;
        }
    }
    return t;
}

/// Subset numbers of order r.
/// Recurrence: T(n,k) = C(n+(r-1)k-1, r-1) T(n-1,k-1) + k T(n-1,k).
inline Triangle stirling_subset_r(int r, int n_max) {
    if (r < 1) throw std::invalid_argument("stirling_subset_r: r < 1");
    if (n_max < 0) throw std::invalid_argument("stirling_subset_r: n_max < 0");
    Triangle t;
    t.kind = TriangleKind::StirlingSubset;
    t.r = r;
    t.rows.resize(static_cast<size_t>(n_max) + 1);
    t.rows[0] = {Int(1)};
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Int(0));
        for (int k = 0; k <= n; ++k) {
            const long w = static_cast<long>(n) + static_cast<long>(r - 1) * k - 1;
            Int v = 0;
            if (k >= 1)
                v += binomial(static_cast<unsigned long>(w), static_cast<unsigned long>(r - 1)) *
                     t.at(n - 1, k - 1);
            v += Int(k) * t.at(n - 1, k);
            row[static_cast<size_t>(k)] = v;
        }
    }
    return t;
}

/// r-associated numbers indexed by element count N: every block/cycle has
/// size >= r, so entries vanish unless N >= r k.
/// Cycle:  T(N,k) = (r-1)! C(N-1,r-1) T(N-r,k-1) + (N-1) T(N-1,k).
/// Subset: T(N,k) = C(N-1,r-1) T(N-r,k-1) + k T(N-1,k).
inline Triangle r_associated(TriangleKind kind, int r, int n_max) {
    if (kind != TriangleKind::AssocCycle && kind != TriangleKind::AssocSubset)
        throw std::invalid_argument("r_associated: kind must be assoc-cycle or assoc-subset");
    if (r < 1) throw std::invalid_argument("r_associated: r < 1");
    if (n_max < 0) throw std::invalid_argument("r_associated: n_max < 0");
    const bool cycle = kind == TriangleKind::AssocCycle;
    const Int rm1_fac = factorial(static_cast<unsigned long>(r - 1));
    Triangle t;
    t.kind = kind;
    t.r = r;
    t.rows.resize(static_cast<size_t>(n_max) + 1);
    t.rows[0] = {Int(1)};
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Int(0));
        for (int k = 0; r * k <= n; ++k) {
            Int v = 0;
            if (k >= 1 && n - r >= 0) {
                Int c = binomial(static_cast<unsigned long>(n - 1),
                                 static_cast<unsigned long>(r - 1));
                if (cycle) c *= rm1_fac;
                v += c * t.at(n - r, k - 1);
            }
            v += (cycle ? Int(n - 1) : Int(k)) * t.at(n - 1, k);
            row[static_cast<size_t>(k)] = v;
        }
    }
    return t;
}

/// Eulerian numbers of order r.
/// Recurrence: T(n,k) = (k+1) T(n-1,k) + (rn - k - (r-1)) T(n-1,k-1).
inline Triangle eulerian_r(int r, int n_max) {
    if (r < 1) throw std::invalid_argument("eulerian_r: r < 1");
    GkpCoefficients c{Rat(0), Rat(1), Rat(1), Rat(r), Rat(-1), Rat(-(r - 1))};
    Triangle t = gkp_generate(c, n_max);
    t.kind = TriangleKind::Eulerian;
    t.r = r;
    return t;
}

inline Triangle reverse_rows(const Triangle& t) {
    Triangle out;
    out.kind = TriangleKind::Generic;
    out.r = t.r;
    out.rows.resize(t.rows.size());
    for (size_t n = 0; n < t.rows.size(); ++n)
        out.rows[n].assign(t.rows[n].rbegin(), t.rows[n].rend());
    return out;
}

/// B_xi(n,k) = C(n,k) xi^(n-k). Requires integral entries.
inline Triangle binomial_matrix(const Rat& xi, int n_max) {
    if (n_max < 0) throw std::invalid_argument("binomial_matrix: n_max < 0");
    Triangle t;
    t.kind = TriangleKind::Generic;
    t.rows.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.reserve(static_cast<size_t>(n) + 1);
        Rat p = 1;
        std::vector<Rat> powers(static_cast<size_t>(n) + 1);
        for (int e = 0; e <= n; ++e) {
            powers[static_cast<size_t>(e)] = p;
            p *= xi;
        }
        for (int k = 0; k <= n; ++k) {
            Rat v = Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
                    powers[static_cast<size_t>(n - k)];
            if (denominator(v) != 1)
                throw NonIntegralEntry("binomial_matrix: non-integral entry for xi = " + xi.str());
            row.push_back(numerator(v));
        }
    }
    return t;
}

/// Lower-triangular product; both factors must cover rows 0..n_max(a).
inline Triangle matmul(const Triangle& a, const Triangle& b) {
    if (b.n_max() < a.n_max())
        throw std::invalid_argument("matmul: right factor has too few rows");
    Triangle out;
    out.kind = TriangleKind::Generic;
    out.r = a.r;
    out.rows.resize(a.rows.size());
    for (int n = 0; n <= a.n_max(); ++n) {
        auto& row = out.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Int(0));
        for (int k = 0; k <= n; ++k) {
            Int acc = 0;
            for (int i = k; i <= n; ++i) acc += a.at(n, i) * b.at(i, k);
            row[static_cast<size_t>(k)] = acc;
        }
    }
    return out;
}

/// Row-reversed triangle times B_{-1}; for r = 2 this recovers the Eulerian
/// triangles; for r = 1 negative entries appear.
inline Triangle quasi_eulerian(TriangleKind kind, int r, int n_max) {
    Triangle base;
    TriangleKind out_kind;
    if (kind == TriangleKind::StirlingCycle || kind == TriangleKind::QuasiEulerianCycle) {
        base = stirling_cycle_r(r, n_max);
        out_kind = TriangleKind::QuasiEulerianCycle;
    } else if (kind == TriangleKind::StirlingSubset || kind == TriangleKind::QuasiEulerianSubset) {
        base = stirling_subset_r(r, n_max);
        out_kind = TriangleKind::QuasiEulerianSubset;
    } else {
        throw std::invalid_argument("quasi_eulerian: kind must be cycle or subset flavored");
    }
    Triangle out = matmul(reverse_rows(base), binomial_matrix(Rat(-1), n_max));
    out.kind = out_kind;
    out.r = r;
    return out;
}

/// Closed forms for the main diagonal.
/// Cycle: (rn)! / (r^n n!).  Subset: (rn)! / ((r!)^n n!).
inline Int diagonal_formula(TriangleKind kind, int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("diagonal_formula: bad arguments");
    const Int num = factorial(static_cast<unsigned long>(r) * static_cast<unsigned long>(n));
    Int den;
    if (kind == TriangleKind::StirlingCycle)
        den = pow_int(Int(r), static_cast<unsigned long>(n));
    else if (kind == TriangleKind::StirlingSubset)
        den = pow_int(factorial(static_cast<unsigned long>(r)), static_cast<unsigned long>(n));
    else
        throw std::invalid_argument("diagonal_formula: kind must be cycle or subset");
    den *= factorial(static_cast<unsigned long>(n));
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw std::domain_error("diagonal_formula: non-exact division");
    return q;
}

/// Ordered phylogenetic triangle: D(n,k) = ((n+k)!/k!) C(n-1,k-1), D(0,0) = 1.
inline Triangle ordered_phylo_triangle(int n_max) {
    if (n_max < 0) throw std::invalid_argument("ordered_phylo_triangle: n_max < 0");
    Triangle t;
    t.kind = TriangleKind::OrderedPhylo;
    t.rows.resize(static_cast<size_t>(n_max) + 1);
    t.rows[0] = {Int(1)};
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Int(0));
        for (int k = 1; k <= n; ++k) {
            Int v = factorial(static_cast<unsigned long>(n + k)) /
                    factorial(static_cast<unsigned long>(k));
            v *= binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k - 1));
            row[static_cast<size_t>(k)] = v;
        }
    }
    return t;
}

} // namespace stirling
