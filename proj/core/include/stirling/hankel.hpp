/// @file hankel.hpp
/// @brief Coefficientwise Hankel total positivity for polynomial sequences.

#pragma once

#include "stirling/matrix.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/tp.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace stirling {

/// Exact polynomial minor; cofactor expansion for order <= 4, fraction-free
/// elimination above that.
inline IntPoly poly_determinant(const PolyMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("poly_determinant: not square");
    const int n = m.rows;
    if (n == 0) return IntPoly(std::vector<Int>{Int(1)});
    if (n <= 4) {
        if (n == 1) return m.at(0, 0);
        IntPoly det;
        std::vector<int> rows(static_cast<size_t>(n) - 1), cols(static_cast<size_t>(n) - 1);
        for (int i = 1; i < n; ++i) rows[static_cast<size_t>(i - 1)] = i;
        for (int j = 0; j < n; ++j) {
            if (m.at(0, j).is_zero()) continue;
            int c = 0;
            for (int jj = 0; jj < n; ++jj)
                if (jj != j) cols[static_cast<size_t>(c++)] = jj;
            IntPoly term = m.at(0, j) * poly_determinant(m.submatrix(rows, cols));
            if (j % 2 == 0)
                det += term;
            else
                det -= term;
        }
        return det;
    }
    return bareiss_determinant(m);
}

inline IntPoly poly_minor(const PolyMat& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    return poly_determinant(m.submatrix(rows, cols));
}

struct HankelWitness {
    std::vector<int> rows, cols;
    IntPoly minor;
    int negative_coeff_index = -1;
};

struct HankelReport {
    TPVerdict verdict = TPVerdict::TotallyPositive;
    int size = 0;
    int max_order_checked = 0;
    long minors_evaluated = 0;
    std::optional<HankelWitness> witness;
};

inline std::optional<int> first_negative_coeff(const IntPoly& p) {
    for (size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i] < 0) return static_cast<int>(i);
    return std::nullopt;
}

/// Checks every minor of order <= max_order of the size x size Hankel matrix
/// of `polys` for nonnegative coefficients; same deterministic enumeration
/// order as find_negative_minor.
inline HankelReport coeffwise_hankel_tp(const std::vector<IntPoly>& polys, int size,
                                        int max_order) {
    PolyMat h = hankel_of_polys(polys, size);
    HankelReport rep;
    rep.size = size;
    rep.max_order_checked = std::min(max_order, size);
    for (int order = 1; order <= rep.max_order_checked; ++order) {
        std::vector<int> rows(static_cast<size_t>(order));
        for (int i = 0; i < order; ++i) rows[static_cast<size_t>(i)] = i;
        do {
            std::vector<int> cols(static_cast<size_t>(order));
            for (int i = 0; i < order; ++i) cols[static_cast<size_t>(i)] = i;
            do {
                IntPoly d = poly_minor(h, rows, cols);
                ++rep.minors_evaluated;
                if (auto neg = first_negative_coeff(d)) {
                    rep.verdict = TPVerdict::NotTP;
                    rep.witness = HankelWitness{rows, cols, std::move(d), *neg};
                    return rep;
                }
            } while (detail::next_subset(cols, size));
        } while (detail::next_subset(rows, size));
    }
    return rep;
}

} // namespace stirling
