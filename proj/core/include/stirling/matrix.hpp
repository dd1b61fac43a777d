/// @file matrix.hpp
/// @brief Dense exact matrices and structured constructors.

#pragma once

#include "stirling/numeric.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/triangle.hpp"

#include <stdexcept>
#include <vector>

namespace stirling {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    T& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    Mat transposed() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat leading(int size) const {
        if (size > rows || size > cols) throw std::invalid_argument("leading: size too large");
        Mat s(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) s.at(i, j) = at(i, j);
        return s;
    }

    Mat submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Mat s(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
        for (size_t i = 0; i < ri.size(); ++i)
            for (size_t j = 0; j < ci.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(ri[i], ci[j]);
        return s;
    }
};

using IntMat = Mat<Int>;
using PolyMat = Mat<IntPoly>;

/// Leading size x size block of a triangle, zeros above the diagonal.
inline IntMat triangle_matrix(const Triangle& t, int size) {
    if (size - 1 > t.n_max()) throw std::invalid_argument("triangle_matrix: not enough rows");
    IntMat m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = t.at(i, j);
    return m;
}

/// Same, with every row reversed: out(i,j) = t(i, i-j).
inline IntMat reversed_triangle_matrix(const Triangle& t, int size) {
    if (size - 1 > t.n_max()) throw std::invalid_argument("reversed_triangle_matrix: not enough rows");
    IntMat m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = t.at(i, i - j);
    return m;
}

/// Lower-triangular Toeplitz matrix of one triangle row: out(i,j) = t(n, i-j).
inline IntMat toeplitz_of_row(const Triangle& t, int n, int size) {
    if (n > t.n_max()) throw std::invalid_argument("toeplitz_of_row: row out of range");
    IntMat m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = t.at(n, i - j);
    return m;
}

/// Hankel matrix of a polynomial sequence: out(i,j) = polys[i+j].
inline PolyMat hankel_of_polys(const std::vector<IntPoly>& polys, int size) {
    if (static_cast<int>(polys.size()) < 2 * size - 1)
        throw std::invalid_argument("hankel_of_polys: need at least 2*size-1 polynomials");
    PolyMat m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = polys[static_cast<size_t>(i + j)];
    return m;
}

} // namespace stirling
