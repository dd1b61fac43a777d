/// @file phylo.hpp
/// @brief Phylogenetic trees: rooted trees whose leaves carry the labels
///        1..n+1 and whose internal vertices all have at least two children.
///
/// Children may be unordered (a set), arranged in a cycle, or arranged in a
/// line; the three flavors are counted here by number of internal vertices
/// through one shared recursion over set partitions of the leaf labels.
/// The same recursion with one formal variable per child count yields the
/// multivariate Ward polynomials.

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multivar.hpp"
#include "numeric.hpp"
#include "triangle.hpp"

namespace stirling {

enum class PhyloFlavor { Unordered, Cyclic, Ordered };

inline const char* phylo_flavor_name(PhyloFlavor f) {
    switch (f) {
        case PhyloFlavor::Unordered: return "unordered";
        case PhyloFlavor::Cyclic: return "cyclic";
        case PhyloFlavor::Ordered: return "ordered";
    }
    return "unordered";
}

namespace detail {

/// Set partitions of labels, visited as block lists; each element joins an
/// existing block or starts a new one, so every partition appears once.
inline void for_each_partition(const std::vector<unsigned>& labels,
                               const std::function<void(const std::vector<std::vector<unsigned>>&)>& visit) {
    std::vector<std::vector<unsigned>> blocks;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == labels.size()) {
            visit(blocks);
            return;
        }
        const std::size_t existing = blocks.size();
        for (std::size_t b = 0; b < existing; ++b) {
            blocks[b].push_back(labels[idx]);
            place(idx + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({labels[idx]});
        place(idx + 1);
        blocks.pop_back();
    };
    place(0);
}

inline std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<Int> phylo_rec(PhyloFlavor f, const std::vector<unsigned>& leaves) {
    if (leaves.size() == 1) return {Int(1)};
    std::vector<Int> total;
    for_each_partition(leaves, [&](const std::vector<std::vector<unsigned>>& blocks) {
        if (blocks.size() < 2) return;
        std::vector<Int> prod{Int(1)};
        for (const auto& block : blocks) prod = convolve(prod, phylo_rec(f, block));
        Int arrangements = 1;
        if (f == PhyloFlavor::Cyclic)
            arrangements = factorial(static_cast<unsigned long>(blocks.size() - 1));
        else if (f == PhyloFlavor::Ordered)
            arrangements = factorial(static_cast<unsigned long>(blocks.size()));
        if (total.size() < prod.size() + 1) total.resize(prod.size() + 1, 0);
        for (std::size_t i = 0; i < prod.size(); ++i) total[i + 1] += prod[i] * arrangements;
    });
    return total;
}

inline MultiPoly ward_rec(unsigned nvars, const std::vector<unsigned>& leaves) {
    if (leaves.size() == 1) return MultiPoly::constant(nvars, 1);
    MultiPoly total(nvars);
    for_each_partition(leaves, [&](const std::vector<std::vector<unsigned>>& blocks) {
        if (blocks.size() < 2) return;
        MultiPoly prod = MultiPoly::variable(nvars, static_cast<unsigned>(blocks.size()) - 2);
        for (const auto& block : blocks) prod *= ward_rec(nvars, block);
        total += prod;
    });
    return total;
}

} // namespace detail

/// counts[k] = number of phylogenetic trees of the given flavor with leaf
/// set {1..n+1} and exactly k internal vertices.
inline std::vector<Int> phylo_internal_counts(PhyloFlavor f, unsigned n) {
    if (n > 7) throw GuardError("phylogenetic enumeration capped at n <= 7");
    std::vector<unsigned> leaves(n + 1);
    for (unsigned i = 0; i <= n; ++i) leaves[i] = i + 1;
    std::vector<Int> counts = detail::phylo_rec(f, leaves);
    counts.resize(n + 1, 0);
    return counts;
}

/// Ward polynomial of the unordered family on n+1 leaves: an internal vertex
/// with i+1 children contributes the variable with index i-1, so the result
/// lives in the variables x_1..x_n (indices 0..n-1) and is quasi-homogeneous
/// of degree n when x_i is given weight i.
inline MultiPoly multivariate_ward(unsigned n) {
    if (n > 7) throw GuardError("ward polynomial enumeration capped at n <= 7");
    const unsigned nvars = n == 0 ? 1u : n;
    if (n == 0) return MultiPoly::constant(nvars, 1);
    std::vector<unsigned> leaves(n + 1);
    for (unsigned i = 0; i <= n; ++i) leaves[i] = i + 1;
    return detail::ward_rec(nvars, leaves);
}

/// Substitutes x_i -> coefficient(i) * x into a Ward polynomial, returning a
/// univariate polynomial in x.
inline IntPoly ward_specialize(const MultiPoly& w, const std::function<Int(unsigned)>& coefficient) {
    std::vector<Poly<Rat>> at;
    at.reserve(w.nvars());
    for (unsigned i = 1; i <= w.nvars(); ++i)
        at.push_back(Poly<Rat>({Rat(0), Rat(coefficient(i))}));
    return to_int_poly(w.substitute(at));
}

/// Cyclic-flavor counts again, this time from their two-term recurrence
///   M(n,k) = (n+k-1) [ M(n-1,k-1) + M(n-1,k) ].
inline Triangle cyclic_mobile_triangle(int n_max) {
    if (n_max < 0) throw std::invalid_argument("cyclic_mobile_triangle: n_max < 0");
    Triangle t;
    t.kind = TriangleKind::Generic;
    t.r = 2;
    t.rows.resize(static_cast<std::size_t>(n_max) + 1);
    t.rows[0] = {Int(1)};
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Int(0));
        for (int k = 1; k <= n; ++k)
            row[static_cast<std::size_t>(k)] =
                Int(n + k - 1) * (t.at(n - 1, k - 1) + t.at(n - 1, k));
    }
    return t;
}

} // namespace stirling
