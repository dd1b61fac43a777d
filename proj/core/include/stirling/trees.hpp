/// @file trees.hpp
/// @brief Increasing ternary and increasing ordered trees, their marking
///        refinements, and the bijections tying them to Stirling words.
///
/// Three families appear here, all enumerated by odd double factorials:
///   - plain increasing ternary trees on {1..n} (root 1, slots L/M/R),
///   - primed increasing ternary trees on {0..n} where vertex 0 may only
///     take a left child,
///   - increasing ordered trees on {0..n} (root 0, linearly ordered kids).

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "words.hpp"

namespace stirling {

struct TernaryTree {
    // child[v][s]: label occupying slot s of vertex v, or -1.
    // Slot 0 is left, 1 is middle, 2 is right.
    std::vector<std::array<int, 3>> child;

    bool operator==(const TernaryTree& o) const { return child == o.child; }
};

struct OrderedTree {
    std::vector<std::vector<int>> kids; // ordered children per label; root 0

    bool operator==(const OrderedTree& o) const { return kids == o.kids; }
};

inline void check_tree_guard(unsigned n) {
    if (n > 9) throw GuardError("tree enumeration capped at n <= 9");
}

namespace detail {

inline void ternary_insert(std::vector<std::array<int, 3>>& child, unsigned lo,
                           unsigned j, unsigned n, bool primed,
                           const std::function<void(const TernaryTree&)>& visit) {
    if (j > n) {
        TernaryTree t;
        t.child = child;
        visit(t);
        return;
    }
    for (unsigned v = lo; v < j; ++v) {
        const unsigned max_slot = (primed && v == 0) ? 1u : 3u;
        for (unsigned s = 0; s < max_slot; ++s) {
            if (child[v][s] != -1) continue;
            child[v][s] = static_cast<int>(j);
            ternary_insert(child, lo, j + 1, n, primed, visit);
            child[v][s] = -1;
        }
    }
}

} // namespace detail

/// Primed trees on {0..n}: root 0, whose only usable slot is the left one.
inline void for_each_ternary_primed(unsigned n,
                                    const std::function<void(const TernaryTree&)>& visit) {
    check_tree_guard(n);
    std::vector<std::array<int, 3>> child(n + 1, {-1, -1, -1});
    detail::ternary_insert(child, 0, 1, n, true, visit);
}

/// Plain trees on {1..n}: root 1, all three slots open everywhere.
inline void for_each_ternary_plain(unsigned n,
                                   const std::function<void(const TernaryTree&)>& visit) {
    check_tree_guard(n);
    std::vector<std::array<int, 3>> child(n + 1, {-1, -1, -1});
    if (n == 0) {
        TernaryTree t;
        t.child = child;
        visit(t);
        return;
    }
    detail::ternary_insert(child, 1, 2, n, false, visit);
}

/// Increasing ordered trees on {0..n}, root 0.
inline void for_each_increasing_ordered(unsigned n,
                                        const std::function<void(const OrderedTree&)>& visit) {
    check_tree_guard(n);
    OrderedTree t;
    t.kids.assign(n + 1, {});
    std::function<void(unsigned)> insert = [&](unsigned j) {
        if (j > n) {
            visit(t);
            return;
        }
        for (unsigned v = 0; v < j; ++v) {
            for (std::size_t pos = 0; pos <= t.kids[v].size(); ++pos) {
                t.kids[v].insert(t.kids[v].begin() + static_cast<std::ptrdiff_t>(pos),
                                 static_cast<int>(j));
                insert(j + 1);
                t.kids[v].erase(t.kids[v].begin() + static_cast<std::ptrdiff_t>(pos));
            }
        }
    };
    insert(1);
}

inline unsigned count_slot_edges(const TernaryTree& t, unsigned slot) {
    unsigned c = 0;
    for (const auto& ch : t.child)
        if (ch[slot] != -1) ++c;
    return c;
}

inline unsigned count_internal(const OrderedTree& s) {
    unsigned c = 0;
    for (const auto& k : s.kids)
        if (!k.empty()) ++c;
    return c;
}

/// Primed trees refined by number of left edges.
inline std::vector<Int> ternary_left_edge_counts(unsigned n) {
    std::vector<Int> counts(n + 1, 0);
    for_each_ternary_primed(n, [&](const TernaryTree& t) {
        counts[count_slot_edges(t, 0)] += 1;
    });
    return counts;
}

/// Increasing ordered trees refined by number of internal vertices.
inline std::vector<Int> ordered_internal_counts(unsigned n) {
    std::vector<Int> counts(n + 1, 0);
    for_each_increasing_ordered(n, [&](const OrderedTree& s) {
        counts[count_internal(s)] += 1;
    });
    return counts;
}

/// Edge markings: any subset of the middle and right edges may be marked,
/// left edges never.  Index of the result is the number of UNMARKED edges
/// for primed trees, and (unmarked + 1) for plain trees.
inline std::vector<Int> ternary_edge_marked_counts(unsigned n, bool primed) {
    if (!primed && n == 0)
        throw std::invalid_argument("plain edge-marked counts need n >= 1");
    if (n > 6) throw GuardError("edge-marked enumeration capped at n <= 6");
    const unsigned edges = primed ? n : n - 1;
    std::vector<Int> counts(n + 1, 0);
    const auto body = [&](const TernaryTree& t) {
        const unsigned markable = count_slot_edges(t, 1) + count_slot_edges(t, 2);
        for (unsigned long mask = 0; mask < (1ul << markable); ++mask) {
            const unsigned marked = static_cast<unsigned>(__builtin_popcountl(mask));
            const unsigned unmarked = edges - marked;
            counts[primed ? unmarked : unmarked + 1] += 1;
        }
    };
    if (primed)
        for_each_ternary_primed(n, body);
    else
        for_each_ternary_plain(n, body);
    return counts;
}

/// Vertex markings on increasing ordered trees: every leaf except the one
/// with the largest label may be marked or not; that largest leaf is always
/// marked, internal vertices never are.  Index of the result is the number
/// of unmarked vertices.
inline std::vector<Int> ordered_vertex_marked_counts(unsigned n) {
    if (n > 6) throw GuardError("vertex-marked enumeration capped at n <= 6");
    std::vector<Int> counts(n + 1, 0);
    for_each_increasing_ordered(n, [&](const OrderedTree& s) {
        unsigned free_leaves = 0;
        for (unsigned v = 0; v + 1 <= n; ++v) // label n is excluded
            if (s.kids[v].empty()) ++free_leaves;
        const unsigned internal = count_internal(s);
        for (unsigned long mask = 0; mask < (1ul << free_leaves); ++mask) {
            const unsigned marked = static_cast<unsigned>(__builtin_popcountl(mask));
            counts[internal + free_leaves - marked] += 1;
        }
    });
    return counts;
}

/// Splits a Stirling permutation of {1,1,...,n,n} at the two copies of its
/// smallest letter; the three pieces become the left, middle and right
/// subtrees.
inline TernaryTree ternary_from_word(const Word& w) {
    const unsigned n = static_cast<unsigned>(w.size() / 2);
    TernaryTree t;
    t.child.assign(n + 1, {-1, -1, -1});
    std::function<int(std::size_t, std::size_t)> build =
        [&](std::size_t lo, std::size_t hi) -> int {
        if (lo == hi) return -1;
        std::size_t p1 = lo;
        for (std::size_t i = lo; i < hi; ++i)
            if (w[i] < w[p1]) p1 = i;
        std::size_t p2 = p1 + 1;
        while (w[p2] != w[p1]) ++p2;
        const int a = static_cast<int>(w[p1]);
        t.child[static_cast<std::size_t>(a)] = {build(lo, p1), build(p1 + 1, p2),
                                                build(p2 + 1, hi)};
        return a;
    };
    build(0, w.size());
    return t;
}

inline Word word_from_ternary(const TernaryTree& t, unsigned n) {
    Word w;
    w.reserve(2 * n);
    std::function<void(int)> emit = [&](int v) {
        if (v == -1) return;
        const auto& ch = t.child[static_cast<std::size_t>(v)];
        emit(ch[0]);
        w.push_back(static_cast<unsigned>(v));
        emit(ch[1]);
        w.push_back(static_cast<unsigned>(v));
        emit(ch[2]);
    };
    emit(n == 0 ? -1 : 1);
    return w;
}

namespace detail {

// In-order word of the subtree hanging from v through middle/right slots only.
inline void middle_right_word(const TernaryTree& t, int v, std::vector<int>& out) {
    if (v == -1) return;
    const auto& ch = t.child[static_cast<std::size_t>(v)];
    middle_right_word(t, ch[1], out);
    out.push_back(v);
    middle_right_word(t, ch[2], out);
}

// Inverse: rebuild the middle/right chain rooted at the minimum of the word.
inline int middle_right_tree(std::vector<std::array<int, 3>>& child,
                             const std::vector<int>& w, std::size_t lo, std::size_t hi) {
    if (lo == hi) return -1;
    std::size_t p = lo;
    for (std::size_t i = lo; i < hi; ++i)
        if (w[i] < w[p]) p = i;
    const int root = w[p];
    child[static_cast<std::size_t>(root)][1] = middle_right_tree(child, w, lo, p);
    child[static_cast<std::size_t>(root)][2] = middle_right_tree(child, w, p + 1, hi);
    return root;
}

} // namespace detail

/// Primed ternary tree -> increasing ordered tree: the children of j are
/// read off, in order, from the middle/right chain below j's left child.
inline OrderedTree tree_correspondence_forward(const TernaryTree& t) {
    const std::size_t m = t.child.size();
    OrderedTree s;
    s.kids.assign(m, {});
    for (std::size_t j = 0; j < m; ++j) {
        const int c = t.child[j][0];
        if (c == -1) continue;
        detail::middle_right_word(t, c, s.kids[j]);
    }
    return s;
}

/// Inverse correspondence: each nonempty child list becomes a middle/right
/// chain whose minimum is attached as the left child.
inline TernaryTree tree_correspondence_backward(const OrderedTree& s) {
    const std::size_t m = s.kids.size();
    TernaryTree t;
    t.child.assign(m, {-1, -1, -1});
    for (std::size_t j = 0; j < m; ++j) {
        const auto& w = s.kids[j];
        if (w.empty()) continue;
        t.child[j][0] = detail::middle_right_tree(t.child, w, 0, w.size());
    }
    return t;
}

/// Canonical parenthesized encodings, used for set-based bijection checks.
inline std::string encode_tree(const TernaryTree& t, int root) {
    if (root == -1) return "-";
    const auto& ch = t.child[static_cast<std::size_t>(root)];
    return "(" + std::to_string(root) + " " + encode_tree(t, ch[0]) + encode_tree(t, ch[1]) +
           encode_tree(t, ch[2]) + ")";
}

inline std::string encode_tree(const OrderedTree& s, int root = 0) {
    std::string out = "(" + std::to_string(root);
    for (int c : s.kids[static_cast<std::size_t>(root)]) out += " " + encode_tree(s, c);
    return out + ")";
}

} // namespace stirling
