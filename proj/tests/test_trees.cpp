#include <doctest.h>

#include <stirling/triangle.hpp>
#include <stirling/trees.hpp>

#include <set>
#include <stdexcept>
#include <string>

using namespace stirling;

TEST_CASE("word to ternary tree splitting") {
    const TernaryTree t = ternary_from_word({1, 2, 2, 1});
    REQUIRE(t.child.size() == 3);
    CHECK(t.child[1] == std::array<int, 3>{-1, 2, -1});
    CHECK(t.child[2] == std::array<int, 3>{-1, -1, -1});
    CHECK(word_from_ternary(t, 2) == Word{1, 2, 2, 1});
}

TEST_CASE("word and ternary enumerations are in bijection") {
    for (unsigned n = 1; n <= 3; ++n) {
        unsigned long words = 0;
        std::set<std::string> trees;
        for_each_stirling_word(2, n, [&](const Word& w) {
            ++words;
            const TernaryTree t = ternary_from_word(w);
            CHECK(word_from_ternary(t, n) == w);
            trees.insert(encode_tree(t, 1));
        });
        unsigned long plain = 0;
        for_each_ternary_plain(n, [&](const TernaryTree&) { ++plain; });
        CHECK(Int(words) == double_factorial(2 * n - 1));
        CHECK(trees.size() == words);
        CHECK(plain == words);
    }
    CHECK_THROWS_AS(for_each_ternary_plain(10, [](const TernaryTree&) {}), GuardError);
}

TEST_CASE("chain splitting carries a ten-vertex tree across and back") {
    TernaryTree t;
    t.child.assign(11, {-1, -1, -1});
    t.child[0] = {1, -1, -1};
    t.child[1] = {3, 2, 5};
    t.child[2] = {4, -1, 10};
    t.child[3] = {6, -1, -1};
    t.child[4] = {-1, 8, 9};
    t.child[6] = {-1, -1, 7};

    const OrderedTree s = tree_correspondence_forward(t);
    CHECK(s.kids[0] == std::vector<int>{2, 10, 1, 5});
    CHECK(s.kids[1] == std::vector<int>{3});
    CHECK(s.kids[2] == std::vector<int>{8, 4, 9});
    CHECK(s.kids[3] == std::vector<int>{6, 7});
    CHECK(s.kids[4].empty());
    CHECK(count_internal(s) == count_slot_edges(t, 0));
    CHECK(tree_correspondence_backward(s) == t);
}

TEST_CASE("the correspondence is a bijection onto ordered trees") {
    for (unsigned n = 1; n <= 4; ++n) {
        unsigned long primed = 0, ordered = 0;
        std::set<std::string> images;
        for_each_ternary_primed(n, [&](const TernaryTree& t) {
            ++primed;
            const OrderedTree s = tree_correspondence_forward(t);
            CHECK(tree_correspondence_backward(s) == t);
            CHECK(count_slot_edges(t, 0) == count_internal(s));
            images.insert(encode_tree(s));
        });
        for_each_increasing_ordered(n, [&](const OrderedTree&) { ++ordered; });
        CHECK(images.size() == primed);
        CHECK(ordered == primed);
        CHECK(Int(primed) == double_factorial(2 * n - 1));
    }
}

TEST_CASE("edge refinements recover the Eulerian and cycle rows") {
    const Triangle e = eulerian_r(2, 5);
    const Triangle c2 = stirling_cycle_r(2, 5);
    for (unsigned n = 1; n <= 5; ++n) {
        const auto left = ternary_left_edge_counts(n);
        const auto internal = ordered_internal_counts(n);
        REQUIRE(left.size() == n + 1);
        CHECK(left == internal);
        for (size_t k = 0; k < left.size(); ++k)
            CHECK(left[k] ==
                  e.at(static_cast<int>(n), static_cast<int>(n) - static_cast<int>(k)));
    }
    CHECK(ternary_left_edge_counts(4) == std::vector<Int>{0, 24, 58, 22, 1});
    CHECK(ternary_edge_marked_counts(4, true) == std::vector<Int>{0, 24, 130, 210, 105});
    CHECK(ternary_edge_marked_counts(4, false) == std::vector<Int>{0, 24, 130, 210, 105});
    CHECK(ordered_vertex_marked_counts(4) == std::vector<Int>{0, 24, 130, 210, 105});
    for (unsigned n = 1; n <= 5; ++n) {
        const auto primed = ternary_edge_marked_counts(n, true);
        const auto plain = ternary_edge_marked_counts(n, false);
        const auto vertex = ordered_vertex_marked_counts(n);
        for (size_t k = 0; k <= n; ++k) {
            CHECK(primed[k] == c2.at(static_cast<int>(n), static_cast<int>(k)));
            CHECK(plain[k] == c2.at(static_cast<int>(n), static_cast<int>(k)));
            CHECK(vertex[k] == c2.at(static_cast<int>(n), static_cast<int>(k)));
        }
    }
    CHECK_THROWS_AS(ternary_edge_marked_counts(0, false), std::invalid_argument);
    CHECK_THROWS_AS(ternary_edge_marked_counts(7, true), GuardError);
    CHECK_THROWS_AS(ordered_vertex_marked_counts(7), GuardError);
}
