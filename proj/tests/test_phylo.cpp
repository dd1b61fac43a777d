#include <doctest.h>

#include <stirling/multivar.hpp>
#include <stirling/phylo.hpp>
#include <stirling/rootcert.hpp>
#include <stirling/triangle.hpp>

#include <stdexcept>
#include <vector>

using namespace stirling;

namespace {

MultiPoly mono(unsigned nvars, std::vector<unsigned> e, long c) {
    MultiPoly m = MultiPoly::constant(nvars, 0);
    m.add_term(e, Rat(c));
    return m;
}

} // namespace

TEST_CASE("tree counts by internal vertices, all three flavors") {
    CHECK(phylo_internal_counts(PhyloFlavor::Unordered, 4) ==
          std::vector<Int>{0, 1, 25, 105, 105});
    CHECK(phylo_internal_counts(PhyloFlavor::Cyclic, 4) ==
          std::vector<Int>{0, 24, 130, 210, 105});
    CHECK(phylo_internal_counts(PhyloFlavor::Ordered, 4) ==
          std::vector<Int>{0, 120, 1080, 2520, 1680});

    const Triangle s2 = stirling_subset_r(2, 5);
    const Triangle c2 = stirling_cycle_r(2, 5);
    const Triangle d = ordered_phylo_triangle(5);
    for (unsigned n = 0; n <= 5; ++n) {
        const auto u = phylo_internal_counts(PhyloFlavor::Unordered, n);
        const auto c = phylo_internal_counts(PhyloFlavor::Cyclic, n);
        const auto o = phylo_internal_counts(PhyloFlavor::Ordered, n);
        for (size_t k = 0; k <= n; ++k) {
            CHECK(u[k] == s2.at(static_cast<int>(n), static_cast<int>(k)));
            CHECK(c[k] == c2.at(static_cast<int>(n), static_cast<int>(k)));
            CHECK(o[k] == d.at(static_cast<int>(n), static_cast<int>(k)));
        }
    }
    CHECK_THROWS_AS(phylo_internal_counts(PhyloFlavor::Unordered, 8), GuardError);
}

TEST_CASE("the cyclic recurrence reproduces the enumeration") {
    const Triangle m = cyclic_mobile_triangle(6);
    const Triangle c2 = stirling_cycle_r(2, 6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) CHECK(m.at(n, k) == c2.at(n, k));
}

TEST_CASE("small Ward polynomials") {
    CHECK(multivariate_ward(0) == MultiPoly::constant(1, 1));
    CHECK(multivariate_ward(1) == MultiPoly::variable(1, 0));
    CHECK(multivariate_ward(2) == mono(2, {2, 0}, 3) + mono(2, {0, 1}, 1));
    CHECK(multivariate_ward(3) ==
          mono(3, {3, 0, 0}, 15) + mono(3, {1, 1, 0}, 10) + mono(3, {0, 0, 1}, 1));
    CHECK(multivariate_ward(4) == mono(4, {4, 0, 0, 0}, 105) + mono(4, {2, 1, 0, 0}, 105) +
                                      mono(4, {1, 0, 1, 0}, 15) + mono(4, {0, 2, 0, 0}, 10) +
                                      mono(4, {0, 0, 0, 1}, 1));
    CHECK_THROWS_AS(multivariate_ward(8), GuardError);
}

TEST_CASE("Ward specializations hit all three row polynomial families") {
    const Triangle s2 = stirling_subset_r(2, 5);
    const Triangle c2 = stirling_cycle_r(2, 5);
    const Triangle d = ordered_phylo_triangle(5);
    for (unsigned n = 0; n <= 5; ++n) {
        const MultiPoly w = multivariate_ward(n);
        CHECK(ward_specialize(w, [](unsigned) { return Int(1); }) ==
              row_poly(s2, static_cast<int>(n)));
        CHECK(ward_specialize(w, [](unsigned i) { return factorial(i); }) ==
              row_poly(c2, static_cast<int>(n)));
        CHECK(ward_specialize(w, [](unsigned i) { return factorial(i + 1); }) ==
              row_poly(d, static_cast<int>(n)));
    }
}

TEST_CASE("typed increasing-tree polynomials") {
    const MultiPoly x0 = MultiPoly::variable(3, 0);
    const MultiPoly x1 = MultiPoly::variable(3, 1);
    const MultiPoly x2 = MultiPoly::variable(3, 2);
    CHECK(multivariate_eulerian_q(2, 1) == x0 + x1 + x2);
    CHECK(multivariate_eulerian_p(2, 0) == MultiPoly::constant(3, 1));
    CHECK(multivariate_eulerian_p(2, 2) == x0 * (x0 + x1 + x2));

    const Poly<Rat> one(std::vector<Rat>{Rat(1)});
    const Poly<Rat> x(std::vector<Rat>{Rat(0), Rat(1)});
    const Poly<Rat> xp1(std::vector<Rat>{Rat(1), Rat(1)});
    const MultiPoly p4 = multivariate_eulerian_p(2, 4);
    CHECK(to_int_poly(p4.substitute({one, x, x})) == IntPoly(std::vector<Int>{1, 22, 58, 24}));
    CHECK(to_int_poly(p4.substitute({x, xp1, xp1})) == row_poly(stirling_cycle_r(2, 4), 4));
    CHECK(to_int_poly(p4.substitute({x, x, xp1})) == row_poly(stirling_subset_r(2, 4), 4));

    CHECK_THROWS_AS(multivariate_eulerian_q(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(multivariate_eulerian_q(2, 9), GuardError);
}
