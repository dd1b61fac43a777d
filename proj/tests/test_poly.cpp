#include <doctest.h>

#include <stirling/polynomial.hpp>
#include <stirling/rootcert.hpp>
#include <stirling/sturm.hpp>
#include <stirling/triangle.hpp>

using namespace stirling;

namespace {

IntPoly ip(std::vector<long> c) {
    IntPoly p;
    p.c.assign(c.begin(), c.end());
    p.trim();
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
    const IntPoly xp1 = ip({1, 1});
    CHECK(xp1 * xp1 == ip({1, 2, 1}));
    CHECK((xp1 + xp1) == ip({2, 2}));
    CHECK((xp1 - xp1).is_zero());
    CHECK(ip({1, 2, 1}).derivative() == ip({2, 2}));
    CHECK(ip({0, 3, 5}).shifted_down() == ip({3, 5}));
    CHECK_THROWS_AS(ip({1, 1}).shifted_down(), std::domain_error);
    CHECK(ip({1, 2, 1}).evaluate<Rat>(Rat(-2)) == 1);
    CHECK(ip({}).degree() == -1);
    CHECK(IntPoly::constant(Int(0)).is_zero());
}

TEST_CASE("content, primitive part and exact division") {
    CHECK(content(ip({6, -9, 12})) == 3);
    CHECK(primitive_part(ip({6, -9, 12})) == ip({2, -3, 4}));
    CHECK(primitive_part(ip({-2, 0, -4})) == ip({1, 0, 2}));
    CHECK(divide_exact_scalar(ip({6, 9}), Int(3)) == ip({2, 3}));
    CHECK_THROWS_AS(divide_exact_scalar(ip({6, 10}), Int(4)), std::domain_error);
    CHECK(divide_exact(ip({1, 2, 1}), ip({1, 1})) == ip({1, 1}));
    CHECK_THROWS_AS(divide_exact(ip({1, 2, 2}), ip({1, 1})), std::domain_error);
}

TEST_CASE("polynomial gcd and deflation") {
    const IntPoly a = ip({1, 1}) * ip({2, 1});
    const IntPoly b = ip({1, 1}) * ip({3, 1});
    CHECK(poly_gcd(a, b) == ip({1, 1}));
    CHECK(poly_gcd(ip({0, 1}), ip({0, 0, 1})) == ip({0, 1}));

    const IntPoly p = ip({-6, 1, 1}); // (x - 2)(x + 3)
    CHECK(deflate_root(p, Int(2)) == ip({3, 1}));
    CHECK_THROWS_AS(deflate_root(p, Int(1)), std::domain_error);
}

TEST_CASE("even pseudo remainder is a positive multiple of the remainder") {
    const IntPoly r = even_pseudo_remainder(ip({-1, 0, 1}), ip({1, 2}));
    CHECK(r == ip({-3}));
}

TEST_CASE("Sturm counts") {
    CHECK(count_real_roots(ip({1, 0, 1})) == 0);
    CHECK(count_real_roots(ip({-2, 0, 1})) == 2);
    const IntPoly p = ip({1, 5, 6}); // roots -1/2, -1/3
    CHECK(SturmSequence(p).count_open(Rat(-1), Rat(0)) == 2);
    CHECK(sturm_count(p, Rat(-1, 2), Rat(0)) == 1);

    const auto intervals = isolate_roots(p, Rat(-1), Rat(0));
    REQUIRE(intervals.size() == 2);
    for (const auto& iv : intervals) {
        CHECK(iv.lo < iv.hi);
        CHECK(sturm_count(p, iv.lo, iv.hi) == 1);
    }
    CHECK(intervals[0].hi <= intervals[1].lo);
}

TEST_CASE("row polynomials") {
    const Triangle c2 = stirling_cycle_r(2, 4);
    CHECK(row_poly(c2, 2) == ip({0, 2, 3}));
    CHECK(row_poly(c2, 0) == ip({1}));
    CHECK_THROWS_AS(row_poly(c2, 5), std::out_of_range);
}

TEST_CASE("root certificates for the three families") {
    for (RootFamily f : {RootFamily::Cycle2, RootFamily::Subset2, RootFamily::OrderedPhylo}) {
        CAPTURE(root_family_name(f));
        const auto certs = certify_roots(f, 8);
        REQUIRE(certs.size() == 8);
        for (const auto& cert : certs) {
            CAPTURE(cert.n);
            CHECK(cert.pass());
            CHECK(cert.zero_root);
            CHECK(cert.all_real);
            CHECK(cert.simple);
            CHECK(cert.interlaces_previous);
            REQUIRE(cert.sturm_counts.size() == 2);
            CHECK(cert.sturm_counts[0] == cert.n - 1);
            CHECK(cert.sturm_counts[1] == cert.n - 1);
        }
    }
}

TEST_CASE("interlacing rejects a root outside the comb") {
    const IntPoly prev = ip({1, 2});               // root -1/2
    const IntPoly cur = ip({1, 9, 20});            // roots -1/4, -1/5
    std::string why;
    CHECK(!certify_interlacing(prev, cur, Rat(-1), Rat(0), &why));
    CHECK(!why.empty());
}

TEST_CASE("shifted row polynomial recurrences") {
    const Triangle c2 = stirling_cycle_r(2, 7);
    const Triangle s2 = stirling_subset_r(2, 7);
    IntPoly qc = ip({1});
    IntPoly qs = ip({1});
    CHECK(qc == row_poly(c2, 1).shifted_down());
    CHECK(qs == row_poly(s2, 1).shifted_down());
    for (long n = 1; n <= 6; ++n) {
        qc = hat_recurrence_step(qc, n, HatKind::Cycle);
        qs = hat_recurrence_step(qs, n, HatKind::Subset);
        CHECK(qc == row_poly(c2, static_cast<int>(n) + 1).shifted_down());
        CHECK(qs == row_poly(s2, static_cast<int>(n) + 1).shifted_down());

        const auto [at0c, atm1c] = hat_boundary_expected(HatKind::Cycle, n);
        CHECK(qc.evaluate<Rat>(Rat(0)) == at0c);
        CHECK(qc.evaluate<Rat>(Rat(-1)) == atm1c);
        const auto [at0s, atm1s] = hat_boundary_expected(HatKind::Subset, n);
        CHECK(qs.evaluate<Rat>(Rat(0)) == at0s);
        CHECK(qs.evaluate<Rat>(Rat(-1)) == atm1s);
    }
    CHECK(hat_boundary_expected(HatKind::Cycle, 3) == std::pair<Int, Int>{24, -1});
    CHECK(hat_boundary_expected(HatKind::Subset, 3) == std::pair<Int, Int>{1, -24});
}

TEST_CASE("subdiagonal closed forms") {
    for (long r = 2; r <= 5; ++r) {
        const Triangle c = stirling_cycle_r(static_cast<int>(r), 8);
        for (long n = 3; n <= 8; ++n) {
            const auto [first, second] = subdiagonal_closed_forms(r, n);
            CHECK(first == c.at(static_cast<int>(n), static_cast<int>(n - 1)));
            CHECK(second == c.at(static_cast<int>(n), static_cast<int>(n - 2)));
        }
    }
    CHECK_THROWS_AS(subdiagonal_first(2, 1), std::invalid_argument);
}

TEST_CASE("discriminant signs split by order") {
    for (long n = 3; n <= 8; ++n) {
        CHECK(discriminant_sign(2, n) > 0);
        CHECK(discriminant_sign(3, n) < 0);
        CHECK(discriminant_sign(4, n) < 0);
    }
    CHECK_THROWS_AS(discriminant_sign(3, 2), std::invalid_argument);
}

TEST_CASE("higher-order cycle rows leave the real axis") {
    const IntPoly q = row_poly(stirling_cycle_r(3, 3), 3).shifted_down();
    CHECK(q == ip({24, 420, 2240}));
    CHECK(count_real_roots(q) == 0);

    const IntPoly qs = row_poly(stirling_subset_r(3, 4), 4).shifted_down();
    CHECK(qs.degree() == 3);
    CHECK(count_real_roots(qs) == 1);
}

TEST_CASE("log-concavity of low-order rows") {
    for (int r = 1; r <= 3; ++r) {
        CHECK(log_concave_rows(stirling_cycle_r(r, 30), 30).all_pass);
        CHECK(log_concave_rows(stirling_subset_r(r, 30), 30).all_pass);
    }

    Triangle bad;
    bad.rows = {{Int(1)}, {Int(1), Int(1)}, {Int(1), Int(1), Int(4)}};
    const auto rep = log_concave_rows(bad, 2);
    CHECK(!rep.all_pass);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == std::pair<int, int>{2, 1});

    Triangle gap;
    gap.rows = {{Int(1)}, {Int(1), Int(0)}, {Int(1), Int(0), Int(1)}};
    CHECK(!log_concave_rows(gap, 2).support_contiguous);
}
