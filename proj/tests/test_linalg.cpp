#include <doctest.h>

#include <stirling/hankel.hpp>
#include <stirling/matrix.hpp>
#include <stirling/rootcert.hpp>
#include <stirling/tp.hpp>
#include <stirling/triangle.hpp>

using namespace stirling;

TEST_CASE("matrix sections of a triangle") {
    const Triangle c2 = stirling_cycle_r(2, 9);
    const IntMat m = triangle_matrix(c2, 4);
    CHECK(m.rows == 4);
    CHECK(m.at(3, 2) == 20);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(0, 3) == 0);

    const IntMat rev = reversed_triangle_matrix(c2, 4);
    CHECK(rev.at(3, 0) == 15);
    CHECK(rev.at(3, 3) == 0);

    const IntMat toe = toeplitz_of_row(c2, 2, 3);
    CHECK(toe.at(0, 0) == 0);
    CHECK(toe.at(1, 0) == 2);
    CHECK(toe.at(2, 0) == 3);
    CHECK(toe.at(2, 1) == 2);
    CHECK(toe.at(2, 2) == 0);
}

TEST_CASE("bareiss determinants") {
    IntMat m(3, 3);
    m.at(0, 0) = 2;
    m.at(0, 1) = 0;
    m.at(0, 2) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    m.at(1, 2) = 2;
    m.at(2, 0) = 1;
    m.at(2, 1) = 1;
    m.at(2, 2) = 2;
    CHECK(bareiss_determinant(m) == 6);
    CHECK(minor_value(m, {0, 1}, {0, 1}) == 6);
    CHECK(minor_value(m, {0, 2}, {1, 2}) == -1);

    IntMat z(2, 2);
    z.at(0, 1) = 1;
    z.at(1, 0) = 1;
    CHECK(bareiss_determinant(z) == -1);
}

TEST_CASE("Neville elimination certifies totally positive sections") {
    for (int r = 2; r <= 4; ++r) {
        const IntMat m = triangle_matrix(stirling_cycle_r(r, 9), 10);
        const TPReport rep = neville_tp_test(m);
        CHECK(rep.verdict == TPVerdict::TotallyPositive);
        const TPReport oracle = all_minors_nonneg(m.leading(6), 6);
        CHECK(oracle.verdict == TPVerdict::TotallyPositive);
        CHECK(oracle.minors_evaluated > 0);
    }
}

TEST_CASE("Neville elimination and the exhaustive scan agree on a reversal failure") {
    const IntMat m = reversed_triangle_matrix(stirling_cycle_r(3, 5), 6);
    const TPReport neville = neville_tp_test(m);
    const TPReport scan = all_minors_nonneg(m, 6);
    REQUIRE(neville.verdict == TPVerdict::NotTP);
    REQUIRE(scan.verdict == TPVerdict::NotTP);
    REQUIRE(neville.witness.has_value());
    REQUIRE(scan.witness.has_value());
    CHECK(minor_value(m, neville.witness->rows, neville.witness->cols) == neville.witness->value);
    CHECK(neville.witness->value < 0);
    CHECK(scan.witness->value < 0);

    const TPReport clean = all_minors_nonneg(m.leading(5), 5);
    CHECK(clean.verdict == TPVerdict::TotallyPositive);
}

TEST_CASE("explicit 2x2 witnesses for reversed triangles of order four") {
    const IntMat mc = reversed_triangle_matrix(stirling_cycle_r(4, 3), 4);
    CHECK(minor_value(mc, {2, 3}, {0, 1}) == -7076160);
    const IntMat ms = reversed_triangle_matrix(stirling_subset_r(4, 3), 4);
    CHECK(minor_value(ms, {2, 3}, {0, 1}) == -1365);
}

TEST_CASE("the reversed order-3 subset triangle first fails at size twelve") {
    const Triangle s3 = stirling_subset_r(3, 11);
    const TPReport ok = neville_tp_test(reversed_triangle_matrix(s3, 11));
    CHECK(ok.verdict == TPVerdict::TotallyPositive);

    const IntMat m12 = reversed_triangle_matrix(s3, 12);
    const TPReport bad = neville_tp_test(m12, 7);
    REQUIRE(bad.verdict == TPVerdict::NotTP);
    REQUIRE(bad.witness.has_value());
    CHECK(minor_value(m12, bad.witness->rows, bad.witness->cols) == bad.witness->value);
    CHECK(bad.witness->value < 0);

    CHECK(minor_value(m12, {5, 6, 7, 8, 9, 10, 11}, {0, 1, 2, 3, 4, 5, 6}) ==
          Int("-25252003038040307484398192106640032750000000000"));
}

TEST_CASE("polynomial determinants") {
    PolyMat m(2, 2);
    m.at(0, 0) = IntPoly(std::vector<Int>{1});
    m.at(0, 1) = IntPoly(std::vector<Int>{0, 1});
    m.at(1, 0) = IntPoly(std::vector<Int>{0, 1});
    m.at(1, 1) = IntPoly(std::vector<Int>{1, 0, 1});
    CHECK(poly_determinant(m) == IntPoly(std::vector<Int>{1}));
    CHECK(poly_minor(m, {0}, {1}) == IntPoly(std::vector<Int>{0, 1}));
}

TEST_CASE("first negative coefficient") {
    CHECK(!first_negative_coeff(IntPoly(std::vector<Int>{1, 0, 3})).has_value());
    const auto idx = first_negative_coeff(IntPoly(std::vector<Int>{1, 0, -2, 5}));
    REQUIRE(idx.has_value());
    CHECK(*idx == 2);
}

TEST_CASE("coefficientwise Hankel positivity of cycle row polynomials") {
    std::vector<IntPoly> polys;
    const Triangle c2 = stirling_cycle_r(2, 8);
    for (int n = 0; n < 9; ++n) polys.push_back(row_poly(c2, n));
    const HankelReport rep = coeffwise_hankel_tp(polys, 5, 3);
    CHECK(rep.verdict == TPVerdict::TotallyPositive);
    CHECK(rep.minors_evaluated > 0);
}

TEST_CASE("coefficientwise Hankel positivity fails for subset rows of order three") {
    for (int r = 3; r <= 5; ++r) {
        CAPTURE(r);
        std::vector<IntPoly> polys;
        const Triangle s = stirling_subset_r(r, 6);
        for (int n = 0; n < 7; ++n) polys.push_back(row_poly(s, n));
        const HankelReport rep = coeffwise_hankel_tp(polys, 4, 3);
        REQUIRE(rep.verdict == TPVerdict::NotTP);
        REQUIRE(rep.witness.has_value());
        if (r == 3) CHECK(rep.witness->rows.size() == 3);
        const IntPoly minor =
            poly_minor(hankel_of_polys(polys, 4), rep.witness->rows, rep.witness->cols);
        const auto neg = first_negative_coeff(minor);
        REQUIRE(neg.has_value());
        CHECK(*neg == rep.witness->negative_coeff_index);

        const HankelReport small = coeffwise_hankel_tp(polys, 3, 3);
        CHECK(small.verdict == TPVerdict::TotallyPositive);
    }
}
