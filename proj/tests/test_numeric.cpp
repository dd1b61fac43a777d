#include <doctest.h>

#include <stirling/aberth.hpp>
#include <stirling/io.hpp>
#include <stirling/numeric.hpp>
#include <stirling/triangle.hpp>

#include <sstream>
#include <stdexcept>

using namespace stirling;

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(13) == 135135);
    CHECK(binomial(10ul, 3ul) == 120);
    CHECK(binomial(Int(100), 3) == 161700);
    CHECK_THROWS_AS(binomial(Int(-1), 2), std::invalid_argument);
    CHECK(pow_int(Int(3), 4) == 81);
    CHECK(pow_int(Int(-2), 3) == -8);
    CHECK(sign_of(Int(-5)) == -1);
    CHECK(sign_of(Rat(0)) == 0);
    CHECK(to_integer(Rat(6, 3)) == 2);
    CHECK_THROWS_AS(to_integer(Rat(1, 2)), std::domain_error);
}

TEST_CASE("numeric roots of a cubic with a zero root") {
    IntPoly p;
    p.c = {Int(0), Int(2), Int(3), Int(1)}; // x (x + 1) (x + 2)
    const auto res = numeric_roots(p);
    CHECK(res.zero_multiplicity == 1);
    CHECK(res.precision_bits == 256);
    CHECK(res.sturm_real_count == 2);
    CHECK(res.real_count == 2);
    REQUIRE(res.roots.size() == 2);

    const Mpf res_tol = ldexp(Mpf(1), -64);
    const Mpf loc_tol = ldexp(Mpf(1), -50);
    Mpf lo = res.roots[0].re, hi = res.roots[1].re;
    if (lo > hi) std::swap(lo, hi);
    CHECK(abs(lo + 2) <= loc_tol);
    CHECK(abs(hi + 1) <= loc_tol);
    for (const auto& root : res.roots) {
        CHECK(abs(root.im) <= loc_tol);
        CHECK(root.residual <= res_tol);
    }
}

TEST_CASE("numeric roots agree with Sturm when nothing is real") {
    IntPoly p;
    p.c = {Int(1), Int(0), Int(1)};
    const auto res = numeric_roots(p);
    CHECK(res.zero_multiplicity == 0);
    CHECK(res.sturm_real_count == 0);
    CHECK(res.real_count == 0);
    REQUIRE(res.roots.size() == 2);
    for (const auto& root : res.roots) {
        CHECK(abs(root.re) <= ldexp(Mpf(1), -60));
        CHECK(abs(abs(root.im) - 1) <= ldexp(Mpf(1), -60));
    }

    IntPoly c;
    c.c = {Int(5)};
    CHECK(numeric_roots(c).roots.empty());
    CHECK_THROWS_AS(numeric_roots(IntPoly()), std::invalid_argument);
}

TEST_CASE("normalized root clouds") {
    const auto cloud = normalized_root_cloud(CloudKind::Cycle, 3, {4});
    REQUIRE(cloud.size() == 4);
    CHECK(cloud[0].zero_root);
    CHECK(cloud[0].re == 0);
    CHECK(cloud[0].norm_re == 0);
    const Mpf res_tol = ldexp(Mpf(1), -64);
    for (size_t i = 1; i < cloud.size(); ++i) {
        CHECK(!cloud[i].zero_root);
        CHECK(cloud[i].r == 3);
        CHECK(cloud[i].n == 4);
        CHECK(cloud[i].norm_re == 4 * cloud[i].re);
        CHECK(cloud[i].norm_im == 4 * cloud[i].im);
        CHECK(cloud[i].residual <= res_tol);
    }
    CHECK_THROWS_AS(normalized_root_cloud(CloudKind::Cycle, 0, {4}), std::invalid_argument);
    CHECK_THROWS_AS(normalized_root_cloud(CloudKind::Cycle, 3, {0}), std::invalid_argument);
}

TEST_CASE("root cloud emission is byte stable") {
    std::ostringstream a, b;
    write_root_cloud_csv(a, "cycle", normalized_root_cloud(CloudKind::Cycle, 3, {3, 5}));
    write_root_cloud_csv(b, "cycle", normalized_root_cloud(CloudKind::Cycle, 3, {3, 5}));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("kind,r,n,zero_root,re,im,norm_re,norm_im,residual\n", 0) == 0);
    CHECK(format_mpf(Mpf(1) / 3) == format_mpf(Mpf(1) / 3));
}

TEST_CASE("triangle csv with row sums") {
    std::ostringstream os;
    write_triangle_csv(os, stirling_cycle_r(1, 2), true);
    CHECK(os.str() == "1,1\n0,1,1\n0,1,1,2\n");

    std::ostringstream op;
    write_poly_csv(op, "row", IntPoly(std::vector<Int>{Int(0), Int(2), Int(3)}));
    CHECK(op.str() == "row,0;2;3\n");
}
