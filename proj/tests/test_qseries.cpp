#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <random>

#include "partid/enumeration.hpp"
#include "partid/qseries.hpp"
#include "partid/series.hpp"

using namespace partid;

TEST_CASE("truncated multiplication basics") {
    TruncatedSeries one_plus(2);
    one_plus.add_at(0, 1);
    one_plus.add_at(1, 1);
    TruncatedSeries one_minus(2);
    one_minus.add_at(0, 1);
    one_minus.add_at(1, -1);
    auto prod = one_plus * one_minus;
    CHECK(prod[0] == 1);
    CHECK(prod[1] == 0);
    CHECK(prod[2] == -1);

    TruncatedSeries f(5);
    f.add_at(0, 3);
    f.add_at(4, -2);
    CHECK(f * TruncatedSeries::one(5) == f);

    auto telescoping = geometric(1, 5) * pochhammer(1, 1, 5);
    CHECK(telescoping == TruncatedSeries::one(5));

    CHECK_THROWS_AS(TruncatedSeries(3) * TruncatedSeries(4), std::invalid_argument);
}

TEST_CASE("overflow is an error, never a wrap") {
    TruncatedSeries f(0);
    f.add_at(0, (1LL << 62));
    CHECK_THROWS_AS(f * f, std::overflow_error);
    CHECK_THROWS_AS(f += f, std::overflow_error);
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer(5, 0, 10) == TruncatedSeries::one(10));
    auto p31 = pochhammer(3, 1, 6);
    CHECK(p31[0] == 1);
    CHECK(p31[3] == -1);
    auto p22 = pochhammer(2, 2, 6);
    CHECK(p22[0] == 1);
    CHECK(p22[2] == -1);
    CHECK(p22[4] == -1);
    CHECK(p22[6] == 1);
    CHECK(p22[1] == 0);
    CHECK(p22[3] == 0);
    CHECK(p22[5] == 0);
}

TEST_CASE("inverse pochhammer inverts pochhammer up to truncation") {
    for (long long m : {2, 3, 7})
        for (long long count : {1LL, 2LL, 4LL})
            CHECK(pochhammer(m, count, 40) * inverse_pochhammer(m, count, 40) ==
                  TruncatedSeries::one(40));
}

TEST_CASE("product side small coefficients at t = 4") {
    auto f = product_side(4, 20);
    CHECK(f[0] == 1);
    CHECK(f[3] == 1);
    CHECK(f[4] == 1);
    CHECK(f[5] == 1);
    CHECK(f[8] == 2);  // {8} and {5,3}
}

TEST_CASE("sum side small coefficients at t = 4") {
    auto f = sum_side(4, 20);
    CHECK(f[0] == 1);
    CHECK(f[3] == 1);
    CHECK(f[8] == 2);
}

TEST_CASE("combined exponent is a nonnegative integer over the summation range") {
    for (long long t = 4; t <= 8; ++t) {
        QtForm form(t);
        for (long long a = 0; a <= 6; ++a)
            for (long long b = 0; b <= 6; ++b)
                for (long long c = 0; c <= 6; ++c)
                    for (long long d = 0; d <= 6; ++d) {
                        long long e = form.exponent(a, b, c, d);
                        CHECK(e >= 0);
                        CHECK(2 * e == form.doubled_quadratic(a, b, c, d) + t * b -
                                           2 * c + 2 * d);
                    }
    }
    CHECK_THROWS_AS(QtForm(3), std::invalid_argument);
}

TEST_CASE("t = 3 requires exploratory mode") {
    CHECK_THROWS_AS(product_side(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(sum_side(3, 10), std::invalid_argument);
    CHECK(product_side(3, 10, true)[0] == 1);
    CHECK(sum_side(3, 10, true)[0] == 1);
}

TEST_CASE("series coefficients anchor the enumerations") {
    for (long long t = 4; t <= 8; ++t) {
        auto prod = product_side(t, 60);
        auto sum = sum_side(t, 60);
        auto c = count_table(60, {Family::C_t, t});
        auto d = count_table(60, {Family::D_t, t});
        for (long long n = 0; n <= 60; ++n) {
            CAPTURE(t);
            CAPTURE(n);
            CHECK(prod[n] == c[static_cast<std::size_t>(n)]);
            CHECK(sum[n] == d[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("main identity on a medium truncation") {
    for (long long t : {4, 5, 6, 7, 8})
        CHECK(product_side(t, 120) == sum_side(t, 120));
}

TEST_CASE("product recomputation with permuted factor order is identical") {
    long long t = 5, bound = 80;
    std::vector<long long> degrees;
    for (long long n = 1; n <= bound; ++n) {
        long long r = n % (2 * t);
        if (r == 0 || r == t - 1 || r == t || r == t + 1) degrees.push_back(n);
    }
    std::mt19937 rng(5);
    std::shuffle(degrees.begin(), degrees.end(), rng);
    TruncatedSeries shuffled = TruncatedSeries::one(bound);
    for (long long n : degrees) {
        TruncatedSeries factor = TruncatedSeries::one(bound);
        factor.add_at(n, 1);
        shuffled = shuffled * factor;
    }
    CHECK(shuffled == product_side(t, bound));
}

TEST_CASE("bivariate block product basics") {
    auto f = block_product_bivariate(5, 20, 4);
    CHECK(f.slice(0) == TruncatedSeries::one(20));
    // single-part blocks: x^1 slice collects q^{5j-1} + q^{5j} + q^{5j+1}
    TruncatedSeries expected(20);
    for (long long j = 1; 5 * j - 1 <= 20; ++j)
        for (long long e : {5 * j - 1, 5 * j, 5 * j + 1})
            if (e <= 20) expected.add_at(e, 1);
    CHECK(f.slice(1) == expected);
}

TEST_CASE("bivariate derivation chain") {
    for (long long t : {4, 5}) {
        auto blocks = block_product_bivariate(t, 60, 12);
        auto quad = quadruple_sum_bivariate(t, 60, 12);
        CHECK(blocks == quad);
        CHECK(apply_staircase(quad, t).eval_x1() == sum_side(t, 60));
    }
}

TEST_CASE("staircase substitution shifts slices") {
    auto quad = quadruple_sum_bivariate(4, 30, 6);
    auto shifted = apply_staircase(quad, 4);
    CHECK(shifted.slice(0) == quad.slice(0));
    CHECK(shifted.slice(1) == quad.slice(1));
    for (long long e = 0; e <= 30; ++e)
        CHECK(shifted.coeff(2, e) == (e >= 4 ? quad.coeff(2, e - 4) : 0));
}

TEST_CASE("quadruple sum constant term") {
    auto quad = quadruple_sum_bivariate(6, 30, 6);
    CHECK(quad.coeff(0, 0) == 1);
}
