#pragma once

#include <vector>

#include "partid/series.hpp"

namespace partid {

// Quadratic form driving the quadruple-sum side of the analytic identity,
// together with the combined exponent E. The half-integer pieces of Q_t pair
// up as t*b(b+1)/2, so E is always an integer; exponent() works exactly.
struct QtForm {
    long long t;

    explicit QtForm(long long t);

    // 2 * Q_t(a,b,c,d); kept doubled so it stays integral for odd b.
    long long doubled_quadratic(long long a, long long b, long long c, long long d) const;
    // E = Q_t + (t/2) b - c + d
    long long exponent(long long a, long long b, long long c, long long d) const;
};

// Infinite product over n = 0, t-1, t, t+1 (mod 2t) of (1 + q^n), truncated.
// Coefficient of q^n counts the C-side partitions of n. The identity is only
// claimed for t > 3; t = 3 is reachable with exploratory = true.
TruncatedSeries product_side(long long t, long long bound, bool exploratory = false);

// The quadruple sum with inverse Pochhammer denominators, truncated.
TruncatedSeries sum_side(long long t, long long bound, bool exploratory = false);

// Polynomial in x and q, exact integer coefficients, truncated at x-degree M
// and q-degree N. Stored as dense per-x-degree slices.
class BivariateSeries {
public:
    BivariateSeries(long long xbound, long long qbound);
    static BivariateSeries one(long long xbound, long long qbound);

    long long xbound() const { return xbound_; }
    long long qbound() const { return qbound_; }

    long long coeff(long long xdeg, long long qdeg) const;
    void add_at(long long xdeg, long long qdeg, long long value);

    const TruncatedSeries& slice(long long xdeg) const;

    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries& operator*=(const BivariateSeries& o);

    bool operator==(const BivariateSeries&) const = default;

    TruncatedSeries eval_x1() const;  // sum of slices

private:
    long long xbound_, qbound_;
    std::vector<TruncatedSeries> slices_;
};

// Generating function of the maximal-block forms, x marking the number of
// parts: prod_j (1+xq^{tj-1})/(1-x^2 q^{2tj-t}) * 1/(1-xq^{tj}) * (1+xq^{tj+1}).
BivariateSeries block_product_bivariate(long long t, long long qbound, long long xbound);

// Product of the four single-index sums with x-exponent 2a+b+c+d.
BivariateSeries quadruple_sum_bivariate(long long t, long long qbound, long long xbound);

// The staircase substitution x^m -> x^m q^{t m(m-1)/2}.
BivariateSeries apply_staircase(const BivariateSeries& f, long long t);

}  // namespace partid
