#include "partid/qseries.hpp"

#include <stdexcept>

#include "partid/checked.hpp"

namespace partid {

QtForm::QtForm(long long t_) : t(t_) {
    if (t <= 3) throw std::invalid_argument("the quadratic form requires t > 3");
}

long long QtForm::doubled_quadratic(long long a, long long b, long long c,
                                    long long d) const {
    return 4 * t * a * a + t * b * b + 2 * t * c * c + 2 * t * d * d +
           4 * t * a * b + 4 * t * a * c + 4 * t * a * d + 2 * t * b * c +
           2 * t * b * d + 2 * t * c * d;
}

long long QtForm::exponent(long long a, long long b, long long c, long long d) const {
    long long doubled = doubled_quadratic(a, b, c, d) + t * b - 2 * c + 2 * d;
    if (doubled % 2 != 0)
        throw std::logic_error("combined exponent is not an integer");
    return doubled / 2;
}

TruncatedSeries product_side(long long t, long long bound, bool exploratory) {
    if (t <= 3 && !(exploratory && t == 3))
        throw std::invalid_argument("product_side requires t > 3");
    TruncatedSeries out = TruncatedSeries::one(bound);
    for (long long n = 1; n <= bound; ++n) {
        long long r = n % (2 * t);
        if (r != 0 && r != t - 1 && r != t && r != t + 1) continue;
        TruncatedSeries factor = TruncatedSeries::one(bound);
        factor.add_at(n, 1);
        out = out * factor;
    }
    return out;
}

namespace {

// The exponent generalized so t = 3 stays reachable in exploratory mode.
long long combined_exponent(long long t, long long a, long long b, long long c,
                            long long d) {
    long long doubled = 4 * t * a * a + t * b * b + 2 * t * c * c + 2 * t * d * d +
                        4 * t * a * b + 4 * t * a * c + 4 * t * a * d +
                        2 * t * b * c + 2 * t * b * d + 2 * t * c * d + t * b -
                        2 * c + 2 * d;
    if (doubled % 2 != 0)
        throw std::logic_error("combined exponent is not an integer");
    return doubled / 2;
}

const TruncatedSeries& cached_inverse_pochhammer(std::vector<TruncatedSeries>& cache,
                                                 long long m, long long count,
                                                 long long bound) {
    if (cache.empty()) cache.push_back(TruncatedSeries::one(bound));
    while (static_cast<long long>(cache.size()) <= count) {
        long long next = static_cast<long long>(cache.size());
        cache.push_back(cache.back() * geometric(checked_mul(m, next), bound));
    }
    return cache[static_cast<std::size_t>(count)];
}

}  // namespace

TruncatedSeries sum_side(long long t, long long bound, bool exploratory) {
    if (t <= 3 && !(exploratory && t == 3))
        throw std::invalid_argument("sum_side requires t > 3");
    TruncatedSeries out(bound);
    std::vector<TruncatedSeries> inv_2t, inv_t;
    // The exponent is strictly increasing in each index, so each loop may stop
    // as soon as its first admissible exponent passes the bound.
    for (long long a = 0; combined_exponent(t, a, 0, 0, 0) <= bound; ++a) {
        const TruncatedSeries& fa = cached_inverse_pochhammer(inv_2t, 2 * t, a, bound);
        for (long long b = 0; combined_exponent(t, a, b, 0, 0) <= bound; ++b) {
            TruncatedSeries fab = fa * cached_inverse_pochhammer(inv_t, t, b, bound);
            for (long long c = 0; combined_exponent(t, a, b, c, 0) <= bound; ++c) {
                TruncatedSeries fabc =
                    fab * cached_inverse_pochhammer(inv_t, t, c, bound);
                for (long long d = 0;; ++d) {
                    long long e = combined_exponent(t, a, b, c, d);
                    if (e > bound) break;
                    out.add_shifted(fabc * cached_inverse_pochhammer(inv_t, t, d, bound),
                                    e);
                }
            }
        }
    }
    return out;
}

BivariateSeries::BivariateSeries(long long xbound, long long qbound)
    : xbound_(xbound), qbound_(qbound) {
    if (xbound < 0) throw std::invalid_argument("x bound must be nonnegative");
    slices_.assign(static_cast<std::size_t>(xbound + 1), TruncatedSeries(qbound));
}

BivariateSeries BivariateSeries::one(long long xbound, long long qbound) {
    BivariateSeries f(xbound, qbound);
    f.slices_[0] = TruncatedSeries::one(qbound);
    return f;
}

long long BivariateSeries::coeff(long long xdeg, long long qdeg) const {
    if (xdeg < 0 || xdeg > xbound_) return 0;
    return slices_[static_cast<std::size_t>(xdeg)][qdeg];
}

void BivariateSeries::add_at(long long xdeg, long long qdeg, long long value) {
    if (xdeg < 0) throw std::invalid_argument("negative x degree");
    if (xdeg > xbound_) return;
    slices_[static_cast<std::size_t>(xdeg)].add_at(qdeg, value);
}

const TruncatedSeries& BivariateSeries::slice(long long xdeg) const {
    if (xdeg < 0 || xdeg > xbound_)
        throw std::invalid_argument("x degree out of range");
    return slices_[static_cast<std::size_t>(xdeg)];
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    if (xbound_ != o.xbound_ || qbound_ != o.qbound_)
        throw std::invalid_argument("truncation bound mismatch");
    BivariateSeries out(xbound_, qbound_);
    for (long long i = 0; i <= xbound_; ++i)
        for (long long j = 0; i + j <= xbound_; ++j) {
            TruncatedSeries prod =
                slices_[static_cast<std::size_t>(i)] * o.slices_[static_cast<std::size_t>(j)];
            out.slices_[static_cast<std::size_t>(i + j)] += prod;
        }
    return out;
}

BivariateSeries& BivariateSeries::operator*=(const BivariateSeries& o) {
    *this = *this * o;
    return *this;
}

TruncatedSeries BivariateSeries::eval_x1() const {
    TruncatedSeries out(qbound_);
    for (const auto& s : slices_) out += s;
    return out;
}

BivariateSeries block_product_bivariate(long long t, long long qbound, long long xbound) {
    if (t < 3) throw std::invalid_argument("block product requires t >= 3");
    BivariateSeries out = BivariateSeries::one(xbound, qbound);
    for (long long j = 1; t * j - 1 <= qbound; ++j) {
        BivariateSeries f1(xbound, qbound);  // 1 + x q^{tj-1}
        f1.add_at(0, 0, 1);
        f1.add_at(1, t * j - 1, 1);
        BivariateSeries g1(xbound, qbound);  // 1 / (1 - x^2 q^{2tj-t})
        for (long long i = 0; 2 * i <= xbound && (2 * t * j - t) * i <= qbound; ++i)
            g1.add_at(2 * i, (2 * t * j - t) * i, 1);
        BivariateSeries f2(xbound, qbound);  // 1 / (1 - x q^{tj})
        for (long long i = 0; i <= xbound && t * j * i <= qbound; ++i)
            f2.add_at(i, t * j * i, 1);
        BivariateSeries f3(xbound, qbound);  // 1 + x q^{tj+1}
        f3.add_at(0, 0, 1);
        f3.add_at(1, t * j + 1, 1);
        out = out * f1 * g1 * f2 * f3;
    }
    return out;
}

BivariateSeries quadruple_sum_bivariate(long long t, long long qbound, long long xbound) {
    if (t < 3) throw std::invalid_argument("quadruple sum requires t >= 3");
    std::vector<TruncatedSeries> inv_2t, inv_t;

    BivariateSeries sum_a(xbound, qbound);
    for (long long a = 0; 2 * a <= xbound && t * a <= qbound; ++a) {
        TruncatedSeries term = cached_inverse_pochhammer(inv_2t, 2 * t, a, qbound);
        for (long long e = 0; e + t * a <= qbound; ++e)
            sum_a.add_at(2 * a, e + t * a, term[e]);
    }
    BivariateSeries sum_b(xbound, qbound);
    for (long long b = 0; b <= xbound && t * b <= qbound; ++b) {
        TruncatedSeries term = cached_inverse_pochhammer(inv_t, t, b, qbound);
        for (long long e = 0; e + t * b <= qbound; ++e)
            sum_b.add_at(b, e + t * b, term[e]);
    }
    BivariateSeries sum_c(xbound, qbound);
    for (long long c = 0; c <= xbound; ++c) {
        long long shift = (t - 1) * c + t * c * (c - 1) / 2;
        if (shift > qbound) break;
        TruncatedSeries term = cached_inverse_pochhammer(inv_t, t, c, qbound);
        for (long long e = 0; e + shift <= qbound; ++e)
            sum_c.add_at(c, e + shift, term[e]);
    }
    BivariateSeries sum_d(xbound, qbound);
    for (long long d = 0; d <= xbound; ++d) {
        long long shift = (t + 1) * d + t * d * (d - 1) / 2;
        if (shift > qbound) break;
        TruncatedSeries term = cached_inverse_pochhammer(inv_t, t, d, qbound);
        for (long long e = 0; e + shift <= qbound; ++e)
            sum_d.add_at(d, e + shift, term[e]);
    }
    return sum_a * sum_b * sum_c * sum_d;
}

BivariateSeries apply_staircase(const BivariateSeries& f, long long t) {
    BivariateSeries out(f.xbound(), f.qbound());
    for (long long m = 0; m <= f.xbound(); ++m) {
        long long shift = checked_mul(t, m * (m - 1) / 2);
        for (long long e = 0; e + shift <= f.qbound(); ++e)
            out.add_at(m, e + shift, f.slice(m)[e]);
    }
    return out;
}

}  // namespace partid
