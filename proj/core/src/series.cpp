#include "partid/series.hpp"

#include <stdexcept>

#include "partid/checked.hpp"

namespace partid {

TruncatedSeries::TruncatedSeries(long long bound) : bound_(bound) {
    if (bound < 0) throw std::invalid_argument("truncation bound must be nonnegative");
    c_.assign(static_cast<std::size_t>(bound + 1), 0);
}

TruncatedSeries TruncatedSeries::one(long long bound) {
    TruncatedSeries f(bound);
    f.c_[0] = 1;
    return f;
}

TruncatedSeries TruncatedSeries::monomial(long long degree, long long bound,
                                          long long coeff) {
    TruncatedSeries f(bound);
    f.add_at(degree, coeff);
    return f;
}

long long TruncatedSeries::operator[](long long degree) const {
    if (degree < 0 || degree > bound_) return 0;
    return c_[static_cast<std::size_t>(degree)];
}

void TruncatedSeries::add_at(long long degree, long long value) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (degree > bound_) return;
    auto& slot = c_[static_cast<std::size_t>(degree)];
    slot = checked_add(slot, value);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (bound_ != o.bound_) throw std::invalid_argument("truncation bound mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (bound_ != o.bound_) throw std::invalid_argument("truncation bound mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = checked_add(c_[i], checked_mul(o.c_[i], -1));
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (bound_ != o.bound_) throw std::invalid_argument("truncation bound mismatch");
    TruncatedSeries out(bound_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            auto& slot = out.c_[i + j];
            slot = checked_add(slot, checked_mul(c_[i], o.c_[j]));
        }
    }
    return out;
}

void TruncatedSeries::add_shifted(const TruncatedSeries& f, long long shift) {
    if (bound_ != f.bound_) throw std::invalid_argument("truncation bound mismatch");
    if (shift < 0) throw std::invalid_argument("negative shift");
    for (long long i = 0; i + shift <= bound_; ++i) {
        if (f.c_[static_cast<std::size_t>(i)] == 0) continue;
        auto& slot = c_[static_cast<std::size_t>(i + shift)];
        slot = checked_add(slot, f.c_[static_cast<std::size_t>(i)]);
    }
}

TruncatedSeries pochhammer(long long m, long long count, long long bound) {
    if (m <= 0) throw std::invalid_argument("pochhammer base must be positive");
    if (count < 0) throw std::invalid_argument("pochhammer count must be nonnegative");
    TruncatedSeries out = TruncatedSeries::one(bound);
    for (long long i = 1; i <= count; ++i) {
        TruncatedSeries factor = TruncatedSeries::one(bound);
        factor.add_at(checked_mul(m, i), -1);
        out = out * factor;
    }
    return out;
}

TruncatedSeries geometric(long long step, long long bound) {
    if (step <= 0) throw std::invalid_argument("geometric step must be positive");
    TruncatedSeries out(bound);
    for (long long d = 0; d <= bound; d += step) out.add_at(d, 1);
    return out;
}

TruncatedSeries inverse_pochhammer(long long m, long long count, long long bound) {
    TruncatedSeries out = TruncatedSeries::one(bound);
    for (long long i = 1; i <= count; ++i)
        out = out * geometric(checked_mul(m, i), bound);
    return out;
}

}  // namespace partid
