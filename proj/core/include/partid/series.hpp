#pragma once

#include <vector>

#include "partid/partition.hpp"

namespace partid {

// Polynomial in q with exact 64-bit integer coefficients, truncated at a
// fixed degree bound. All arithmetic refuses to overflow or to mix bounds.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long long bound);
    static TruncatedSeries one(long long bound);
    static TruncatedSeries monomial(long long degree, long long bound,
                                    long long coeff = 1);

    long long bound() const { return bound_; }
    long long operator[](long long degree) const;
    void add_at(long long degree, long long value);  // checked; ignores degree > bound

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // this += f * q^shift
    void add_shifted(const TruncatedSeries& f, long long shift);

    bool operator==(const TruncatedSeries&) const = default;

    const std::vector<long long>& coefficients() const { return c_; }

private:
    long long bound_;
    std::vector<long long> c_;
};

// prod_{i=1..count} (1 - q^{m i})
TruncatedSeries pochhammer(long long m, long long count, long long bound);

// Truncated expansion of 1 / (1 - q^step)
TruncatedSeries geometric(long long step, long long bound);

// Truncated expansion of 1 / prod_{i=1..count} (1 - q^{m i})
TruncatedSeries inverse_pochhammer(long long m, long long count, long long bound);

}  // namespace partid
