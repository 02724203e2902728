#include "partid/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace partid {

SemigroupParams::SemigroupParams(long long s, long long t) : s_(s), t_(t) {
    if (s <= 1 || t <= 1)
        throw std::invalid_argument("semigroup generators must exceed 1");
    if (std::gcd(s, t) != 1)
        throw std::invalid_argument("semigroup generators must be coprime");

    long long bound = max_gap();
    member_.assign(static_cast<std::size_t>(bound + 1), false);
    for (long long h = 0; h * s_ <= bound; ++h)
        for (long long v = h * s_; v <= bound; v += t_)
            member_[static_cast<std::size_t>(v)] = true;
    for (long long x = 0; x <= bound; ++x)
        if (!member_[static_cast<std::size_t>(x)]) gaps_.push_back(x);
}

bool SemigroupParams::in_W(long long x) const {
    if (x < 0) return false;
    if (x > max_gap()) return true;
    return member_[static_cast<std::size_t>(x)];
}

bool in_W(long long x, const SemigroupParams& params) { return params.in_W(x); }

std::vector<long long> gap_set(long long s, long long t) {
    return SemigroupParams(s, t).gaps();
}

}  // namespace partid
