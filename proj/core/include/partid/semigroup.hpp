#pragma once

#include <vector>

namespace partid {

// Numerical semigroup W = {hs + kt : h,k >= 0} for coprime s,t > 1, together
// with its finite gap set U = N \ W. The largest gap is (s-1)(t-1)-1.
class SemigroupParams {
public:
    SemigroupParams(long long s, long long t);

    long long s() const { return s_; }
    long long t() const { return t_; }
    long long max_gap() const { return (s_ - 1) * (t_ - 1) - 1; }

    const std::vector<long long>& gaps() const { return gaps_; }
    bool in_W(long long x) const;

private:
    long long s_, t_;
    std::vector<long long> gaps_;   // sorted ascending
    std::vector<bool> member_;      // membership table for 0..max_gap
};

bool in_W(long long x, const SemigroupParams& params);
std::vector<long long> gap_set(long long s, long long t);

}  // namespace partid
