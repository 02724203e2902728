#pragma once

#include <utility>
#include <vector>

#include "partid/families.hpp"
#include "partid/partition.hpp"
#include "partid/semigroup.hpp"

namespace partid {

// Full audit of one application of the map (either direction). Intermediate
// strings may contain negative and repeated entries, so they are kept as raw
// signed sequences; pi4_star rows are weakly decreasing multiples of t.
struct BijectionTrace {
    Partition input;
    Partition pi1, pi2, pi4, pi5;
    std::vector<long long> pi4_star;  // conjugate rows alpha_1 >= ... >= alpha_{u_1}
    Partition pi6;                    // the a'_i
    std::vector<long long> staircase; // offsets (p+k-1)t, ..., t, 0
    std::vector<long long> s0, sf;
    Partition result;
    long long p = 0, k = 0, r = 0;
};

// Conjugation of a Young diagram read in blocks of t columns: divide parts by
// t, conjugate, multiply back. Involutive on weakly decreasing sequences of
// multiples of t.
std::vector<long long> t_fold_conjugate(const std::vector<long long>& parts, long long t);
Partition t_fold_conjugate(const Partition& pi4, long long t);

// The constructive map C(n)_s^t -> D(n)_s^t and its inverse. Both validate
// membership of the input and every internal invariant; violations throw.
std::pair<Partition, BijectionTrace> forward_map(const Partition& pi,
                                                 const SemigroupParams& params);
std::pair<Partition, BijectionTrace> inverse_map(const Partition& pi3,
                                                 const SemigroupParams& params);

}  // namespace partid
