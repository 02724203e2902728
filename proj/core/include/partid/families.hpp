#pragma once

#include <vector>

#include "partid/partition.hpp"
#include "partid/semigroup.hpp"

namespace partid {

enum class Side { C, D };

// Residue-class census (i_1,...,i_{t-1}; k) refining the two-parameter
// cardinality identity. On the C side classes are taken mod st, on the D side
// mod t; k counts the multiples of t retained by the classification.
struct ClassVector {
    std::vector<long long> residue_counts;  // index h-1 holds i_h, h = 1..t-1
    long long k = 0;

    bool operator==(const ClassVector&) const = default;
    bool operator<(const ClassVector& o) const {
        if (residue_counts != o.residue_counts) return residue_counts < o.residue_counts;
        return k < o.k;
    }

    long long nonmultiple_count() const;  // p = sum of i_h
    std::string to_string() const;
};

// Which of the D-side conditions to enforce; the subset exists for the
// redundancy experiments (D0 at s=2, D2 at s=2,t=3).
struct ConditionMask {
    bool d0 = true, d1 = true, d2 = true, d3 = true;
    bool all_enabled() const { return d0 && d1 && d2 && d3; }
    bool operator==(const ConditionMask&) const = default;
};

// Single-parameter families: distinct parts divisible by t or congruent to
// t-1, t+1 mod 2t (C side); distinct parts > 1 congruent to 0, +-1 mod t with
// the adjacent-difference rule (D side).
bool is_in_C_t(const Partition& p, long long t);
bool is_in_D_t(const Partition& p, long long t);

// Two-parameter families: distinct parts divisible by s or by t (C side);
// conditions D0-D3 (D side).
bool is_in_C_st(const Partition& p, const SemigroupParams& params);
bool is_in_D_st(const Partition& p, const SemigroupParams& params,
                ConditionMask conditions = {});

// The f-values of condition D0, computed from the parts not divisible by t.
std::vector<long long> d0_f_values(const Partition& p, long long t);

ClassVector class_vector(const Partition& p, const SemigroupParams& params, Side side);

// Pairwise/positional pieces, shared with the enumerators.
bool d_t_adjacent_ok(long long x, long long y, long long t);  // x > y
bool d0_holds(const std::vector<long long>& parts, const SemigroupParams&);
bool d2_holds(const std::vector<long long>& parts, long long t);
bool d3_holds(const std::vector<long long>& parts, const SemigroupParams&);

}  // namespace partid
