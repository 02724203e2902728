#pragma once

#include <map>
#include <optional>
#include <vector>

#include "partid/families.hpp"
#include "partid/partition.hpp"
#include "partid/semigroup.hpp"

namespace partid {

enum class Family { C_t, D_t, C_st, D_st };

struct FamilySpec {
    Family family;
    long long t = 0;
    std::optional<long long> s;               // required for C_st / D_st
    std::optional<ConditionMask> conditions;  // D_st only; error elsewhere

    void validate() const;  // throws std::invalid_argument on bad combinations
    SemigroupParams semigroup() const;
};

// All partitions of weight n in the family, each exactly once, in
// lexicographically decreasing order of part sequences.
std::vector<Partition> enumerate_family(long long n, const FamilySpec& spec);

// counts[n] = |enumerate_family(n, spec)| for n = 0..max_n. D families are
// counted by a single DFS sweep; C families by an exact distinct-part
// subset-sum recurrence (agreement with enumeration is tested).
std::vector<long long> count_table(long long max_n, const FamilySpec& spec);

// Members of weight n grouped by their class vector.
std::map<ClassVector, long long> refined_counts(long long n, long long s, long long t,
                                                Side side);

}  // namespace partid
