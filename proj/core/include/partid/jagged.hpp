#pragma once

#include <cstdint>
#include <vector>

namespace partid {

// Maximal run of a strong k-jagged partition starting at a new running
// maximum j, with every entry in [j-k, j].
struct MaximalBlock {
    long long label = 0;
    std::vector<long long> entries;
    bool operator==(const MaximalBlock&) const = default;
};

// entries must start positive; consecutive drops bounded by k.
bool is_jagged(const std::vector<long long>& entries, long long k);
// all later-vs-earlier drops bounded by k (implies jagged).
bool is_strong(const std::vector<long long>& entries, long long k);

// a_i -> a_i + (i-1)k, and its inverse. remove_staircase throws if the result
// is not a k-jagged partition.
std::vector<long long> add_staircase(const std::vector<long long>& entries, long long k);
std::vector<long long> remove_staircase(const std::vector<long long>& entries, long long k);

// Left-to-right block decomposition; requires a strong k-jagged partition.
// Concatenating the returned blocks reproduces the input.
std::vector<MaximalBlock> maximal_blocks(const std::vector<long long>& entries,
                                         long long k);

}  // namespace partid
