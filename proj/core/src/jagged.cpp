#include "partid/jagged.hpp"

#include <stdexcept>

namespace partid {

bool is_jagged(const std::vector<long long>& entries, long long k) {
    if (entries.empty()) return true;
    if (entries.front() <= 0) return false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i + 1] - entries[i] < -k) return false;
    return true;
}

bool is_strong(const std::vector<long long>& entries, long long k) {
    if (entries.empty()) return true;
    if (entries.front() <= 0) return false;
    // equivalent to checking each entry against the running maximum before it
    long long running_max = entries.front();
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i] - running_max < -k) return false;
        if (entries[i] > running_max) running_max = entries[i];
    }
    return true;
}

std::vector<long long> add_staircase(const std::vector<long long>& entries, long long k) {
    std::vector<long long> out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        out[i] = entries[i] + static_cast<long long>(i) * k;
    return out;
}

std::vector<long long> remove_staircase(const std::vector<long long>& entries, long long k) {
    std::vector<long long> out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        out[i] = entries[i] - static_cast<long long>(i) * k;
    if (!is_jagged(out, k))
        throw std::invalid_argument("staircase removal does not yield a k-jagged partition");
    return out;
}

std::vector<MaximalBlock> maximal_blocks(const std::vector<long long>& entries,
                                         long long k) {
    if (!is_strong(entries, k))
        throw std::invalid_argument("maximal blocks are defined for strong k-jagged partitions");
    std::vector<MaximalBlock> blocks;
    long long running_max = 0;
    for (long long v : entries) {
        if (v > running_max) {
            running_max = v;
            blocks.push_back(MaximalBlock{v, {v}});
        } else {
            blocks.back().entries.push_back(v);
        }
    }
    return blocks;
}

}  // namespace partid
