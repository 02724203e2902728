#include "partid/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "partid/checked.hpp"

namespace partid {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("partition parts must be strictly decreasing");
        weight_ = checked_add(weight_, parts_[i]);
    }
}

Partition Partition::from_unsorted(std::vector<long long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    out += ")";
    return out;
}

}  // namespace partid
