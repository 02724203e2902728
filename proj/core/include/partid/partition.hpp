#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace partid {

// Partition into distinct positive parts, listed in strictly decreasing order.
// The empty partition is valid and has weight 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    // Sorts the input decreasingly first; still rejects repeats and nonpositive parts.
    static Partition from_unsorted(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long weight() const { return weight_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long operator[](std::size_t i) const { return parts_[i]; }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<long long> parts_;
    long long weight_ = 0;
};

}  // namespace partid
