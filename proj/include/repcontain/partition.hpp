#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace repcontain {

/// Weakly decreasing tuple of positive integers. The empty partition is a
/// first-class value: it indexes the semiring unit.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// (1,...,1) with j ones; j = 0 gives the empty partition.
    static Partition column(int j);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Zero-padded access: part(i) = 0 for i >= length().
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;  // lexicographic

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Componentwise sum with zero padding.
Partition operator+(const Partition& mu, const Partition& nu);

/// Dominance order on partitions of equal size: prefix sums of mu never
/// exceed those of nu. Throws std::invalid_argument when |mu| != |nu|.
bool dominance_leq(const Partition& mu, const Partition& nu);

/// SL(n) canonical form: subtract the n-th part from every row and strip
/// trailing zeros. Requires length(lambda) <= n.
Partition reduce_mod_determinant(const Partition& lambda, int n);

std::vector<Partition> partitions_of(int boxes, int max_length);
std::vector<Partition> partitions_up_to(int max_boxes, int max_length);

}  // namespace repcontain
