#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stsys {

/// Non-decreasing tuple of positive integers; n is their sum.
class Partition {
public:
    /// Sorts the parts; throws InputError on an empty list or a part < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const;
    std::size_t size() const { return parts_.size(); }
    std::size_t duplicated_number(int p) const;

    /// "(1,1,2)".
    std::string to_string() const;

    /// Parts separated by commas or spaces, optionally inside parentheses.
    static Partition parse(std::string_view text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/**
 * Every partition of n whose parts all lie in `admissible`, largest size
 * first and lexicographically within one size.
 */
std::vector<Partition> enumerate_partitions(int n, const std::set<int>& admissible);

/// Every partition obtained by summing the blocks of a set partition of `parts`.
std::set<Partition> coarsenings(const std::vector<int>& parts);

}  // namespace stsys
