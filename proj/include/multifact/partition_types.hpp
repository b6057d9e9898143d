#ifndef MULTIFACT_PARTITION_TYPES_HPP
#define MULTIFACT_PARTITION_TYPES_HPP

#include <numeric>
#include <vector>

namespace multifact {

// A partition of k: parts nonincreasing, all >= 1. The empty partition is the
// unique partition of 0.
struct Partition {
    std::vector<int> parts;

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

// beta[i-1] counts the parts equal to i, for i = 1..a where a is the largest
// part; the last entry is nonzero. Empty for the empty partition.
struct MultiplicityVector {
    std::vector<int> beta;

    int largest_part() const { return static_cast<int>(beta.size()); }

    // beta_i with the convention beta_i = 0 outside 1..a.
    int at(int i) const { return (i >= 1 && i <= largest_part()) ? beta[static_cast<std::size_t>(i - 1)] : 0; }

    int weight() const
    {
        int k = 0;
        for (int i = 1; i <= largest_part(); ++i)
            k += i * at(i);
        return k;
    }

    int part_count() const { return std::accumulate(beta.begin(), beta.end(), 0); }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
};

// An ordered sequence of positive parts.
struct Composition {
    std::vector<int> parts;

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    friend bool operator==(const Composition&, const Composition&) = default;
};

} // namespace multifact

#endif // MULTIFACT_PARTITION_TYPES_HPP
