#ifndef GINIPART_PARTITION_HPP
#define GINIPART_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ginipart/bigint.hpp"

namespace ginipart {

// Integer partition: weakly decreasing positive parts. The canonical form
// stores no trailing zeros; operations that need fixed-length views pad on
// the fly. The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    // Validates weak decrease and positivity; trailing zeros are stripped.
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    long total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Lexicographic on parts; used for deterministic orderings.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<long> parts_;
    long total_ = 0;
};

// Column lengths of the Young diagram; an involution.
Partition conjugate(const Partition& lam);

// True iff every prefix sum of lam dominates the corresponding prefix sum of
// mu. Throws std::invalid_argument when the totals differ: comparing
// partitions of different integers is always a caller bug.
bool dominates(const Partition& lam, const Partition& mu);

// True iff lam covers mu in the dominance order, i.e. lam arises from mu by
// moving a single box from row k up to row i < k with k = i+1 or mu_i = mu_k.
bool covers(const Partition& lam, const Partition& mu);

// All partitions of n, reverse-lexicographic (largest first), each once.
std::vector<Partition> enumerate_partitions(long n);

// All partitions of `total` with at most `max_parts` parts, same order.
std::vector<Partition> enumerate_partitions_bounded(long total, long max_parts);

// P(n) by the pentagonal-number recurrence; independent of enumeration so the
// two routes cross-check each other.
BigInt partition_count(long n);

// P(0..n) in one pass.
std::vector<BigInt> partition_count_table(long n);

}  // namespace ginipart

#endif
