// Integer partitions: the index set for the Schur basis and everything above it.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schurlab {

// Weakly decreasing sequence of positive integers, stored trimmed (no zeros).
// The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // part(i) with 1-based i; 0 beyond the last row.
    int part(int i) const;

    Partition conjugate() const;
    // Young-diagram containment: parts_[i] >= other[i] with enough rows.
    bool contains(const Partition& other) const;
    // Componentwise maximum. pi >= union(a,b) iff pi >= a and pi >= b.
    Partition union_with(const Partition& other) const;
    // Componentwise sum (used as the sum-bound candidate).
    Partition componentwise_sum(const Partition& other) const;
    bool is_rectangle() const;

    // Maximal rectangles (lambda_i repeated i times at each descent); their
    // union recovers the partition. Errors on the empty partition.
    std::vector<Partition> rectangle_decomposition() const;

    // Canonical ordering: weight first, then reverse-lexicographic within a
    // weight, so (n) comes first and (1^n) last. Used for all map keys.
    std::strong_ordering operator<=>(const Partition& other) const;
    bool operator==(const Partition& other) const = default;

    // Textual form "[3,1,1]"; the empty partition is "[]".
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// Partitions of weight n containing lambda, reverse lexicographic.
std::vector<Partition> superpartitions_of(const Partition& lambda, int n);

} // namespace schurlab
