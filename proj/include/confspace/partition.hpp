#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "confspace/errors.hpp"

namespace confspace {

/// Hard cap on the ground-set size of a partition lattice.
inline constexpr int kDefaultMaxLatticeN = 12;

/// Bell number B(n), exact for n <= 25.
std::uint64_t bell_number(int n);

/// Set partition of {1..n}, stored as a restricted growth string: label[i] is
/// the index of the block containing element i+1, with blocks numbered in
/// order of their minimum element. This representation is canonical, so
/// equality and hashing are structural.
class Partition {
public:
    Partition() = default;

    /// From blocks of 1-based elements, in any order.
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    /// From an arbitrary 0-based block labelling; relabels canonically.
    static Partition from_labels(const std::vector<int>& labels);
    /// Parses "12|3" (digits, n <= 9) or "1,2|3" (comma separated).
    static Partition parse(std::string_view text);

    static Partition finest(int n);
    static Partition coarsest(int n);

    int n() const noexcept { return static_cast<int>(labels_.size()); }
    int size() const noexcept { return block_count_; }
    int block_of(int element) const { return labels_.at(static_cast<std::size_t>(element - 1)); }
    const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }

    /// Blocks as sorted 1-based element lists, ordered by minimum element.
    std::vector<std::vector<int>> blocks() const;
    /// Sorted multiset of block sizes; the isomorphism type of the lower interval.
    std::vector<int> block_sizes() const;

    /// 4 bits per element; valid for n <= 16.
    std::uint64_t code() const noexcept;

    /// Refinement order: every block of *this lies inside a block of other.
    bool refines(const Partition& other) const;
    Partition meet(const Partition& other) const;
    Partition join(const Partition& other) const;

    /// Merge the blocks with indices a and b.
    Partition merge_blocks(int a, int b) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint8_t> labels_;
    int block_count_ = 0;
};

/// Strict-weak order used for deterministic listings: more blocks first, then
/// lexicographic on the growth string.
bool lattice_order_less(const Partition& a, const Partition& b);

/// All partitions of [n] ordered by refinement. Elements are indexed so that
/// x < y in the lattice implies index(x) < index(y); 0̂ is element 0 and 1̂ the
/// last element. The order relation itself is computed on demand.
class PartitionLattice {
public:
    static PartitionLattice build(int n, int max_n = kDefaultMaxLatticeN);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<Partition>& elements() const noexcept { return elements_; }
    const Partition& operator[](std::size_t i) const { return elements_[i]; }

    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return elements_.size() - 1; }

    std::size_t index_of(const Partition& p) const;
    bool leq(std::size_t a, std::size_t b) const { return elements_[a].refines(elements_[b]); }
    std::size_t meet(std::size_t a, std::size_t b) const;
    std::size_t join(std::size_t a, std::size_t b) const;

    /// Elements z with x <= z <= y (closed) or x < z < y (open), ascending.
    std::vector<std::size_t> interval(std::size_t x, std::size_t y, bool open) const;

    /// Count of elements of each size (index = number of blocks).
    std::vector<std::size_t> rank_counts() const;

private:
    int n_ = 0;
    std::vector<Partition> elements_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Möbius function μ(x, y) of the lattice by recursive summation.
/// Throws OrderError unless x <= y.
long long mobius(const PartitionLattice& lattice, const Partition& x, const Partition& y);

} // namespace confspace
