#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

#include "confspace/bigint.hpp"

namespace confspace {

using IntTriplet = Eigen::Triplet<BigInt, std::ptrdiff_t>;

/// Integer matrix in triplet form. Entries are kept sorted by (row, col), with
/// no duplicates and no stored zeros.
class SparseIntMatrix {
public:
    using Index = std::ptrdiff_t;

    SparseIntMatrix() = default;
    SparseIntMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

    /// Duplicate coordinates are summed; zeros are dropped; throws
    /// DomainError on out-of-range indices.
    static SparseIntMatrix from_triplets(Index rows, Index cols, std::vector<IntTriplet> entries);
    static SparseIntMatrix from_dense(const IntMatrix& dense);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    const std::vector<IntTriplet>& entries() const noexcept { return entries_; }

    IntMatrix to_dense() const;
    SparseIntMatrix transpose() const;
    IntVector multiply(const IntVector& x) const;
    /// Product with a matrix; zero-sized operands are allowed.
    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
    bool is_zero() const noexcept { return entries_.empty(); }

    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<IntTriplet> entries_;
};

} // namespace confspace
