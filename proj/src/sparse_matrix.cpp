#include "confspace/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "confspace/errors.hpp"

namespace confspace {

SparseIntMatrix SparseIntMatrix::from_triplets(Index rows, Index cols,
                                               std::vector<IntTriplet> entries) {
    if (rows < 0 || cols < 0)
        throw DomainError("negative matrix dimension");
    for (const auto& t : entries)
        if (t.row() < 0 || t.row() >= rows || t.col() < 0 || t.col() >= cols)
            throw DomainError("matrix entry (" + std::to_string(t.row()) + "," +
                              std::to_string(t.col()) + ") out of range");
    std::sort(entries.begin(), entries.end(), [](const IntTriplet& a, const IntTriplet& b) {
        return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
    });
    SparseIntMatrix m(rows, cols);
    for (auto& t : entries) {
        if (!m.entries_.empty() && m.entries_.back().row() == t.row() &&
            m.entries_.back().col() == t.col()) {
            BigInt sum = m.entries_.back().value() + t.value();
            m.entries_.back() = IntTriplet(t.row(), t.col(), sum);
        } else {
            m.entries_.push_back(std::move(t));
        }
    }
    std::erase_if(m.entries_, [](const IntTriplet& t) { return t.value() == 0; });
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& dense) {
    std::vector<IntTriplet> e;
    for (Index i = 0; i < dense.rows(); ++i)
        for (Index j = 0; j < dense.cols(); ++j)
            if (dense(i, j) != 0)
                e.emplace_back(i, j, dense(i, j));
    return from_triplets(dense.rows(), dense.cols(), std::move(e));
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix d = IntMatrix::Zero(rows_, cols_);
    for (const auto& t : entries_)
        d(t.row(), t.col()) = t.value();
    return d;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    std::vector<IntTriplet> e;
    e.reserve(entries_.size());
    for (const auto& t : entries_)
        e.emplace_back(t.col(), t.row(), t.value());
    return from_triplets(cols_, rows_, std::move(e));
}

IntVector SparseIntMatrix::multiply(const IntVector& x) const {
    if (x.size() != cols_)
        throw DomainError("matrix-vector dimension mismatch");
    IntVector y = IntVector::Zero(rows_);
    for (const auto& t : entries_)
        y(t.row()) += t.value() * x(t.col());
    return y;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DomainError("matrix product dimension mismatch");
    std::vector<std::vector<std::pair<SparseIntMatrix::Index, BigInt>>> brows(
        static_cast<std::size_t>(b.rows_));
    for (const auto& t : b.entries_)
        brows[static_cast<std::size_t>(t.row())].emplace_back(t.col(), t.value());
    std::map<std::pair<SparseIntMatrix::Index, SparseIntMatrix::Index>, BigInt> acc;
    for (const auto& t : a.entries_)
        for (const auto& [c, v] : brows[static_cast<std::size_t>(t.col())])
            acc[{t.row(), c}] += t.value() * v;
    std::vector<IntTriplet> e;
    e.reserve(acc.size());
    for (auto& [rc, v] : acc)
        e.emplace_back(rc.first, rc.second, v);
    return SparseIntMatrix::from_triplets(a.rows_, b.cols_, std::move(e));
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        const auto& x = a.entries_[i];
        const auto& y = b.entries_[i];
        if (x.row() != y.row() || x.col() != y.col() || x.value() != y.value())
            return false;
    }
    return true;
}

} // namespace confspace
