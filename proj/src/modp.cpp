#include "confspace/modp.hpp"

#include <algorithm>
#include <utility>

#include "confspace/errors.hpp"
#include "confspace/group.hpp"

namespace confspace {

using Index = Eigen::Index;

void require_field_prime(std::int64_t p) {
    if (p >= kMaxFieldPrime || !is_prime(p))
        throw DomainError("coefficient field F_p needs a prime p < " +
                          std::to_string(kMaxFieldPrime) + ", got " + std::to_string(p));
}

std::int64_t mod_p(const BigInt& x, std::int64_t p) {
    BigInt r = x % p;
    if (r < 0)
        r += p;
    return static_cast<std::int64_t>(r);
}

std::int64_t inverse_mod_p(std::int64_t a, std::int64_t p) {
    a = mod_p(a, p);
    if (a == 0)
        throw DomainError("inverse of zero in F_p");
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

FpMatrix reduce_mod_p(const FpMatrix& A, std::int64_t p) {
    return A.unaryExpr([p](std::int64_t x) { return mod_p(x, p); });
}

FpMatrix to_fp(const SparseIntMatrix& A, std::int64_t p) {
    FpMatrix M = FpMatrix::Zero(A.rows(), A.cols());
    for (const auto& t : A.entries())
        M(t.row(), t.col()) = mod_p(t.value(), p);
    return M;
}

FpMatrix mul_mod_p(const FpMatrix& A, const FpMatrix& B, std::int64_t p) {
    return reduce_mod_p(A * B, p);
}

FpMatrix pow_mod_p(const FpMatrix& A, std::int64_t e, std::int64_t p) {
    if (A.rows() != A.cols())
        throw DomainError("matrix power of a non-square matrix");
    FpMatrix result = FpMatrix::Identity(A.rows(), A.cols());
    FpMatrix base = reduce_mod_p(A, p);
    while (e > 0) {
        if (e & 1)
            result = mul_mod_p(result, base, p);
        base = mul_mod_p(base, base, p);
        e >>= 1;
    }
    return result;
}

Echelon row_echelon(const FpMatrix& A, std::int64_t p) {
    Echelon out;
    FpMatrix R = reduce_mod_p(A, p);
    Index row = 0;
    for (Index col = 0; col < R.cols() && row < R.rows(); ++col) {
        Index pivot = -1;
        for (Index i = row; i < R.rows(); ++i)
            if (R(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        R.row(pivot).swap(R.row(row));
        const std::int64_t inv = inverse_mod_p(R(row, col), p);
        R.row(row) = (R.row(row) * inv).unaryExpr([p](std::int64_t x) { return x % p; });
        for (Index i = 0; i < R.rows(); ++i) {
            if (i == row || R(i, col) == 0)
                continue;
            const std::int64_t f = R(i, col);
            R.row(i) = (R.row(i) - f * R.row(row)).unaryExpr([p](std::int64_t x) { return mod_p(x, p); });
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(R);
    return out;
}

std::size_t rank_mod_p(const FpMatrix& A, std::int64_t p) { return row_echelon(A, p).pivots.size(); }

FpMatrix nullspace_mod_p(const FpMatrix& A, std::int64_t p) {
    auto ech = row_echelon(A, p);
    const Index n = A.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : ech.pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)])
            free_cols.push_back(c);
    FpMatrix N = FpMatrix::Zero(n, static_cast<Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const auto f = free_cols[k];
        const auto kk = static_cast<Index>(k);
        N(f, kk) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            N(ech.pivots[r], kk) = mod_p(-ech.reduced(static_cast<Index>(r), f), p);
    }
    return N;
}

FpMatrix column_basis_mod_p(const FpMatrix& A, std::int64_t p) {
    auto ech = row_echelon(A, p);
    FpMatrix B(A.rows(), static_cast<Index>(ech.pivots.size()));
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
        B.col(static_cast<Index>(k)) = reduce_mod_p(A.col(ech.pivots[k]), p);
    return B;
}

FpMatrix inverse_mod_p(const FpMatrix& A, std::int64_t p) {
    if (A.rows() != A.cols())
        throw DomainError("inverse of a non-square matrix");
    const Index n = A.rows();
    FpMatrix aug(n, 2 * n);
    aug << reduce_mod_p(A, p), FpMatrix::Identity(n, n);
    auto ech = row_echelon(aug, p);
    if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] >= n))
        throw DomainError("matrix is singular over F_" + std::to_string(p));
    return ech.reduced.rightCols(n);
}

namespace {

using ModRow = std::vector<std::pair<std::ptrdiff_t, std::int64_t>>;

std::size_t sparse_rank_rows(std::vector<ModRow> rows, std::size_t ncols, std::int64_t p) {
    // Pivot column by column; each pivot clears the column from every other
    // live row, then the pivot row is retired.
    std::vector<std::vector<std::size_t>> col_rows(ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& e : rows[r])
            col_rows[static_cast<std::size_t>(e.first)].push_back(r);
    std::vector<bool> alive(rows.size(), true);
    auto entry = [&](std::size_t r, std::size_t c) -> std::int64_t {
        const auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::ptrdiff_t>(c),
                                   [](const auto& e, std::ptrdiff_t x) { return e.first < x; });
        return it != row.end() && it->first == static_cast<std::ptrdiff_t>(c) ? it->second : 0;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        auto& list = col_rows[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::erase_if(list, [&](std::size_t r) { return !alive[r] || entry(r, c) == 0; });
        if (list.empty())
            continue;
        std::size_t pivot = list.front();
        for (auto r : list)
            if (rows[r].size() < rows[pivot].size())
                pivot = r;
        const std::int64_t inv = inverse_mod_p(entry(pivot, c), p);
        const ModRow& prow = rows[pivot];
        for (auto r : list) {
            if (r == pivot)
                continue;
            const std::int64_t f = entry(r, c) * inv % p;
            ModRow out;
            out.reserve(rows[r].size() + prow.size());
            auto a = std::as_const(rows[r]).begin();
            auto b = prow.begin();
            while (a != rows[r].end() || b != prow.end()) {
                if (b == prow.end() || (a != rows[r].end() && a->first < b->first)) {
                    out.push_back(*a++);
                } else if (a == rows[r].end() || b->first < a->first) {
                    out.emplace_back(b->first, mod_p(-f * b->second, p));
                    col_rows[static_cast<std::size_t>(b->first)].push_back(r);
                    ++b;
                } else {
                    std::int64_t v = mod_p(a->second - f * b->second, p);
                    if (v != 0)
                        out.emplace_back(a->first, v);
                    ++a;
                    ++b;
                }
            }
            rows[r] = std::move(out);
        }
        alive[pivot] = false;
        rows[pivot].clear();
        list.clear();
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t sparse_rank_mod_p(const SparseIntMatrix& A, std::int64_t p, EliminationOrder order) {
    const SparseIntMatrix M = order == EliminationOrder::ByColumns ? A : A.transpose();
    std::vector<ModRow> rows(static_cast<std::size_t>(M.rows()));
    for (const auto& t : M.entries()) {
        const auto v = mod_p(t.value(), p);
        if (v != 0)
            rows[static_cast<std::size_t>(t.row())].emplace_back(t.col(), v);
    }
    return sparse_rank_rows(std::move(rows), static_cast<std::size_t>(M.cols()), p);
}

} // namespace confspace
