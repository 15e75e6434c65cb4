#pragma once

#include <cstdint>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/sparse_matrix.hpp"

namespace confspace {

/// Matrices over F_p hold representatives in [0, p). Products are formed in
/// 64-bit arithmetic, so p must stay below 2^15.
using FpMatrix = DenseMatrix<std::int64_t>;
using FpVector = DenseVector<std::int64_t>;

inline constexpr std::int64_t kMaxFieldPrime = 32749;

/// Throws DomainError unless p is a prime below kMaxFieldPrime.
void require_field_prime(std::int64_t p);

inline std::int64_t mod_p(std::int64_t x, std::int64_t p) {
    x %= p;
    return x < 0 ? x + p : x;
}
std::int64_t mod_p(const BigInt& x, std::int64_t p);
std::int64_t inverse_mod_p(std::int64_t a, std::int64_t p);

FpMatrix reduce_mod_p(const FpMatrix& A, std::int64_t p);
FpMatrix to_fp(const SparseIntMatrix& A, std::int64_t p);
FpMatrix mul_mod_p(const FpMatrix& A, const FpMatrix& B, std::int64_t p);
FpMatrix pow_mod_p(const FpMatrix& A, std::int64_t e, std::int64_t p);

struct Echelon {
    FpMatrix reduced;                  ///< reduced row echelon form
    std::vector<Eigen::Index> pivots;  ///< pivot column of each nonzero row
};

Echelon row_echelon(const FpMatrix& A, std::int64_t p);
std::size_t rank_mod_p(const FpMatrix& A, std::int64_t p);
/// Columns form a basis of {x : A x = 0}.
FpMatrix nullspace_mod_p(const FpMatrix& A, std::int64_t p);
/// The pivot columns of A, a basis of its column space.
FpMatrix column_basis_mod_p(const FpMatrix& A, std::int64_t p);
/// Throws DomainError when A is singular.
FpMatrix inverse_mod_p(const FpMatrix& A, std::int64_t p);

/// Elimination order for sparse rank computations.
enum class EliminationOrder {
    ByColumns, ///< pivot column by column on the matrix itself
    ByRows,    ///< pivot column by column on the transpose
};

/// Rank over F_p of a sparse integer matrix.
std::size_t sparse_rank_mod_p(const SparseIntMatrix& A, std::int64_t p,
                              EliminationOrder order = EliminationOrder::ByColumns);

} // namespace confspace
