#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "confspace/bigint.hpp"
#include "confspace/sparse_matrix.hpp"

namespace confspace {

/// U * A * V = diag(diagonal) with U, V unimodular and d_i | d_{i+1}.
struct SNFResult {
    std::vector<BigInt> diagonal;
    IntMatrix U;
    IntMatrix V;

    std::size_t rank() const noexcept { return diagonal.size(); }
};

/// Dense Smith normal form with transforms. Pivot: smallest absolute nonzero
/// entry of the active block, leftmost column first, then topmost row.
SNFResult smith_normal_form(const SparseIntMatrix& A);
SNFResult smith_normal_form(const IntMatrix& A);

/// Checks U*A*V = diag(D), |det U| = |det V| = 1 and the divisibility chain.
bool verify_snf(const IntMatrix& A, const SNFResult& snf);

/// Nonzero invariant factors only, by sparse elimination on unit pivots with
/// a dense SNF of whatever block is left. Suited to large, very sparse inputs
/// such as simplicial boundary matrices.
std::vector<BigInt> invariant_factors(const SparseIntMatrix& A);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(IntMatrix M);

/// A row vector u and modulus m with u*A ≡ 0 (mod m) entrywise but
/// u*b ≢ 0 (mod m). m = 0 means exact equalities: u*A = 0 and u*b != 0.
struct InfeasibilityCertificate {
    IntVector u;
    BigInt modulus;
    /// Position in the Smith form that failed: either d_i ∤ (U b)_i, or an
    /// index past the rank with (U b)_i != 0.
    std::size_t index = 0;
};

struct IntegerSolution {
    IntVector x;
};

using SolveOutcome = std::variant<IntegerSolution, InfeasibilityCertificate>;

/// Integer solution of A x = b or a certificate of unsolvability. Throws
/// DomainError when b has the wrong length.
SolveOutcome solve_integer(const SparseIntMatrix& A, const IntVector& b);

bool verify_solution(const SparseIntMatrix& A, const IntVector& b, const IntVector& x);
bool verify_certificate(const SparseIntMatrix& A, const IntVector& b,
                        const InfeasibilityCertificate& cert);

} // namespace confspace
