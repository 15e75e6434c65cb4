#pragma once

#include <map>
#include <optional>
#include <vector>

#include "confspace/complex.hpp"
#include "confspace/modp.hpp"
#include "confspace/smith.hpp"

namespace confspace {

/// Basis of H̃_r over F_p given by cycle representatives, together with the
/// projection from cycles to coordinates in that basis.
class CycleBasis {
public:
    CycleBasis() = default;
    CycleBasis(int degree, std::int64_t p, FpMatrix cycles, FpMatrix boundary_basis);

    int degree() const noexcept { return degree_; }
    std::int64_t prime() const noexcept { return p_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(cycles_.cols()); }
    /// Columns are cycles in C_r.
    const FpMatrix& cycles() const noexcept { return cycles_; }

    /// Coordinates of the homology class of a cycle. Throws DomainError when
    /// the vector is not in the span of cycles and boundaries.
    FpVector coordinates(const FpVector& cycle) const;

private:
    int degree_ = 0;
    std::int64_t p_ = 2;
    FpMatrix cycles_;
    FpMatrix span_;                     // [cycles | boundary basis]
    std::vector<Eigen::Index> rows_;    // rows of span_ forming an invertible block
    FpMatrix block_inverse_;
};

struct HomologyDegree {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<BigInt> torsion; ///< invariant factors > 1, divisibility ordered (Z only)
};

struct HomologySummary {
    Coefficients coeff;
    std::vector<HomologyDegree> degrees; ///< degrees -1..top, ascending
    std::map<int, CycleBasis> bases;     ///< filled over F_p when requested

    std::size_t betti(int r) const;
    std::vector<BigInt> torsion(int r) const;
    /// Degrees with nonzero betti number or torsion.
    std::vector<int> nonzero_degrees() const;
};

struct HomologyOptions {
    bool with_basis = false;
    EliminationOrder order = EliminationOrder::ByColumns;
};

/// Reduced homology. Over Z the ranks and torsion come from the invariant
/// factors of consecutive boundaries; over F_p from Gaussian elimination.
HomologySummary homology(const ChainComplex& cc, const HomologyOptions& options = {});

/// Cycle basis of H̃_r(cc; F_p). Throws DomainError over Z.
CycleBasis homology_basis(const ChainComplex& cc, int degree);

} // namespace confspace
