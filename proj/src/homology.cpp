#include "confspace/homology.hpp"

#include <algorithm>

#include "confspace/errors.hpp"

namespace confspace {

using Index = Eigen::Index;

CycleBasis::CycleBasis(int degree, std::int64_t p, FpMatrix cycles, FpMatrix boundary_basis)
    : degree_(degree), p_(p), cycles_(std::move(cycles)) {
    span_.resize(cycles_.rows(), cycles_.cols() + boundary_basis.cols());
    span_ << cycles_, boundary_basis;
    // Independent rows of span_ are the pivot columns of its transpose.
    auto ech = row_echelon(span_.transpose(), p_);
    if (static_cast<Index>(ech.pivots.size()) != span_.cols())
        throw StructuralError("cycle representatives and boundaries are not independent");
    rows_ = ech.pivots;
    FpMatrix block(span_.cols(), span_.cols());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        block.row(static_cast<Index>(i)) = span_.row(rows_[i]);
    block_inverse_ = inverse_mod_p(block, p_);
}

FpVector CycleBasis::coordinates(const FpVector& cycle) const {
    if (cycle.size() != span_.rows())
        throw DomainError("cycle has the wrong length");
    FpVector picked(static_cast<Index>(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        picked(static_cast<Index>(i)) = mod_p(cycle(rows_[i]), p_);
    FpVector y = reduce_mod_p(block_inverse_ * picked, p_);
    if (reduce_mod_p(span_ * y, p_) != reduce_mod_p(cycle, p_))
        throw DomainError("vector is not a cycle of degree " + std::to_string(degree_));
    return y.head(cycles_.cols());
}

std::size_t HomologySummary::betti(int r) const {
    for (const auto& d : degrees)
        if (d.degree == r)
            return d.betti;
    return 0;
}

std::vector<BigInt> HomologySummary::torsion(int r) const {
    for (const auto& d : degrees)
        if (d.degree == r)
            return d.torsion;
    return {};
}

std::vector<int> HomologySummary::nonzero_degrees() const {
    std::vector<int> out;
    for (const auto& d : degrees)
        if (d.betti > 0 || !d.torsion.empty())
            out.push_back(d.degree);
    return out;
}

HomologySummary homology(const ChainComplex& cc, const HomologyOptions& options) {
    HomologySummary out;
    out.coeff = cc.coefficients();
    const int top = cc.top_degree();
    // rank of ∂_r for r = 0..top+1
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
    std::vector<std::vector<BigInt>> factors(ranks.size());
    for (int r = 0; r <= top; ++r) {
        const auto d = cc.boundary(r);
        const auto slot = static_cast<std::size_t>(r + 1);
        if (out.coeff.is_integral()) {
            factors[slot] = invariant_factors(d);
            ranks[slot] = factors[slot].size();
        } else {
            ranks[slot] = sparse_rank_mod_p(d, out.coeff.p, options.order);
        }
    }
    for (int r = -1; r <= top; ++r) {
        HomologyDegree hd;
        hd.degree = r;
        const auto slot = static_cast<std::size_t>(r + 1);
        hd.betti = cc.rank(r) - ranks[slot] - ranks[slot + 1];
        for (const auto& f : factors[slot + 1])
            if (f > 1)
                hd.torsion.push_back(f);
        std::sort(hd.torsion.begin(), hd.torsion.end());
        out.degrees.push_back(std::move(hd));
    }
    if (options.with_basis) {
        if (out.coeff.is_integral())
            throw DomainError("cycle bases are only produced over F_p");
        for (const auto& d : out.degrees)
            if (d.betti > 0)
                out.bases.emplace(d.degree, homology_basis(cc, d.degree));
    }
    return out;
}

CycleBasis homology_basis(const ChainComplex& cc, int degree) {
    const auto coeff = cc.coefficients();
    if (coeff.is_integral())
        throw DomainError("cycle bases are only produced over F_p");
    const auto p = coeff.p;
    const FpMatrix cycles = nullspace_mod_p(to_fp(cc.boundary(degree), p), p);
    const FpMatrix bounds = column_basis_mod_p(to_fp(cc.boundary(degree + 1), p), p);
    FpMatrix joined(cycles.rows(), bounds.cols() + cycles.cols());
    joined << bounds, cycles;
    auto ech = row_echelon(joined, p);
    // pivots past the boundary block pick out a complement of the boundaries
    FpMatrix reps(cycles.rows(), 0);
    std::vector<Index> chosen;
    for (auto c : ech.pivots)
        if (c >= bounds.cols())
            chosen.push_back(c);
    reps.resize(cycles.rows(), static_cast<Index>(chosen.size()));
    for (std::size_t i = 0; i < chosen.size(); ++i)
        reps.col(static_cast<Index>(i)) = joined.col(chosen[i]);
    return CycleBasis(degree, p, std::move(reps), bounds);
}

} // namespace confspace
