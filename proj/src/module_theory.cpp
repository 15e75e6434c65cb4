#include "confspace/module_theory.hpp"

#include <algorithm>

#include "confspace/errors.hpp"
#include "confspace/group.hpp"

namespace confspace {

using Index = Eigen::Index;

HomologyAction homology_action(const ChainComplex& cc, const ChainMap& f, int degree) {
    if (!commutes_with_boundary(cc, cc, f))
        throw StructuralError("chain map does not commute with the boundary");
    return homology_action(homology_basis(cc, degree), f);
}

HomologyAction homology_action(const CycleBasis& basis, const ChainMap& f) {
    const auto p = basis.prime();
    const FpMatrix fr = to_fp(f.at(basis.degree()), p);
    if (fr.cols() != basis.cycles().rows())
        throw StructuralError("chain map has the wrong size in degree " +
                              std::to_string(basis.degree()));
    const FpMatrix images = mul_mod_p(fr, basis.cycles(), p);
    const auto h = static_cast<Index>(basis.size());
    HomologyAction out;
    out.degree = basis.degree();
    out.p = p;
    out.matrix.resize(h, h);
    for (Index j = 0; j < h; ++j)
        out.matrix.col(j) = basis.coordinates(images.col(j));
    out.order = matrix_order(out.matrix, p);
    return out;
}

int matrix_order(const FpMatrix& M, std::int64_t p, int max_order) {
    const FpMatrix id = FpMatrix::Identity(M.rows(), M.cols());
    FpMatrix power = reduce_mod_p(M, p);
    for (int m = 1; m <= max_order; ++m) {
        if (power == id)
            return m;
        power = mul_mod_p(power, M, p);
    }
    throw DomainError("matrix order exceeds " + std::to_string(max_order));
}

std::size_t JordanType::dimension() const {
    std::size_t total = 0;
    for (int s : sizes)
        total += static_cast<std::size_t>(s);
    return total;
}

JordanType jordan_type(const FpMatrix& M, std::int64_t p) {
    require_field_prime(p);
    if (M.rows() != M.cols())
        throw PreconditionError("jordan_type needs a square matrix");
    const Index n = M.rows();
    const FpMatrix id = FpMatrix::Identity(n, n);
    if (pow_mod_p(M, p, p) != id)
        throw PreconditionError("matrix does not satisfy M^p = I over F_" + std::to_string(p));
    const FpMatrix N = reduce_mod_p(M - id, p);
    // ranks[j] = rank (M - I)^j
    std::vector<std::size_t> ranks{static_cast<std::size_t>(n)};
    FpMatrix power = id;
    for (std::int64_t j = 1; j <= p; ++j) {
        power = mul_mod_p(power, N, p);
        ranks.push_back(rank_mod_p(power, p));
    }
    if (ranks.back() != 0)
        throw std::logic_error("(M - I)^p is not zero");
    JordanType jt;
    jt.p = p;
    // at_least[j] = number of blocks of size >= j
    auto at_least = [&](std::size_t j) { return j > static_cast<std::size_t>(p) ? 0 : ranks[j - 1] - ranks[j]; };
    for (std::size_t j = static_cast<std::size_t>(p); j >= 1; --j) {
        const auto exactly = at_least(j) - at_least(j + 1);
        jt.sizes.insert(jt.sizes.end(), exactly, static_cast<int>(j));
    }
    return jt;
}

ZpModuleDescriptor zp_module_descriptor(const JordanType& jt, std::int64_t p) {
    ZpModuleDescriptor d;
    d.p = p;
    for (int s : jt.sizes) {
        if (s == p)
            ++d.free_rank;
        else if (s == 1)
            ++d.trivial_rank;
        else if (s == p - 1)
            ++d.k_multiplicity;
        else
            d.other.push_back(s);
    }
    return d;
}

bool is_in_FI_family_zp(const JordanType& jt, std::int64_t p) {
    return std::all_of(jt.sizes.begin(), jt.sizes.end(), [p](int s) { return s == p; });
}

PartitionModuleReport partition_lattice_module(std::int64_t p) {
    if (p < 3 || !is_prime(p))
        throw DomainError("partition_lattice_module needs an odd prime, got " + std::to_string(p));
    const auto lattice = PartitionLattice::build(static_cast<int>(p));
    const auto sc = proper_part_complex(lattice);
    const auto cc = chain_complex(sc, Coefficients::field(p));
    const auto group = regular_embedding(static_cast<int>(p), 1);
    const auto f = induced_chain_map(sc, vertex_map_from_permutation(sc, group.generators().front()));
    PartitionModuleReport out;
    out.p = p;
    out.action = homology_action(cc, f, static_cast<int>(p) - 3);
    out.jordan = jordan_type(out.action.matrix, p);
    out.descriptor = zp_module_descriptor(out.jordan, p);
    return out;
}

} // namespace confspace
