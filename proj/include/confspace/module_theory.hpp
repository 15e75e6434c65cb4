#pragma once

#include <cstdint>
#include <vector>

#include "confspace/complex.hpp"
#include "confspace/homology.hpp"
#include "confspace/modp.hpp"

namespace confspace {

/// Matrix of a chain automorphism on a cycle basis of H̃_degree over F_p.
struct HomologyAction {
    int degree = 0;
    std::int64_t p = 2;
    FpMatrix matrix;
    /// Multiplicative order of matrix.
    int order = 1;
};

/// Throws StructuralError when f does not commute with the boundary.
HomologyAction homology_action(const ChainComplex& cc, const ChainMap& f, int degree);
HomologyAction homology_action(const CycleBasis& basis, const ChainMap& f);

/// Multiplicative order of an invertible matrix over F_p; throws DomainError
/// past max_order.
int matrix_order(const FpMatrix& M, std::int64_t p, int max_order = 100000);

struct JordanType {
    std::int64_t p = 2;
    std::vector<int> sizes; ///< descending

    std::size_t dimension() const;
    friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Block sizes of the nilpotent M - I for M with M^p = I. Throws
/// PreconditionError when M^p != I.
JordanType jordan_type(const FpMatrix& M, std::int64_t p);

struct ZpModuleDescriptor {
    std::int64_t p = 2;
    std::size_t free_rank = 0;
    std::size_t k_multiplicity = 0;
    std::size_t trivial_rank = 0;
    std::vector<int> other;

    friend bool operator==(const ZpModuleDescriptor&, const ZpModuleDescriptor&) = default;
};

/// For p = 2 the augmentation kernel is trivial, so size-1 blocks count as trivial.
ZpModuleDescriptor zp_module_descriptor(const JordanType& jt, std::int64_t p);

/// True iff every block has size p, i.e. the module is free.
bool is_in_FI_family_zp(const JordanType& jt, std::int64_t p);

/// The Z/p-action of (1 2 ... p) on H̃_{p-3}(Δ(Π̄_p); F_p).
struct PartitionModuleReport {
    std::int64_t p = 3;
    HomologyAction action;
    JordanType jordan;
    ZpModuleDescriptor descriptor;
};

PartitionModuleReport partition_lattice_module(std::int64_t p);

} // namespace confspace
