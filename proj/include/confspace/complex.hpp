#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confspace/group.hpp"
#include "confspace/partition.hpp"
#include "confspace/sparse_matrix.hpp"

namespace confspace {

/// Coefficient tag: p == 0 means the integers, otherwise the prime field F_p.
struct Coefficients {
    std::int64_t p = 0;

    static Coefficients integers() { return {0}; }
    static Coefficients field(std::int64_t prime);

    bool is_integral() const noexcept { return p == 0; }
    std::string name() const { return p == 0 ? "Z" : "F" + std::to_string(p); }

    friend bool operator==(Coefficients, Coefficients) = default;
};

/// Finite simplicial complex on an indexed vertex set. Simplices are stored
/// as strictly increasing vertex index lists; the set is closed under faces.
class SimplicialComplex {
public:
    using Simplex = std::vector<int>;

    SimplicialComplex() = default;

    /// Adds all faces of the given facets.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         const std::vector<Simplex>& facets);
    /// Takes an explicit face-closed simplex list; throws StructuralError when
    /// a face is missing or a simplex is not strictly increasing.
    static SimplicialComplex from_simplices(std::vector<std::string> vertices,
                                            std::vector<std::vector<Simplex>> simplices_by_dim);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<std::vector<Simplex>>& simplices_by_dim() const noexcept { return simplices_; }
    const std::vector<Simplex>& simplices(int dim) const;

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
    bool empty() const noexcept { return simplices_.empty(); }
    std::size_t count(int dim) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    std::vector<Simplex> facets() const;

    /// Σ_{r >= -1} (-1)^r f_r with f_{-1} = 1.
    long long reduced_euler_characteristic() const;

    /// Lattice indices of the vertices when the complex came from a lattice.
    const std::vector<std::size_t>& vertex_origin() const noexcept { return origin_; }
    void set_vertex_origin(std::vector<std::size_t> origin) { origin_ = std::move(origin); }

private:
    void build_lookup();

    std::vector<std::string> vertices_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> lookup_;
    std::vector<std::size_t> origin_;
};

/// Order complex of a finite poset given by its elements (already sorted so
/// that x < y implies position(x) < position(y)) and a strict order test.
SimplicialComplex order_complex(std::vector<std::string> labels,
                                const std::function<bool(std::size_t, std::size_t)>& less);

/// Δ(x, y): the order complex of the open interval (x, y) of a partition
/// lattice. Throws OrderError unless x < y; an empty interval gives the empty
/// complex.
SimplicialComplex order_complex(const PartitionLattice& lattice, std::size_t x, std::size_t y);
/// Δ(Π̄_n), the order complex of the proper part.
SimplicialComplex proper_part_complex(const PartitionLattice& lattice);

/// Reduced chain complex, degrees -1..dim. boundary(0) is the augmentation.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(Coefficients coeff, std::vector<std::size_t> ranks,
                 std::vector<SparseIntMatrix> boundaries);

    Coefficients coefficients() const noexcept { return coeff_; }
    /// Highest degree with a nonzero chain group, or -1.
    int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 2; }
    /// Rank of C_r; 0 outside the stored range.
    std::size_t rank(int r) const;
    /// ∂_r : C_r -> C_{r-1}; a zero matrix of the right shape outside the stored range.
    SparseIntMatrix boundary(int r) const;

    /// ∂_{r-1} ∂_r = 0 for all r, over the coefficient ring.
    bool boundary_squares_to_zero() const;

private:
    Coefficients coeff_;
    std::vector<std::size_t> ranks_;          // ranks_[r + 1] = rank C_r
    std::vector<SparseIntMatrix> boundaries_; // boundaries_[r] = ∂_r
};

/// Simplicial chain complex with alternating-sign boundary on sorted vertices,
/// augmented to degree -1. With empty_convention set, the empty complex has
/// C_{-1} of rank 1 (so H̃_{-1} = R); without it, C_{-1} = 0.
ChainComplex chain_complex(const SimplicialComplex& sc, Coefficients coeff,
                           bool empty_convention = true);

/// Chain map given degreewise; maps[r + 1] acts on C_r for r >= -1.
struct ChainMap {
    std::vector<SparseIntMatrix> maps;

    int top_degree() const noexcept { return static_cast<int>(maps.size()) - 2; }
    SparseIntMatrix at(int r) const;
    friend ChainMap operator*(const ChainMap& f, const ChainMap& g);
    bool is_identity() const;
};

/// Degreewise signed permutation matrices of the automorphism induced by a
/// vertex bijection; the sign is the parity of sorting the image vertices.
/// Throws StructuralError naming the first simplex whose image is missing.
ChainMap induced_chain_map(const SimplicialComplex& sc, const std::vector<int>& vertex_map);

/// Vertex bijection induced by a permutation of [n] on a complex whose vertex
/// labels are partitions of [n].
std::vector<int> vertex_map_from_permutation(const SimplicialComplex& sc, const Permutation& g);

/// ∂^tgt_r f_r = f_{r-1} ∂^src_r in every degree, over the source coefficients.
bool commutes_with_boundary(const ChainComplex& source, const ChainComplex& target,
                            const ChainMap& f);

} // namespace confspace
