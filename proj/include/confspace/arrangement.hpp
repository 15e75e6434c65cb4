#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "confspace/complex.hpp"
#include "confspace/group.hpp"
#include "confspace/partition.hpp"

namespace confspace {

/// Largest n accepted by configuration_arrangement (dense order matrix).
inline constexpr int kMaxArrangementN = 8;

struct ArrangementElement {
    std::string id;
    int dim = 0;
    int codim = 0;
    /// Elements with equal keys have isomorphic lower intervals.
    std::string type_key;
};

/// Intersection lattice ordered by reverse inclusion. Element 0 is 0̂ (the
/// ambient space) and x < y implies index(x) < index(y).
class ArrangementLattice {
public:
    /// leq[i][j] is the order relation. Throws StructuralError unless it is a
    /// partial order with minimum 0, compatible with the index order, and
    /// strictly increasing in codimension.
    static ArrangementLattice from_order(int ambient_dim, std::vector<ArrangementElement> elements,
                                         std::vector<std::vector<bool>> leq);

    int ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const ArrangementElement& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<ArrangementElement>& elements() const noexcept { return elements_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * elements_.size() + b]; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    std::vector<std::size_t> atoms() const;

    /// Order complex of the open interval (x, y).
    SimplicialComplex interval_complex(std::size_t x, std::size_t y) const;

private:
    int ambient_dim_ = 0;
    std::vector<ArrangementElement> elements_;
    std::vector<bool> leq_;
};

/// The arrangement of diagonals x_i = x_j in (R^d)^n; its lattice is Π_n with
/// dim V_π = d·size(π). Throws SizeLimitError for n > kMaxArrangementN.
ArrangementLattice configuration_arrangement(int n, int d);

/// All atoms have codim c and c divides codim W - codim V whenever V <= W.
bool is_c_arrangement(const ArrangementLattice& lat, int c);

struct GMContribution {
    std::size_t element = 0;
    std::string id;
    int codim = 0;
    int interval_degree = 0;     ///< r with H̃_r(Δ(0̂, V)) contributing
    std::uint64_t interval_rank = 0;
};

struct GMReport {
    std::map<int, std::uint64_t> ranks;                      ///< nonzero degrees only
    std::map<int, std::vector<GMContribution>> contributions;

    std::uint64_t rank(int degree) const;
    std::uint64_t total() const;
};

/// Cohomology ranks of the complement: 0̂ gives rank 1 in degree 0 and each
/// V > 0̂ adds rank H̃_{codim V - i - 2}(Δ(0̂, V)) to degree i. Interval
/// homology is computed once per type_key.
GMReport gm_cohomology(const ArrangementLattice& lat, Coefficients coeff);

/// Closed form for F(R^d, n): degree (d-1)(n-j) has rank Σ_{size π = j} Π (a_i - 1)!.
/// Contributions are grouped by block type. Valid for n <= 20.
GMReport config_rank_formula(int n, int d);

/// |μ(0̂, π)| = Π (a_i - 1)!, the rank of the only nonzero homology of Δ(0̂, π).
std::uint64_t partition_interval_rank(const Partition& pi);

struct EquivariantEntry {
    Partition representative;
    std::size_t stabilizer_order = 0;
    std::size_t orbit_size = 0;
    std::uint64_t interval_rank = 0;
    std::uint64_t sphere_rank = 1;
    std::uint64_t induced_dimension = 0;  ///< [G : G_V] · interval_rank · sphere_rank
    bool full_stabilizer = false;
    /// Every stabilizer element preserves orientation of R^{dn} (resp. V_π).
    bool ambient_orientation_preserved = true;
    bool subspace_orientation_preserved = true;
};

struct EquivariantGMReport {
    int n = 0;
    int d = 0;
    std::int64_t p = 0;
    std::size_t group_order = 0;
    std::map<int, std::vector<EquivariantEntry>> degrees;

    std::uint64_t rank(int degree) const;
};

/// Orbit decomposition of the GM formula for F(R^d, n) under a permutation
/// group. Interval ranks use the closed form, so Π_9 is within reach.
EquivariantGMReport equivariant_gm(int n, int d, const FiniteGroup& group, std::int64_t p);

/// Smallest positive degree (d-1)(p^k - j) whose equivariant report under
/// regular_embedding(p, k) contains a full-stabilizer orbit.
int full_stabilizer_degree(int p, int k, int d);

} // namespace confspace
