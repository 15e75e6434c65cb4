#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confspace/polynomial.hpp"

namespace confspace {

/// Element of H*((Z/p)^k; F_p): F_p[t_1..t_k] ⊗ Λ[e_1..e_k] for p odd
/// (deg e_i = 1, deg t_i = 2) and F_2[t_1..t_k] for p = 2 (deg t_i = 1).
/// Terms are keyed by the bitmask of the exterior monomial.
class GroupCohomologyElement {
public:
    GroupCohomologyElement() = default;
    GroupCohomologyElement(std::int64_t p, int k);

    static GroupCohomologyElement one(std::int64_t p, int k);
    static GroupCohomologyElement t(std::int64_t p, int k, int i); ///< 0-based
    /// Throws DomainError for p = 2, where e_i does not exist.
    static GroupCohomologyElement e(std::int64_t p, int k, int i);
    static GroupCohomologyElement from_polynomial(const FpPolynomial& poly);

    std::int64_t prime() const noexcept { return p_; }
    int rank() const noexcept { return k_; }
    const std::map<std::uint32_t, FpPolynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Polynomial coefficient of the empty exterior monomial.
    FpPolynomial polynomial_part() const;

    /// Cohomological degree; throws DomainError when not homogeneous. -1 for zero.
    int degree() const;
    bool is_homogeneous() const;

    GroupCohomologyElement operator+(const GroupCohomologyElement& o) const;
    GroupCohomologyElement operator-(const GroupCohomologyElement& o) const;
    GroupCohomologyElement scaled(std::int64_t c) const;

    std::string to_string() const;

    friend bool operator==(const GroupCohomologyElement&, const GroupCohomologyElement&) = default;

private:
    friend GroupCohomologyElement gc_multiply(const GroupCohomologyElement&,
                                              const GroupCohomologyElement&);
    void add(std::uint32_t mask, const FpPolynomial& poly);

    std::int64_t p_ = 2;
    int k_ = 0;
    std::map<std::uint32_t, FpPolynomial> terms_;
};

/// Graded-commutative product. Throws DomainError for mismatched (p, k).
GroupCohomologyElement gc_multiply(const GroupCohomologyElement& a, const GroupCohomologyElement& b);
GroupCohomologyElement operator*(const GroupCohomologyElement& a, const GroupCohomologyElement& b);

/// Reduced row echelon basis of the span of the vectors in F_p^k.
std::vector<std::vector<std::int64_t>> subgroup_basis(std::int64_t p, int k,
                                                      const std::vector<std::vector<std::int64_t>>& span);

/// Restriction to the subgroup spanned by the vectors. With basis b_1..b_h of
/// H, t_i maps to Σ_j (b_j)_i s_j and e_i likewise. The result lives over (p, h).
GroupCohomologyElement restrict(const GroupCohomologyElement& x,
                                const std::vector<std::vector<std::int64_t>>& span);

/// Nonzero vectors of F_p^k whose first nonzero coordinate is 1.
std::vector<std::vector<std::int64_t>> projective_points(std::int64_t p, int k);

/// Euler class ζ: Π over nonzero α of α·t (p = 2), or Π over normalized
/// representatives of (α·t)^{(p-1)/2} (p odd).
FpPolynomial euler_class_zeta(std::int64_t p, int k);
/// Same product over those α whose form does not vanish on H. Throws
/// DomainError unless 0 < dim H < k.
FpPolynomial euler_class_zeta_H(std::int64_t p, int k, const std::vector<std::vector<std::int64_t>>& span);
/// Cohomological degree of a homogeneous polynomial element.
int cohomological_degree(const FpPolynomial& poly);

struct IdealDescriptor {
    enum class Kind { Truncation, Generated };
    Kind kind = Kind::Truncation;
    std::int64_t p = 2;
    int k = 1;
    int truncation_degree = 0;
    std::vector<GroupCohomologyElement> generators;

    /// Truncations test the degree of each homogeneous component; generated
    /// ideals support a single polynomial generator (exact division).
    bool contains(const GroupCohomologyElement& x) const;
};

/// Index of F(R^d, p) under Z/p together with the certificate that the Euler
/// class of W_p^{⊕(d-1)} is not in it.
struct PrimeIndexReport {
    std::int64_t p = 2;
    int d = 2;
    IdealDescriptor truncation;
    IdealDescriptor generated;
    GroupCohomologyElement witness;  ///< t^{(d-1)(p-1)/2} (p odd), t^{(d-1)(p-1)} (p = 2)
    int witness_degree = 0;
    bool witness_in_index = true;
    /// Index of the target sphere is H^{>= (d-1)(p-1)}; it contains the witness.
    bool witness_in_sphere_index = false;
    /// No Z/p-map F(R^d, p) -> S(W_p^{⊕(d-1)}); derived from the two flags above.
    bool no_equivariant_map = false;
};

PrimeIndexReport fh_index_prime(std::int64_t p, int d);

struct IndexBounds {
    std::int64_t p = 2;
    int k = 1;
    int d = 2;
    int N = 0;                      ///< (d-1)(p^k - p^{k-1})
    int upper_containment_degree = 0;
    int nonvanishing_degree = 0;
    std::optional<int> scanned_N;   ///< orbit scan, when p^k is within the lattice cap
    bool consistent = true;
    std::string note;
};

/// Cross-checks N against full_stabilizer_degree when p^k <= max_scan_n.
IndexBounds fh_index_bounds(std::int64_t p, int k, int d, int max_scan_n = 9);

struct SWExpansion {
    int l = 1;
    int m = 1;
    int degree = 0;                         ///< (d-1)(k-1), d = 2^l, k = 2^m
    std::vector<int> weights;               ///< 2^m - 2^s for s = 0..m-1
    std::vector<std::vector<int>> candidates;
    std::vector<std::vector<int>> survivors; ///< odd multinomial
    bool nonzero_verdict = false;           ///< survivors == {w_{k-1}^{d-1}}
};

SWExpansion dual_sw_expansion(int l, int m);

/// (Σ i)! / Π i! mod 2, via pairwise disjoint binary digits.
int multinomial_mod2(const std::vector<int>& parts);

/// d(k - α(k)) + α(k) - 1; throws DomainError unless d is a power of 2.
long long chisholm_bound(long long d, long long k);

} // namespace confspace
