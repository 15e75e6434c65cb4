#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "confspace/partition.hpp"

namespace confspace {

inline constexpr std::size_t kDefaultMaxGroupOrder = 100000;

/// Bijection of {1..n}; stored 0-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images0);

    static Permutation identity(int n);
    /// 1-based image list, e.g. {2,3,1}.
    static Permutation from_images(const std::vector<int>& images1);
    /// Cycle notation "(1 2 3)(4 5)"; an empty string is the identity.
    static Permutation parse_cycles(int n, std::string_view text);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i0) const { return images_[static_cast<std::size_t>(i0)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    bool is_identity() const;
    int order() const;
    /// +1 or -1.
    int sign() const;

    Partition act(const Partition& p) const;

    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Finite permutation group given by its full element list; identity first,
/// remaining elements sorted.
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup trivial(int n);
    /// Checks closure, identity and inverses unless verify is false; throws
    /// StructuralError on failure.
    static FiniteGroup from_elements(int n, std::vector<Permutation> elements,
                                     bool verify = true);

    int degree() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    bool contains(const Permutation& g) const;

private:
    friend FiniteGroup group_from_generators(int, const std::vector<Permutation>&, std::size_t);
    int n_ = 0;
    std::vector<Permutation> elements_;
    std::vector<Permutation> generators_;
};

/// Closure of the generators under composition. Throws SizeLimitError past max_order.
FiniteGroup group_from_generators(int n, const std::vector<Permutation>& gens,
                                  std::size_t max_order = kDefaultMaxGroupOrder);

/// Point i (1-based) of {1..p^k} is the vector v in F_p^k with
/// i - 1 = v_1 + v_2 p + ... + v_k p^(k-1).
std::vector<int> regular_point_vector(int p, int k, int point1);
int regular_point_index(int p, const std::vector<int>& v);

/// Translation action of (Z/p)^k on {1..p^k}; generators are translations by
/// the standard basis vectors.
FiniteGroup regular_embedding(int p, int k, int max_degree = 16);

/// Translation by a vector of F_p^k as a permutation of {1..p^k}.
Permutation regular_translation(int p, int k, const std::vector<int>& v);

/// The cyclic group generated by (1 2 ... n).
FiniteGroup cyclic_group(int n);

struct OrbitEntry {
    Partition representative;
    std::size_t representative_index = 0;
    std::size_t orbit_size = 0;
    FiniteGroup stabilizer;
};

/// One entry per orbit of the group on the lattice, ordered by representative
/// index; the representative is the orbit element with smallest index.
std::vector<OrbitEntry> orbits_and_stabilizers(const FiniteGroup& group,
                                               const PartitionLattice& lattice);

bool is_prime(long long n);

} // namespace confspace
