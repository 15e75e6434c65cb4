#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace confspace {

/// Faces removed by the differential on a chain V_0 < ... < V_r.
enum class WhitneyFaces {
    AllButTop, ///< i = 0..r-1; the coefficient stays at V_r
    Interior,  ///< i = 1..r-1
};

/// Which sphere S(V) carries the local coefficient: degree codim V - 1 or dim V - 1.
enum class SphereConvention { Codimension, Dimension };

struct WhitneyOptions {
    WhitneyFaces faces = WhitneyFaces::AllButTop;
    SphereConvention sphere = SphereConvention::Codimension;
    int max_n = 5;
};

using Bidegree = std::pair<int, int>; ///< (r, s)

struct WhitneyE2 {
    int n = 0;
    int d = 0;
    std::int64_t p = 2;
    WhitneyOptions options;
    bool squares_to_zero = true;
    /// Homology ranks E²_{r,s}; empty when the differential does not square to zero.
    std::map<Bidegree, std::size_t> ranks;
    /// Σ_{V : s(V) = s} rank H̃_{r-1}(Δ(0̂, V); F_p), from the interval complexes.
    std::map<Bidegree, std::size_t> expected;

    std::size_t rank(int r, int s) const;
    bool matches() const { return squares_to_zero && ranks == expected; }
};

/// Whitney homology of the configuration arrangement for (R^d)^n over F_p.
/// r-chains are chains V_0 < ... < V_r in L minus 0̂, graded by the sphere
/// degree s of the top element. Throws SizeLimitError for n > options.max_n.
WhitneyE2 whitney_e2(int n, int d, std::int64_t p, const WhitneyOptions& options = {});

} // namespace confspace
