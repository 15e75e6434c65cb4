#include "confspace/whitney.hpp"

#include <vector>

#include "confspace/complex.hpp"
#include "confspace/errors.hpp"
#include "confspace/homology.hpp"
#include "confspace/modp.hpp"

namespace confspace {

std::size_t WhitneyE2::rank(int r, int s) const {
    auto it = ranks.find({r, s});
    return it == ranks.end() ? 0 : it->second;
}

namespace {

using Chain = std::vector<std::size_t>;

void extend_chains(const PartitionLattice& lattice, Chain& current,
                   std::vector<std::vector<Chain>>& by_length) {
    const auto len = current.size();
    if (by_length.size() < len)
        by_length.resize(len);
    by_length[len - 1].push_back(current);
    for (std::size_t next = current.back() + 1; next < lattice.size(); ++next) {
        if (!lattice.leq(current.back(), next))
            continue;
        current.push_back(next);
        extend_chains(lattice, current, by_length);
        current.pop_back();
    }
}

} // namespace

WhitneyE2 whitney_e2(int n, int d, std::int64_t p, const WhitneyOptions& options) {
    if (n > options.max_n)
        throw SizeLimitError("whitney_e2 supports n <= " + std::to_string(options.max_n) +
                             " (Bell number " + std::to_string(bell_number(n)) + ")");
    require_field_prime(p);
    const auto lattice = PartitionLattice::build(n);
    WhitneyE2 out;
    out.n = n;
    out.d = d;
    out.p = p;
    out.options = options;

    auto sphere_degree = [&](std::size_t v) {
        const int size = lattice[v].size();
        return options.sphere == SphereConvention::Codimension ? d * (n - size) - 1 : d * size - 1;
    };

    // all chains in L minus 0̂, grouped by (r, s)
    std::map<Bidegree, std::vector<Chain>> chains;
    {
        std::vector<std::vector<Chain>> by_length;
        for (std::size_t v = 1; v < lattice.size(); ++v) {
            Chain c{v};
            extend_chains(lattice, c, by_length);
        }
        for (std::size_t len = 0; len < by_length.size(); ++len)
            for (auto& c : by_length[len])
                chains[{static_cast<int>(len), sphere_degree(c.back())}].push_back(std::move(c));
    }
    std::map<Bidegree, std::map<Chain, std::size_t>> index;
    for (const auto& [bd, list] : chains)
        for (std::size_t i = 0; i < list.size(); ++i)
            index[bd].emplace(list[i], i);

    auto count = [&](Bidegree bd) -> std::size_t {
        auto it = chains.find(bd);
        return it == chains.end() ? 0 : it->second.size();
    };
    // ∂ : C_{r,s} -> C_{r-1,s}
    auto boundary = [&](Bidegree bd) {
        const Bidegree lower{bd.first - 1, bd.second};
        std::vector<IntTriplet> trips;
        auto it = chains.find(bd);
        if (it != chains.end() && bd.first > 0) {
            const int r = bd.first;
            const int first_face = options.faces == WhitneyFaces::AllButTop ? 0 : 1;
            const auto& lower_index = index[lower];
            for (std::size_t col = 0; col < it->second.size(); ++col) {
                const auto& c = it->second[col];
                for (int i = first_face; i <= r - 1; ++i) {
                    Chain face = c;
                    face.erase(face.begin() + i);
                    trips.emplace_back(static_cast<std::ptrdiff_t>(lower_index.at(face)),
                                       static_cast<std::ptrdiff_t>(col), BigInt(i % 2 == 0 ? 1 : -1));
                }
            }
        }
        return SparseIntMatrix::from_triplets(static_cast<Eigen::Index>(count(lower)),
                                              static_cast<Eigen::Index>(count(bd)), trips);
    };

    std::map<Bidegree, std::size_t> rank_of_boundary;
    for (const auto& [bd, list] : chains) {
        const auto D = boundary(bd);
        rank_of_boundary[bd] = sparse_rank_mod_p(D, p);
        const auto next = boundary({bd.first + 1, bd.second});
        for (const auto& t : (D * next).entries())
            if (mod_p(t.value(), p) != 0)
                out.squares_to_zero = false;
    }
    if (out.squares_to_zero) {
        for (const auto& [bd, list] : chains) {
            const auto out_rank = rank_of_boundary[bd];
            auto in = rank_of_boundary.find({bd.first + 1, bd.second});
            const std::size_t in_rank = in == rank_of_boundary.end() ? 0 : in->second;
            const auto h = list.size() - out_rank - in_rank;
            if (h > 0)
                out.ranks[bd] = h;
        }
    }

    for (std::size_t v = 1; v < lattice.size(); ++v) {
        const auto h = homology(chain_complex(order_complex(lattice, 0, v), Coefficients::field(p)));
        for (const auto& hd : h.degrees)
            if (hd.betti > 0)
                out.expected[{hd.degree + 1, sphere_degree(v)}] += hd.betti;
    }
    return out;
}

} // namespace confspace
