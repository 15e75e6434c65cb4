#include "confspace/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "confspace/errors.hpp"
#include "confspace/modp.hpp"

namespace confspace {

Coefficients Coefficients::field(std::int64_t prime) {
    require_field_prime(prime);
    return {prime};
}

namespace {

void add_faces(const SimplicialComplex::Simplex& s,
               std::vector<std::set<SimplicialComplex::Simplex>>& acc) {
    // all nonempty subsets
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        SimplicialComplex::Simplex f;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t{1} << i))
                f.push_back(s[i]);
        const auto d = f.size() - 1;
        if (acc.size() <= d)
            acc.resize(d + 1);
        acc[d].insert(std::move(f));
    }
}

bool strictly_increasing(const SimplicialComplex::Simplex& s) {
    return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<Simplex>& facets) {
    std::vector<std::set<Simplex>> acc;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (f.empty())
            continue;
        if (!strictly_increasing(f))
            throw StructuralError("facet repeats a vertex");
        if (f.front() < 0 || f.back() >= static_cast<int>(vertices.size()))
            throw StructuralError("facet vertex index out of range");
        if (f.size() > 20)
            throw SizeLimitError("facet dimension above 19");
        add_faces(f, acc);
    }
    SimplicialComplex sc;
    sc.vertices_ = std::move(vertices);
    for (auto& layer : acc)
        sc.simplices_.emplace_back(layer.begin(), layer.end());
    sc.build_lookup();
    return sc;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertices,
                                                    std::vector<std::vector<Simplex>> simplices_by_dim) {
    SimplicialComplex sc;
    sc.vertices_ = std::move(vertices);
    while (!simplices_by_dim.empty() && simplices_by_dim.back().empty())
        simplices_by_dim.pop_back();
    for (std::size_t d = 0; d < simplices_by_dim.size(); ++d) {
        auto& layer = simplices_by_dim[d];
        for (const auto& s : layer) {
            if (s.size() != d + 1 || !strictly_increasing(s))
                throw StructuralError("simplex in layer " + std::to_string(d) +
                                      " is not a strictly increasing (d+1)-set");
            if (s.front() < 0 || s.back() >= static_cast<int>(sc.vertices_.size()))
                throw StructuralError("simplex vertex index out of range");
        }
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    sc.simplices_ = std::move(simplices_by_dim);
    sc.build_lookup();
    for (std::size_t d = 1; d < sc.simplices_.size(); ++d)
        for (const auto& s : sc.simplices_[d])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                if (!sc.lookup_[d - 1].count(f))
                    throw StructuralError("simplex list is not closed under faces");
            }
    return sc;
}

void SimplicialComplex::build_lookup() {
    lookup_.assign(simplices_.size(), {});
    for (std::size_t d = 0; d < simplices_.size(); ++d)
        for (std::size_t i = 0; i < simplices_[d].size(); ++i)
            lookup_[d].emplace(simplices_[d][i], i);
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim > dimension())
        return none;
    return simplices_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim == -1)
        return 1;
    return simplices(dim).size();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > lookup_.size())
        return std::nullopt;
    const auto& m = lookup_[s.size() - 1];
    auto it = m.find(s);
    if (it == m.end())
        return std::nullopt;
    return it->second;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (std::size_t d = 0; d < simplices_.size(); ++d) {
        std::set<Simplex> covered;
        if (d + 1 < simplices_.size())
            for (const auto& s : simplices_[d + 1])
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex f = s;
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                    covered.insert(std::move(f));
                }
        for (const auto& s : simplices_[d])
            if (!covered.count(s))
                out.push_back(s);
    }
    return out;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
    long long chi = -1;
    for (std::size_t d = 0; d < simplices_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices_[d].size());
    return chi;
}

SimplicialComplex order_complex(std::vector<std::string> labels,
                                const std::function<bool(std::size_t, std::size_t)>& less) {
    const std::size_t n = labels.size();
    std::vector<std::vector<int>> above(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (less(i, j))
                above[i].push_back(static_cast<int>(j));

    std::vector<std::vector<SimplicialComplex::Simplex>> layers;
    SimplicialComplex::Simplex chain;
    std::function<void(int)> extend = [&](int v) {
        chain.push_back(v);
        if (layers.size() < chain.size())
            layers.resize(chain.size());
        layers[chain.size() - 1].push_back(chain);
        // the order is transitive, so comparing with the last element suffices
        for (int w : above[static_cast<std::size_t>(v)])
            extend(w);
        chain.pop_back();
    };
    for (std::size_t v = 0; v < n; ++v)
        extend(static_cast<int>(v));
    for (auto& layer : layers)
        std::sort(layer.begin(), layer.end());
    return SimplicialComplex::from_simplices(std::move(labels), std::move(layers));
}

SimplicialComplex order_complex(const PartitionLattice& lattice, std::size_t x, std::size_t y) {
    if (x == y || !lattice.leq(x, y))
        throw OrderError("order_complex: " + lattice[x].to_string() + " is not strictly below " +
                         lattice[y].to_string());
    const auto elems = lattice.interval(x, y, true);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (auto e : elems)
        labels.push_back(lattice[e].to_string());
    auto sc = order_complex(std::move(labels), [&](std::size_t a, std::size_t b) {
        return elems[a] != elems[b] && lattice.leq(elems[a], elems[b]);
    });
    sc.set_vertex_origin(elems);
    return sc;
}

SimplicialComplex proper_part_complex(const PartitionLattice& lattice) {
    if (lattice.size() == 1)
        return {};
    return order_complex(lattice, lattice.bottom(), lattice.top());
}

ChainComplex::ChainComplex(Coefficients coeff, std::vector<std::size_t> ranks,
                           std::vector<SparseIntMatrix> boundaries)
    : coeff_(coeff), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty())
        ranks_.push_back(0);
    if (boundaries_.size() + 1 != ranks_.size())
        throw StructuralError("chain complex needs one boundary per degree >= 0");
    for (std::size_t r = 0; r < boundaries_.size(); ++r)
        if (boundaries_[r].cols() != static_cast<std::ptrdiff_t>(ranks_[r + 1]) ||
            boundaries_[r].rows() != static_cast<std::ptrdiff_t>(ranks_[r]))
            throw StructuralError("boundary " + std::to_string(r) + " has the wrong shape");
}

std::size_t ChainComplex::rank(int r) const {
    if (r < -1 || r > top_degree())
        return 0;
    return ranks_[static_cast<std::size_t>(r + 1)];
}

SparseIntMatrix ChainComplex::boundary(int r) const {
    if (r >= 0 && r <= top_degree())
        return boundaries_[static_cast<std::size_t>(r)];
    return SparseIntMatrix(static_cast<std::ptrdiff_t>(rank(r - 1)),
                           static_cast<std::ptrdiff_t>(rank(r)));
}

namespace {

bool is_zero_over(const SparseIntMatrix& m, Coefficients coeff) {
    if (coeff.is_integral())
        return m.is_zero();
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [&](const IntTriplet& t) { return mod_p(t.value(), coeff.p) == 0; });
}

} // namespace

bool ChainComplex::boundary_squares_to_zero() const {
    for (int r = 1; r <= top_degree(); ++r)
        if (!is_zero_over(boundary(r - 1) * boundary(r), coeff_))
            return false;
    return true;
}

ChainComplex chain_complex(const SimplicialComplex& sc, Coefficients coeff, bool empty_convention) {
    std::vector<std::size_t> ranks;
    std::vector<SparseIntMatrix> boundaries;
    if (sc.empty()) {
        ranks.push_back(empty_convention ? 1 : 0);
        return ChainComplex(coeff, std::move(ranks), {});
    }
    ranks.push_back(1);
    for (int d = 0; d <= sc.dimension(); ++d)
        ranks.push_back(sc.count(d));

    // augmentation
    {
        std::vector<IntTriplet> e;
        for (std::size_t j = 0; j < sc.count(0); ++j)
            e.emplace_back(0, static_cast<std::ptrdiff_t>(j), BigInt(1));
        boundaries.push_back(SparseIntMatrix::from_triplets(
            1, static_cast<std::ptrdiff_t>(sc.count(0)), std::move(e)));
    }
    for (int d = 1; d <= sc.dimension(); ++d) {
        std::vector<IntTriplet> e;
        const auto& layer = sc.simplices(d);
        for (std::size_t j = 0; j < layer.size(); ++j) {
            const auto& s = layer[j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                auto row = sc.index_of(face);
                if (!row)
                    throw StructuralError("complex is not closed under faces");
                e.emplace_back(static_cast<std::ptrdiff_t>(*row), static_cast<std::ptrdiff_t>(j),
                               BigInt(i % 2 == 0 ? 1 : -1));
            }
        }
        boundaries.push_back(SparseIntMatrix::from_triplets(
            static_cast<std::ptrdiff_t>(sc.count(d - 1)), static_cast<std::ptrdiff_t>(layer.size()),
            std::move(e)));
    }
    ChainComplex cc(coeff, std::move(ranks), std::move(boundaries));
    return cc;
}

SparseIntMatrix ChainMap::at(int r) const {
    if (r + 1 < 0 || r + 1 >= static_cast<int>(maps.size()))
        return {};
    return maps[static_cast<std::size_t>(r + 1)];
}

ChainMap operator*(const ChainMap& f, const ChainMap& g) {
    if (f.maps.size() != g.maps.size())
        throw StructuralError("composing chain maps of different length");
    ChainMap out;
    for (std::size_t i = 0; i < f.maps.size(); ++i)
        out.maps.push_back(f.maps[i] * g.maps[i]);
    return out;
}

bool ChainMap::is_identity() const {
    for (const auto& m : maps) {
        if (m.rows() != m.cols() || static_cast<std::ptrdiff_t>(m.nonzeros()) != m.rows())
            return false;
        for (const auto& t : m.entries())
            if (t.row() != t.col() || t.value() != 1)
                return false;
    }
    return true;
}

ChainMap induced_chain_map(const SimplicialComplex& sc, const std::vector<int>& vertex_map) {
    if (vertex_map.size() != sc.vertices().size())
        throw StructuralError("vertex map has " + std::to_string(vertex_map.size()) +
                              " entries for " + std::to_string(sc.vertices().size()) + " vertices");
    ChainMap f;
    f.maps.push_back(SparseIntMatrix::from_triplets(1, 1, {IntTriplet(0, 0, BigInt(1))}));
    for (int d = 0; d <= sc.dimension(); ++d) {
        const auto& layer = sc.simplices(d);
        std::vector<IntTriplet> e;
        for (std::size_t j = 0; j < layer.size(); ++j) {
            std::vector<int> image;
            for (int v : layer[j])
                image.push_back(vertex_map[static_cast<std::size_t>(v)]);
            // parity of the sorting permutation
            int sign = 1;
            for (std::size_t a = 0; a < image.size(); ++a)
                for (std::size_t b = a + 1; b < image.size(); ++b)
                    if (image[a] > image[b])
                        sign = -sign;
            std::sort(image.begin(), image.end());
            auto idx = std::adjacent_find(image.begin(), image.end()) == image.end()
                           ? sc.index_of(image)
                           : std::nullopt;
            if (!idx) {
                std::string name;
                for (int v : layer[j])
                    name += (name.empty() ? "" : ", ") + sc.vertices()[static_cast<std::size_t>(v)];
                throw StructuralError("vertex map is not simplicial: the image of {" + name +
                                      "} is not a simplex");
            }
            e.emplace_back(static_cast<std::ptrdiff_t>(*idx), static_cast<std::ptrdiff_t>(j),
                           BigInt(sign));
        }
        const auto n = static_cast<std::ptrdiff_t>(layer.size());
        f.maps.push_back(SparseIntMatrix::from_triplets(n, n, std::move(e)));
    }
    return f;
}

std::vector<int> vertex_map_from_permutation(const SimplicialComplex& sc, const Permutation& g) {
    std::unordered_map<std::string, int> by_label;
    for (std::size_t i = 0; i < sc.vertices().size(); ++i)
        by_label.emplace(sc.vertices()[i], static_cast<int>(i));
    std::vector<int> out;
    out.reserve(sc.vertices().size());
    for (const auto& label : sc.vertices()) {
        auto image = g.act(Partition::parse(label)).to_string();
        auto it = by_label.find(image);
        if (it == by_label.end())
            throw StructuralError("permutation " + g.to_cycle_string() + " sends vertex " + label +
                                  " outside the complex");
        out.push_back(it->second);
    }
    return out;
}

bool commutes_with_boundary(const ChainComplex& source, const ChainComplex& target,
                            const ChainMap& f) {
    const auto coeff = source.coefficients();
    for (int r = 0; r <= source.top_degree(); ++r) {
        auto lhs = target.boundary(r) * f.at(r);
        auto rhs = f.at(r - 1) * source.boundary(r);
        std::vector<IntTriplet> diff(lhs.entries());
        for (const auto& t : rhs.entries())
            diff.emplace_back(t.row(), t.col(), BigInt(-t.value()));
        auto d = SparseIntMatrix::from_triplets(lhs.rows(), lhs.cols(), std::move(diff));
        if (!is_zero_over(d, coeff))
            return false;
    }
    return true;
}

} // namespace confspace
