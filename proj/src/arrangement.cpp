#include "confspace/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "confspace/errors.hpp"
#include "confspace/homology.hpp"

namespace confspace {

ArrangementLattice ArrangementLattice::from_order(int ambient_dim, std::vector<ArrangementElement> elements,
                                                  std::vector<std::vector<bool>> leq) {
    const std::size_t n = elements.size();
    if (n == 0)
        throw StructuralError("an arrangement lattice needs at least the ambient space");
    if (leq.size() != n)
        throw StructuralError("order matrix has the wrong size");
    ArrangementLattice out;
    out.ambient_dim_ = ambient_dim;
    out.leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n)
            throw StructuralError("order matrix has the wrong size");
        for (std::size_t j = 0; j < n; ++j)
            out.leq_[i * n + j] = leq[i][j];
    }
    if (elements[0].codim != 0)
        throw StructuralError("element 0 must be the ambient space with codim 0");
    for (std::size_t i = 0; i < n; ++i) {
        if (!out.leq_[i * n + i])
            throw StructuralError("order is not reflexive at " + elements[i].id);
        if (!out.leq_[i])
            throw StructuralError("element 0 is not below " + elements[i].id);
        if (elements[i].dim + elements[i].codim != ambient_dim)
            throw StructuralError("dim + codim != ambient dimension for " + elements[i].id);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !out.leq_[i * n + j])
                continue;
            if (j < i)
                throw StructuralError("index order does not extend the lattice order at " +
                                      elements[j].id);
            if (elements[i].codim >= elements[j].codim)
                throw StructuralError("codimension does not increase from " + elements[i].id +
                                      " to " + elements[j].id);
            for (std::size_t k = 0; k < n; ++k)
                if (out.leq_[j * n + k] && !out.leq_[i * n + k])
                    throw StructuralError("order is not transitive at " + elements[j].id);
        }
        if (elements[i].type_key.empty())
            elements[i].type_key = elements[i].id;
    }
    out.elements_ = std::move(elements);
    return out;
}

std::vector<std::size_t> ArrangementLattice::atoms() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 1; v < size(); ++v) {
        bool atom = true;
        for (std::size_t w = 1; w < v && atom; ++w)
            atom = !less(w, v);
        if (atom)
            out.push_back(v);
    }
    return out;
}

SimplicialComplex ArrangementLattice::interval_complex(std::size_t x, std::size_t y) const {
    if (!less(x, y))
        throw OrderError("interval (" + elements_[x].id + ", " + elements_[y].id + ") is not proper");
    std::vector<std::size_t> inside;
    for (std::size_t z = x + 1; z < y; ++z)
        if (less(x, z) && less(z, y))
            inside.push_back(z);
    std::vector<std::string> labels;
    for (auto z : inside)
        labels.push_back(elements_[z].id);
    auto sc = order_complex(std::move(labels), [&](std::size_t a, std::size_t b) {
        return less(inside[a], inside[b]);
    });
    sc.set_vertex_origin(inside);
    return sc;
}

ArrangementLattice configuration_arrangement(int n, int d) {
    if (n > kMaxArrangementN)
        throw SizeLimitError("configuration arrangement for n = " + std::to_string(n) +
                             " exceeds the cap n <= " + std::to_string(kMaxArrangementN) +
                             " (Bell number " + std::to_string(bell_number(n)) + ")");
    if (n < 1 || d < 1)
        throw DomainError("configuration arrangement needs n >= 1 and d >= 1");
    const auto lattice = PartitionLattice::build(n);
    const std::size_t size = lattice.size();
    std::vector<ArrangementElement> elements;
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i) {
        const auto& pi = lattice[i];
        ArrangementElement e;
        e.id = pi.to_string();
        e.dim = d * pi.size();
        e.codim = d * (n - pi.size());
        for (int s : pi.block_sizes())
            e.type_key += std::to_string(s) + ",";
        elements.push_back(std::move(e));
        for (std::size_t j = i; j < size; ++j)
            leq[i][j] = lattice.leq(i, j);
    }
    return ArrangementLattice::from_order(d * n, std::move(elements), std::move(leq));
}

bool is_c_arrangement(const ArrangementLattice& lat, int c) {
    for (auto a : lat.atoms())
        if (lat[a].codim != c)
            return false;
    for (std::size_t v = 0; v < lat.size(); ++v)
        for (std::size_t w = v; w < lat.size(); ++w)
            if (lat.leq(v, w) && (lat[w].codim - lat[v].codim) % c != 0)
                return false;
    return true;
}

std::uint64_t GMReport::rank(int degree) const {
    auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
}

std::uint64_t GMReport::total() const {
    std::uint64_t t = 0;
    for (const auto& [deg, r] : ranks)
        t += r;
    return t;
}

GMReport gm_cohomology(const ArrangementLattice& lat, Coefficients coeff) {
    GMReport out;
    out.ranks[0] = 1;
    out.contributions[0].push_back({0, lat[0].id, 0, -2, 1});
    std::map<std::string, std::vector<HomologyDegree>> cache;
    for (std::size_t v = 1; v < lat.size(); ++v) {
        const auto& elem = lat[v];
        auto it = cache.find(elem.type_key);
        if (it == cache.end()) {
            auto h = homology(chain_complex(lat.interval_complex(0, v), coeff));
            it = cache.emplace(elem.type_key, std::move(h.degrees)).first;
        }
        for (const auto& hd : it->second) {
            if (hd.betti == 0)
                continue;
            const int degree = elem.codim - hd.degree - 2;
            out.ranks[degree] += hd.betti;
            out.contributions[degree].push_back({v, elem.id, elem.codim, hd.degree, hd.betti});
        }
    }
    return out;
}

namespace {

std::uint64_t factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Integer partitions of n into parts <= max_part, descending.
void integer_partitions(int n, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        current.push_back(part);
        integer_partitions(n - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

GMReport config_rank_formula(int n, int d) {
    if (n < 1 || n > 20)
        throw SizeLimitError("config_rank_formula supports 1 <= n <= 20, got " + std::to_string(n));
    if (d < 1)
        throw DomainError("config_rank_formula needs d >= 1");
    GMReport out;
    std::vector<std::vector<int>> types;
    std::vector<int> current;
    integer_partitions(n, n, current, types);
    for (const auto& type : types) {
        const int j = static_cast<int>(type.size());
        // number of set partitions with this block type: n! / (Π a_i! Π m_s!)
        std::uint64_t count = factorial(n);
        std::map<int, int> mult;
        for (int a : type) {
            count /= factorial(a);
            ++mult[a];
        }
        for (const auto& [a, m] : mult)
            count /= factorial(m);
        std::uint64_t interval = 1;
        for (int a : type)
            interval *= factorial(a - 1);
        const int degree = (d - 1) * (n - j);
        out.ranks[degree] += count * interval;
        std::string id;
        for (int a : type)
            id += (id.empty() ? "" : ",") + std::to_string(a);
        out.contributions[degree].push_back({0, "type " + id, d * (n - j), d * (n - j) - degree - 2,
                                             count * interval});
    }
    return out;
}

std::uint64_t partition_interval_rank(const Partition& pi) {
    std::uint64_t r = 1;
    for (int a : pi.block_sizes())
        r *= factorial(a - 1);
    return r;
}

std::uint64_t EquivariantGMReport::rank(int degree) const {
    auto it = degrees.find(degree);
    if (it == degrees.end())
        return 0;
    std::uint64_t r = 0;
    for (const auto& e : it->second)
        r += e.induced_dimension;
    return r;
}

namespace {

/// Sign of the permutation g induces on the blocks of a partition it fixes.
int block_permutation_sign(const Permutation& g, const Partition& pi) {
    const auto blocks = pi.blocks();
    std::vector<int> image(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        image[b] = pi.block_of(g(blocks[b].front() - 1) + 1);
    return Permutation(image).sign();
}

} // namespace

EquivariantGMReport equivariant_gm(int n, int d, const FiniteGroup& group, std::int64_t p) {
    if (group.degree() != n)
        throw DomainError("group of degree " + std::to_string(group.degree()) + " for n = " +
                          std::to_string(n));
    const auto lattice = PartitionLattice::build(n);
    EquivariantGMReport out;
    out.n = n;
    out.d = d;
    out.p = p;
    out.group_order = group.order();
    for (auto& orbit : orbits_and_stabilizers(group, lattice)) {
        EquivariantEntry e;
        const auto& pi = orbit.representative;
        e.stabilizer_order = orbit.stabilizer.order();
        e.orbit_size = orbit.orbit_size;
        e.interval_rank = partition_interval_rank(pi);
        e.induced_dimension = e.orbit_size * e.interval_rank * e.sphere_rank;
        e.full_stabilizer = e.stabilizer_order == group.order();
        for (const auto& g : orbit.stabilizer.elements()) {
            if (d % 2 == 1 && g.sign() < 0)
                e.ambient_orientation_preserved = false;
            if (d % 2 == 1 && block_permutation_sign(g, pi) < 0)
                e.subspace_orientation_preserved = false;
        }
        e.representative = pi;
        out.degrees[(d - 1) * (n - pi.size())].push_back(std::move(e));
    }
    return out;
}

int full_stabilizer_degree(int p, int k, int d) {
    if (!is_prime(p) || k < 1 || d < 2)
        throw DomainError("full_stabilizer_degree needs p prime, k >= 1, d >= 2");
    const auto group = regular_embedding(p, k);
    const auto report = equivariant_gm(group.degree(), d, group, p);
    for (const auto& [degree, entries] : report.degrees) {
        if (degree <= 0)
            continue;
        for (const auto& e : entries)
            if (e.full_stabilizer)
                return degree;
    }
    throw std::logic_error("no full-stabilizer orbit in positive degree");
}

} // namespace confspace
