#include "confspace/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace confspace {

Permutation::Permutation(std::vector<int> images0) : images_(std::move(images0)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw DomainError("permutation images do not form a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_images(const std::vector<int>& images1) {
    std::vector<int> im(images1.size());
    std::transform(images1.begin(), images1.end(), im.begin(), [](int v) { return v - 1; });
    return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<int> cycle;
    bool open = false;
    std::string num;
    auto flush = [&] {
        if (num.empty())
            return;
        int v = std::stoi(num);
        if (v < 1 || v > n)
            throw DomainError("cycle entry " + num + " outside 1.." + std::to_string(n));
        cycle.push_back(v - 1);
        num.clear();
    };
    for (char c : text) {
        if (c == '(') {
            if (open)
                throw DomainError("nested '(' in cycle notation");
            open = true;
            cycle.clear();
        } else if (c == ')') {
            flush();
            if (!open)
                throw DomainError("unbalanced ')' in cycle notation");
            open = false;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
                if (im[static_cast<std::size_t>(from)] != from)
                    throw DomainError("cycles are not disjoint");
                im[static_cast<std::size_t>(from)] = to;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            num.push_back(c);
        } else if (c == ' ' || c == ',') {
            flush();
        } else {
            throw DomainError(std::string("invalid character in cycle notation: '") + c + "'");
        }
    }
    if (open)
        throw DomainError("unterminated cycle");
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw DomainError("composing permutations of different degree");
    std::vector<int> im(b.images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

int Permutation::order() const {
    long long ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i])
            continue;
        long long len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

int Permutation::sign() const {
    int s = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            s = -s;
    }
    return s;
}

Partition Permutation::act(const Partition& p) const {
    if (p.n() != degree())
        throw DomainError("permutation degree does not match partition");
    std::vector<int> labels(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        labels[static_cast<std::size_t>(images_[i])] = p.labels()[i];
    return Partition::from_labels(labels);
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i))
            continue;
        os << '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            os << (first ? "" : " ") << j + 1;
            first = false;
        }
        os << ')';
    }
    auto s = os.str();
    return s.empty() ? "()" : s;
}

FiniteGroup FiniteGroup::trivial(int n) {
    FiniteGroup g;
    g.n_ = n;
    g.elements_.push_back(Permutation::identity(n));
    return g;
}

FiniteGroup FiniteGroup::from_elements(int n, std::vector<Permutation> elements, bool verify) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const auto id = Permutation::identity(n);
    auto it = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end())
        throw StructuralError("group element list lacks the identity");
    std::rotate(elements.begin(), it, it + 1);
    for (const auto& g : elements)
        if (g.degree() != n)
            throw StructuralError("group element of wrong degree");
    if (verify) {
        std::set<Permutation> set(elements.begin(), elements.end());
        for (const auto& a : elements) {
            if (!set.count(a.inverse()))
                throw StructuralError("group element list not closed under inverse");
            for (const auto& b : elements)
                if (!set.count(a * b))
                    throw StructuralError("group element list not closed under composition");
        }
    }
    FiniteGroup g;
    g.n_ = n;
    g.elements_ = std::move(elements);
    return g;
}

bool FiniteGroup::contains(const Permutation& g) const {
    return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

FiniteGroup group_from_generators(int n, const std::vector<Permutation>& gens,
                                  std::size_t max_order) {
    for (const auto& g : gens)
        if (g.degree() != n)
            throw DomainError("generator of degree " + std::to_string(g.degree()) +
                              " for a group of degree " + std::to_string(n));
    std::set<Permutation> seen{Permutation::identity(n)};
    std::deque<Permutation> queue{Permutation::identity(n)};
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            auto y = g * x;
            if (seen.insert(y).second) {
                if (seen.size() > max_order)
                    throw SizeLimitError("group order exceeds the cap " + std::to_string(max_order));
                queue.push_back(std::move(y));
            }
        }
    }
    auto group = FiniteGroup::from_elements(n, {seen.begin(), seen.end()}, false);
    group.generators_ = gens;
    return group;
}

std::vector<int> regular_point_vector(int p, int k, int point1) {
    std::vector<int> v(static_cast<std::size_t>(k));
    int x = point1 - 1;
    for (int j = 0; j < k; ++j) {
        v[static_cast<std::size_t>(j)] = x % p;
        x /= p;
    }
    return v;
}

int regular_point_index(int p, const std::vector<int>& v) {
    int idx = 0;
    for (std::size_t j = v.size(); j-- > 0;)
        idx = idx * p + ((v[j] % p) + p) % p;
    return idx + 1;
}

Permutation regular_translation(int p, int k, const std::vector<int>& shift) {
    int n = 1;
    for (int j = 0; j < k; ++j)
        n *= p;
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto v = regular_point_vector(p, k, i);
        for (int j = 0; j < k; ++j)
            v[static_cast<std::size_t>(j)] += shift[static_cast<std::size_t>(j)];
        im[static_cast<std::size_t>(i - 1)] = regular_point_index(p, v) - 1;
    }
    return Permutation(std::move(im));
}

FiniteGroup regular_embedding(int p, int k, int max_degree) {
    if (!is_prime(p) || k < 1)
        throw DomainError("regular_embedding needs a prime p and k >= 1");
    long long n = 1;
    for (int j = 0; j < k; ++j) {
        n *= p;
        if (n > max_degree)
            throw SizeLimitError("regular embedding degree p^k exceeds the cap " +
                                 std::to_string(max_degree));
    }
    std::vector<Permutation> gens;
    for (int j = 0; j < k; ++j) {
        std::vector<int> e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(j)] = 1;
        gens.push_back(regular_translation(p, k, e));
    }
    return group_from_generators(static_cast<int>(n), gens);
}

FiniteGroup cyclic_group(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<std::size_t>(i)] = (i + 1) % n;
    return group_from_generators(n, {Permutation(std::move(im))});
}

std::vector<OrbitEntry> orbits_and_stabilizers(const FiniteGroup& group,
                                               const PartitionLattice& lattice) {
    if (group.degree() != lattice.n())
        throw DomainError("group of degree " + std::to_string(group.degree()) +
                          " acting on Π_" + std::to_string(lattice.n()));
    std::vector<bool> visited(lattice.size(), false);
    std::vector<OrbitEntry> out;
    const auto& elems = group.elements();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (visited[i])
            continue;
        std::size_t orbit_size = 0;
        std::vector<Permutation> stab;
        for (const auto& g : elems) {
            auto j = lattice.index_of(g.act(lattice[i]));
            if (j == i)
                stab.push_back(g);
            if (!visited[j]) {
                visited[j] = true;
                ++orbit_size;
            }
        }
        OrbitEntry e;
        e.representative = lattice[i];
        e.representative_index = i;
        e.orbit_size = orbit_size;
        e.stabilizer = FiniteGroup::from_elements(group.degree(), std::move(stab), false);
        out.push_back(std::move(e));
    }
    return out;
}

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace confspace
