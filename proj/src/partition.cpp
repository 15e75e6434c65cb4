#include "confspace/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confspace {

std::uint64_t bell_number(int n) {
    if (n < 0 || n > 25)
        throw DomainError("bell_number: n out of range");
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto v : row)
            next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    if (labels.empty())
        throw DomainError("partition of the empty set");
    if (labels.size() > 255)
        throw DomainError("partition ground set too large");
    Partition p;
    p.labels_.resize(labels.size());
    std::unordered_map<int, int> relabel;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = relabel.emplace(labels[i], static_cast<int>(relabel.size()));
        p.labels_[i] = static_cast<std::uint8_t>(it->second);
    }
    p.block_count_ = static_cast<int>(relabel.size());
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1)
        throw DomainError("partition ground set must be nonempty");
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw DomainError("partition block is empty");
        for (int e : blocks[b]) {
            if (e < 1 || e > n)
                throw DomainError("partition element " + std::to_string(e) + " outside 1.." +
                                  std::to_string(n));
            auto& slot = labels[static_cast<std::size_t>(e - 1)];
            if (slot != -1)
                throw DomainError("partition element " + std::to_string(e) + " repeated");
            slot = static_cast<int>(b);
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == -1)
            throw DomainError("partition does not cover element " + std::to_string(i + 1));
    return from_labels(labels);
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks(1);
    const bool comma = text.find(',') != std::string_view::npos;
    int max_elem = 0;
    std::string number;
    auto flush = [&] {
        if (number.empty())
            return;
        int v = std::stoi(number);
        blocks.back().push_back(v);
        max_elem = std::max(max_elem, v);
        number.clear();
    };
    for (char c : text) {
        if (c == '|') {
            flush();
            blocks.emplace_back();
        } else if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            if (comma) {
                number.push_back(c);
            } else {
                number.assign(1, c);
                flush();
            }
        } else if (c == ' ' || c == '{' || c == '}') {
            continue;
        } else {
            throw DomainError("invalid character in partition string: '" + std::string(1, c) + "'");
        }
    }
    flush();
    return from_blocks(max_elem, blocks);
}

Partition Partition::finest(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

Partition Partition::coarsest(int n) {
    return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out[labels_[i]].push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(block_count_), 0);
    for (auto l : labels_)
        ++sizes[l];
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::uint64_t Partition::code() const noexcept {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < labels_.size() && i < 16; ++i)
        c |= static_cast<std::uint64_t>(labels_[i] & 0xF) << (4 * i);
    return c;
}

bool Partition::refines(const Partition& other) const {
    if (n() != other.n())
        throw DomainError("partitions of different ground sets");
    std::vector<int> image(static_cast<std::size_t>(block_count_), -1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        int& m = image[labels_[i]];
        if (m == -1)
            m = other.labels_[i];
        else if (m != other.labels_[i])
            return false;
    }
    return true;
}

Partition Partition::meet(const Partition& other) const {
    if (n() != other.n())
        throw DomainError("partitions of different ground sets");
    std::vector<int> labels(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        labels[i] = labels_[i] * 256 + other.labels_[i];
    return from_labels(labels);
}

Partition Partition::join(const Partition& other) const {
    if (n() != other.n())
        throw DomainError("partitions of different ground sets");
    // union-find over elements
    std::vector<int> parent(labels_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite_by = [&](const std::vector<std::uint8_t>& lab) {
        std::vector<int> first(labels_.size(), -1);
        for (std::size_t i = 0; i < lab.size(); ++i) {
            int& f = first[lab[i]];
            if (f == -1)
                f = static_cast<int>(i);
            else
                parent[find(static_cast<int>(i))] = find(f);
        }
    };
    unite_by(labels_);
    unite_by(other.labels_);
    std::vector<int> labels(labels_.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = find(static_cast<int>(i));
    return from_labels(labels);
}

Partition Partition::merge_blocks(int a, int b) const {
    std::vector<int> labels(labels_.begin(), labels_.end());
    for (auto& l : labels)
        if (l == b)
            l = a;
    return from_labels(labels);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    const bool digits = n() <= 9;
    auto bl = blocks();
    for (std::size_t b = 0; b < bl.size(); ++b) {
        if (b)
            os << '|';
        for (std::size_t i = 0; i < bl[b].size(); ++i) {
            if (!digits && i)
                os << ',';
            os << bl[b][i];
        }
    }
    return os.str();
}

bool lattice_order_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        return a.size() > b.size();
    return a.labels() < b.labels();
}

namespace {

void enumerate_growth_strings(int n, std::vector<int>& prefix, int max_label,
                              std::vector<Partition>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(Partition::from_labels(prefix));
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        prefix.push_back(l);
        enumerate_growth_strings(n, prefix, std::max(max_label, l), out);
        prefix.pop_back();
    }
}

} // namespace

PartitionLattice PartitionLattice::build(int n, int max_n) {
    if (n < 1)
        throw DomainError("partition lattice needs n >= 1");
    if (n > max_n || n > 16)
        throw SizeLimitError("partition lattice of [" + std::to_string(n) + "] has Bell(" +
                             std::to_string(n) + ") = " + std::to_string(bell_number(n)) +
                             " elements, above the cap n <= " + std::to_string(max_n));
    PartitionLattice lat;
    lat.n_ = n;
    lat.elements_.reserve(bell_number(n));
    std::vector<int> prefix{0};
    enumerate_growth_strings(n, prefix, 0, lat.elements_);
    std::sort(lat.elements_.begin(), lat.elements_.end(), lattice_order_less);
    lat.index_.reserve(lat.elements_.size());
    for (std::size_t i = 0; i < lat.elements_.size(); ++i)
        lat.index_.emplace(lat.elements_[i].code(), i);
    return lat;
}

std::size_t PartitionLattice::index_of(const Partition& p) const {
    if (p.n() != n_)
        throw DomainError("partition of [" + std::to_string(p.n()) + "] is not in Π_" +
                          std::to_string(n_));
    return index_.at(p.code());
}

std::size_t PartitionLattice::meet(std::size_t a, std::size_t b) const {
    return index_of(elements_[a].meet(elements_[b]));
}

std::size_t PartitionLattice::join(std::size_t a, std::size_t b) const {
    return index_of(elements_[a].join(elements_[b]));
}

std::vector<std::size_t> PartitionLattice::interval(std::size_t x, std::size_t y, bool open) const {
    std::vector<std::size_t> out;
    for (std::size_t z = x; z <= y && z < elements_.size(); ++z) {
        if (open && (z == x || z == y))
            continue;
        if (leq(x, z) && leq(z, y))
            out.push_back(z);
    }
    return out;
}

std::vector<std::size_t> PartitionLattice::rank_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : elements_)
        ++counts[static_cast<std::size_t>(e.size())];
    return counts;
}

long long mobius(const PartitionLattice& lattice, const Partition& x, const Partition& y) {
    const auto xi = lattice.index_of(x);
    const auto yi = lattice.index_of(y);
    if (!lattice.leq(xi, yi))
        throw OrderError("mobius: " + x.to_string() + " is not below " + y.to_string());
    const auto elems = lattice.interval(xi, yi, false);
    std::vector<long long> mu(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i == 0) {
            mu[i] = 1;
            continue;
        }
        long long s = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (lattice.leq(elems[j], elems[i]))
                s += mu[j];
        mu[i] = -s;
    }
    return mu.back();
}

} // namespace confspace
