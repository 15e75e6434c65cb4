#include "confspace/group_cohomology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "confspace/arrangement.hpp"
#include "confspace/errors.hpp"
#include "confspace/group.hpp"
#include "confspace/modp.hpp"

namespace confspace {

namespace {

int t_degree(std::int64_t p) { return p == 2 ? 1 : 2; }

void require_ring(std::int64_t p, int k) {
    require_field_prime(p);
    if (k < 0 || k > 16)
        throw DomainError("rank k must lie in [0, 16]");
}

} // namespace

GroupCohomologyElement::GroupCohomologyElement(std::int64_t p, int k) : p_(p), k_(k) { require_ring(p, k); }

GroupCohomologyElement GroupCohomologyElement::one(std::int64_t p, int k) {
    GroupCohomologyElement out(p, k);
    out.add(0, FpPolynomial::constant(p, k, 1));
    return out;
}

GroupCohomologyElement GroupCohomologyElement::t(std::int64_t p, int k, int i) {
    GroupCohomologyElement out(p, k);
    out.add(0, FpPolynomial::variable(p, k, i));
    return out;
}

GroupCohomologyElement GroupCohomologyElement::e(std::int64_t p, int k, int i) {
    if (p == 2)
        throw DomainError("no exterior generators for p = 2");
    if (i < 0 || i >= k)
        throw DomainError("exterior generator index out of range");
    GroupCohomologyElement out(p, k);
    out.add(1u << i, FpPolynomial::constant(p, k, 1));
    return out;
}

GroupCohomologyElement GroupCohomologyElement::from_polynomial(const FpPolynomial& poly) {
    GroupCohomologyElement out(poly.prime(), poly.variables());
    out.add(0, poly);
    return out;
}

FpPolynomial GroupCohomologyElement::polynomial_part() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? FpPolynomial(p_, k_) : it->second;
}

void GroupCohomologyElement::add(std::uint32_t mask, const FpPolynomial& poly) {
    if (poly.is_zero())
        return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, poly);
        return;
    }
    it->second = it->second + poly;
    if (it->second.is_zero())
        terms_.erase(it);
}

bool GroupCohomologyElement::is_homogeneous() const {
    int deg = -1;
    for (const auto& [mask, poly] : terms_) {
        if (!poly.is_homogeneous())
            return false;
        const int d = std::popcount(mask) + t_degree(p_) * poly.total_degree();
        if (deg >= 0 && d != deg)
            return false;
        deg = d;
    }
    return true;
}

int GroupCohomologyElement::degree() const {
    if (!is_homogeneous())
        throw DomainError("element is not homogeneous");
    if (terms_.empty())
        return -1;
    const auto& [mask, poly] = *terms_.begin();
    return std::popcount(mask) + t_degree(p_) * poly.total_degree();
}

GroupCohomologyElement GroupCohomologyElement::operator+(const GroupCohomologyElement& o) const {
    if (p_ != o.p_ || k_ != o.k_)
        throw DomainError("elements of different cohomology rings");
    GroupCohomologyElement out = *this;
    for (const auto& [mask, poly] : o.terms_)
        out.add(mask, poly);
    return out;
}

GroupCohomologyElement GroupCohomologyElement::scaled(std::int64_t c) const {
    GroupCohomologyElement out(p_, k_);
    for (const auto& [mask, poly] : terms_)
        out.add(mask, poly.scaled(c));
    return out;
}

GroupCohomologyElement GroupCohomologyElement::operator-(const GroupCohomologyElement& o) const {
    return *this + o.scaled(-1);
}

std::string GroupCohomologyElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, poly] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string ext;
        for (int i = 0; i < k_; ++i)
            if (mask >> i & 1u)
                ext += (ext.empty() ? "" : "*") + std::string("e") + (k_ > 1 ? std::to_string(i + 1) : "");
        if (ext.empty())
            os << poly.to_string();
        else if (poly == FpPolynomial::constant(p_, k_, 1))
            os << ext;
        else
            os << ext << "*(" << poly.to_string() << ")";
    }
    return os.str();
}

GroupCohomologyElement gc_multiply(const GroupCohomologyElement& a, const GroupCohomologyElement& b) {
    if (a.p_ != b.p_ || a.k_ != b.k_)
        throw DomainError("gc_multiply: elements over (" + std::to_string(a.p_) + ", " +
                          std::to_string(a.k_) + ") and (" + std::to_string(b.p_) + ", " +
                          std::to_string(b.k_) + ")");
    GroupCohomologyElement out(a.p_, a.k_);
    for (const auto& [ma, pa] : a.terms_)
        for (const auto& [mb, pb] : b.terms_) {
            if (ma & mb)
                continue;
            // sign of moving each e in mb past the larger-index e's in ma
            int inversions = 0;
            for (int i = 0; i < a.k_; ++i)
                if (mb >> i & 1u)
                    inversions += std::popcount(ma >> (i + 1));
            const auto prod = pa * pb;
            out.add(ma | mb, inversions % 2 ? prod.scaled(-1) : prod);
        }
    return out;
}

GroupCohomologyElement operator*(const GroupCohomologyElement& a, const GroupCohomologyElement& b) {
    return gc_multiply(a, b);
}

std::vector<std::vector<std::int64_t>> subgroup_basis(std::int64_t p, int k,
                                                      const std::vector<std::vector<std::int64_t>>& span) {
    FpMatrix M(static_cast<Eigen::Index>(span.size()), k);
    for (std::size_t i = 0; i < span.size(); ++i) {
        if (static_cast<int>(span[i].size()) != k)
            throw DomainError("subgroup vector has length " + std::to_string(span[i].size()) +
                              ", expected " + std::to_string(k));
        for (int j = 0; j < k; ++j)
            M(static_cast<Eigen::Index>(i), j) = mod_p(span[i][static_cast<std::size_t>(j)], p);
    }
    const auto ech = row_echelon(M, p);
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            row[static_cast<std::size_t>(j)] = ech.reduced(static_cast<Eigen::Index>(r), j);
        basis.push_back(std::move(row));
    }
    return basis;
}

GroupCohomologyElement restrict(const GroupCohomologyElement& x,
                                const std::vector<std::vector<std::int64_t>>& span) {
    const auto p = x.prime();
    const int k = x.rank();
    const auto basis = subgroup_basis(p, k, span);
    const int h = static_cast<int>(basis.size());
    // image of the i-th coordinate form: Σ_j (b_j)_i s_j
    std::vector<std::vector<std::int64_t>> forms(static_cast<std::size_t>(k),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(h)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < h; ++j)
            forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    std::vector<FpPolynomial> t_images;
    for (const auto& f : forms)
        t_images.push_back(FpPolynomial::linear_form(p, f));
    GroupCohomologyElement out(p, h);
    for (const auto& [mask, poly] : x.terms()) {
        auto term = GroupCohomologyElement::from_polynomial(poly.substitute(t_images));
        for (int i = 0; i < k; ++i) {
            if (!(mask >> i & 1u))
                continue;
            GroupCohomologyElement e_image(p, h);
            for (int j = 0; j < h; ++j)
                e_image = e_image + GroupCohomologyElement::e(p, h, j).scaled(
                                        forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            // exterior factors in increasing index order, polynomial part central
            term = term * e_image;
        }
        out = out + term;
    }
    return out;
}

std::vector<std::vector<std::int64_t>> projective_points(std::int64_t p, int k) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(static_cast<std::size_t>(k), 0);
    std::function<void(int, bool)> rec = [&](int i, bool leading_set) {
        if (i == k) {
            if (leading_set)
                out.push_back(v);
            return;
        }
        if (leading_set) {
            for (std::int64_t c = 0; c < p; ++c) {
                v[static_cast<std::size_t>(i)] = c;
                rec(i + 1, true);
            }
        } else {
            v[static_cast<std::size_t>(i)] = 0;
            rec(i + 1, false);
            v[static_cast<std::size_t>(i)] = 1;
            rec(i + 1, true);
        }
        v[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, false);
    return out;
}

namespace {

FpPolynomial zeta_product(std::int64_t p, int k, const std::vector<std::vector<std::int64_t>>* basis) {
    const int exponent = p == 2 ? 1 : static_cast<int>((p - 1) / 2);
    FpPolynomial out = FpPolynomial::constant(p, k, 1);
    for (const auto& alpha : projective_points(p, k)) {
        if (basis) {
            bool survives = false;
            for (const auto& b : *basis) {
                std::int64_t dot = 0;
                for (int i = 0; i < k; ++i)
                    dot += alpha[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
                survives = survives || mod_p(dot, p) != 0;
            }
            if (!survives)
                continue;
        }
        out = out * FpPolynomial::linear_form(p, alpha).pow(exponent);
    }
    return out;
}

std::int64_t int_pow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

FpPolynomial euler_class_zeta(std::int64_t p, int k) {
    require_ring(p, k);
    if (k < 1 || int_pow(p, k) > 100000)
        throw SizeLimitError("euler_class_zeta needs 1 <= k and p^k <= 100000");
    return zeta_product(p, k, nullptr);
}

FpPolynomial euler_class_zeta_H(std::int64_t p, int k, const std::vector<std::vector<std::int64_t>>& span) {
    require_ring(p, k);
    const auto basis = subgroup_basis(p, k, span);
    if (basis.empty() || static_cast<int>(basis.size()) >= k)
        throw DomainError("euler_class_zeta_H needs a proper nonzero subgroup");
    if (int_pow(p, k) > 100000)
        throw SizeLimitError("euler_class_zeta_H needs p^k <= 100000");
    return zeta_product(p, k, &basis);
}

int cohomological_degree(const FpPolynomial& poly) {
    if (!poly.is_homogeneous())
        throw DomainError("polynomial is not homogeneous");
    return poly.is_zero() ? -1 : t_degree(poly.prime()) * poly.total_degree();
}

bool IdealDescriptor::contains(const GroupCohomologyElement& x) const {
    if (kind == Kind::Truncation) {
        for (const auto& [mask, poly] : x.terms())
            for (const auto& [e, c] : poly.terms()) {
                int deg = std::popcount(mask);
                for (int v : e)
                    deg += t_degree(p) * v;
                if (deg < truncation_degree)
                    return false;
            }
        return true;
    }
    if (generators.size() != 1 || generators.front().terms().size() != 1 ||
        !generators.front().terms().contains(0))
        throw DomainError("membership is only decided for principal polynomial ideals");
    if (x.is_zero())
        return true;
    if (x.terms().size() != 1 || !x.terms().contains(0))
        return false;
    return poly_divides(generators.front().polynomial_part(), x.polynomial_part()).divides;
}

PrimeIndexReport fh_index_prime(std::int64_t p, int d) {
    if (!is_prime(p))
        throw DomainError("fh_index_prime needs a prime p, got " + std::to_string(p));
    if (d < 2)
        throw DomainError("fh_index_prime needs d > 1, got " + std::to_string(d));
    require_field_prime(p);
    PrimeIndexReport out;
    out.p = p;
    out.d = d;
    const int top = (d - 1) * static_cast<int>(p - 1);
    out.truncation.kind = IdealDescriptor::Kind::Truncation;
    out.truncation.p = p;
    out.truncation.k = 1;
    out.truncation.truncation_degree = top + 1;
    out.generated = out.truncation;
    out.generated.kind = IdealDescriptor::Kind::Generated;
    const auto t = GroupCohomologyElement::t(p, 1, 0);
    auto t_pow = [&](int e) {
        return GroupCohomologyElement::from_polynomial(t.polynomial_part().pow(e));
    };
    if (p == 2) {
        out.generated.generators = {t_pow(top + 1)};
        out.witness = t_pow(top);
    } else {
        const int half = top / 2;
        out.generated.generators = {GroupCohomologyElement::e(p, 1, 0) * t_pow(half), t_pow(half + 1)};
        out.witness = t_pow(half);
    }
    out.witness_degree = out.witness.degree();
    out.witness_in_index = out.truncation.contains(out.witness);
    IdealDescriptor sphere = out.truncation;
    sphere.truncation_degree = top;
    out.witness_in_sphere_index = sphere.contains(out.witness);
    out.no_equivariant_map = out.witness_in_sphere_index && !out.witness_in_index;
    return out;
}

IndexBounds fh_index_bounds(std::int64_t p, int k, int d, int max_scan_n) {
    if (!is_prime(p) || k < 1 || d < 2)
        throw DomainError("fh_index_bounds needs p prime, k >= 1, d >= 2");
    IndexBounds out;
    out.p = p;
    out.k = k;
    out.d = d;
    const std::int64_t pk = int_pow(p, k);
    out.N = static_cast<int>((d - 1) * (pk - pk / p));
    out.upper_containment_degree = out.N + 1;
    out.nonvanishing_degree = out.N + 1;
    if (pk <= max_scan_n) {
        out.scanned_N = full_stabilizer_degree(static_cast<int>(p), k, d);
        out.consistent = *out.scanned_N == out.N;
    }
    out.note = "Index^r = 0 for r <= N+1 and Index meets H^{N+1} nontrivially";
    if (k == 1)
        out.note += "; for k = 1 the index is exactly H^{>= N+1}";
    return out;
}

int multinomial_mod2(const std::vector<int>& parts) {
    unsigned long long seen = 0;
    for (int x : parts) {
        if (x < 0)
            throw DomainError("multinomial_mod2 needs nonnegative parts");
        const auto bits = static_cast<unsigned long long>(x);
        if (seen & bits)
            return 0;
        seen |= bits;
    }
    return 1;
}

SWExpansion dual_sw_expansion(int l, int m) {
    if (l < 1 || m < 1 || l > 10 || m > 10)
        throw SizeLimitError("dual_sw_expansion supports 1 <= l, m <= 10");
    SWExpansion out;
    out.l = l;
    out.m = m;
    const int k = 1 << m, d = 1 << l;
    out.degree = (d - 1) * (k - 1);
    for (int s = 0; s < m; ++s)
        out.weights.push_back(k - (1 << s));
    std::vector<int> current(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int s, int remaining) {
        if (s == m - 1) {
            const int w = out.weights.back();
            if (remaining % w != 0)
                return;
            current.back() = remaining / w;
            out.candidates.push_back(current);
            if (multinomial_mod2(current))
                out.survivors.push_back(current);
            return;
        }
        const int w = out.weights[static_cast<std::size_t>(s)];
        for (int i = 0; i * w <= remaining; ++i) {
            current[static_cast<std::size_t>(s)] = i;
            rec(s + 1, remaining - i * w);
        }
        current[static_cast<std::size_t>(s)] = 0;
    };
    rec(0, out.degree);
    std::vector<int> expected(static_cast<std::size_t>(m), 0);
    expected[0] = d - 1;
    out.nonzero_verdict = out.survivors.size() == 1 && out.survivors.front() == expected;
    return out;
}

long long chisholm_bound(long long d, long long k) {
    if (d < 1 || (d & (d - 1)) != 0)
        throw DomainError("chisholm_bound needs d a power of 2, got " + std::to_string(d));
    if (k < 1)
        throw DomainError("chisholm_bound needs k >= 1");
    const long long alpha = std::popcount(static_cast<unsigned long long>(k));
    return d * (k - alpha) + alpha - 1;
}

} // namespace confspace
