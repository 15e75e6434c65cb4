#include "confspace/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "confspace/errors.hpp"
#include "confspace/modp.hpp"

namespace confspace {

FpPolynomial::FpPolynomial(std::int64_t p, int k) : p_(p), k_(k) {
    if (k < 0)
        throw DomainError("negative number of variables");
}

FpPolynomial FpPolynomial::constant(std::int64_t p, int k, std::int64_t c) {
    FpPolynomial out(p, k);
    out.add_term(Exponents(static_cast<std::size_t>(k), 0), c);
    return out;
}

FpPolynomial FpPolynomial::variable(std::int64_t p, int k, int i) {
    if (i < 0 || i >= k)
        throw DomainError("variable index " + std::to_string(i) + " out of range");
    Exponents e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(p, std::move(e));
}

FpPolynomial FpPolynomial::linear_form(std::int64_t p, const std::vector<std::int64_t>& coeffs) {
    const int k = static_cast<int>(coeffs.size());
    FpPolynomial out(p, k);
    for (int i = 0; i < k; ++i) {
        Exponents e(coeffs.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.add_term(e, coeffs[static_cast<std::size_t>(i)]);
    }
    return out;
}

FpPolynomial FpPolynomial::monomial(std::int64_t p, Exponents exps, std::int64_t c) {
    FpPolynomial out(p, static_cast<int>(exps.size()));
    out.add_term(exps, c);
    return out;
}

int FpPolynomial::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e)
            s += x;
        best = std::max(best, s);
    }
    return best;
}

bool FpPolynomial::is_homogeneous() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e)
            s += x;
        if (deg >= 0 && s != deg)
            return false;
        deg = s;
    }
    return true;
}

std::int64_t FpPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void FpPolynomial::add_term(const Exponents& e, std::int64_t c) {
    if (static_cast<int>(e.size()) != k_)
        throw DomainError("exponent vector has the wrong length");
    c = mod_p(c, p_);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void FpPolynomial::require_compatible(const FpPolynomial& o) const {
    if (p_ != o.p_ || k_ != o.k_)
        throw DomainError("polynomials over different rings");
}

FpPolynomial FpPolynomial::operator+(const FpPolynomial& o) const {
    require_compatible(o);
    FpPolynomial out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

FpPolynomial FpPolynomial::operator-(const FpPolynomial& o) const { return *this + o.scaled(-1); }

FpPolynomial FpPolynomial::operator*(const FpPolynomial& o) const {
    require_compatible(o);
    FpPolynomial out(p_, k_);
    Exponents e(static_cast<std::size_t>(k_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

FpPolynomial FpPolynomial::scaled(std::int64_t c) const {
    FpPolynomial out(p_, k_);
    for (const auto& [e, x] : terms_)
        out.add_term(e, x * mod_p(c, p_));
    return out;
}

FpPolynomial FpPolynomial::pow(int e) const {
    if (e < 0)
        throw DomainError("negative polynomial power");
    FpPolynomial result = constant(p_, k_, 1);
    FpPolynomial base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FpPolynomial FpPolynomial::substitute(const std::vector<FpPolynomial>& images) const {
    if (static_cast<int>(images.size()) != k_)
        throw DomainError("substitution needs one image per variable");
    const int target_k = images.empty() ? 0 : images.front().variables();
    FpPolynomial out(p_, target_k);
    for (const auto& [e, c] : terms_) {
        FpPolynomial term = constant(p_, target_k, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

std::string FpPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // descending lex order reads naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            os << " + ";
        first = false;
        bool constant_term = true;
        for (int x : e)
            constant_term = constant_term && x == 0;
        if (c != 1 || constant_term)
            os << c;
        bool need_sep = c != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (need_sep)
                os << "*";
            os << "t";
            if (k_ > 1)
                os << (i + 1);
            if (e[i] > 1)
                os << "^" << e[i];
            need_sep = true;
        }
    }
    return os.str();
}

DivisionResult poly_divides(const FpPolynomial& f, const FpPolynomial& g) {
    if (f.is_zero())
        throw DomainError("division by the zero polynomial");
    if (f.prime() != g.prime() || f.variables() != g.variables())
        throw DomainError("polynomials over different rings");
    const std::int64_t p = f.prime();
    const int k = f.variables();
    // leading term in lex order is the largest exponent vector
    const auto& [lead_e, lead_c] = *f.terms().rbegin();
    const std::int64_t lead_inv = inverse_mod_p(lead_c, p);
    DivisionResult out{false, FpPolynomial(p, k), FpPolynomial(p, k)};
    FpPolynomial rest = g;
    while (!rest.is_zero()) {
        const auto [e, c] = *rest.terms().rbegin();
        bool divisible = true;
        Exponents q(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            q[i] = e[i] - lead_e[i];
            divisible = divisible && q[i] >= 0;
        }
        if (divisible) {
            const auto step = FpPolynomial::monomial(p, q, c * lead_inv);
            out.quotient = out.quotient + step;
            rest = rest - step * f;
        } else {
            const auto term = FpPolynomial::monomial(p, e, c);
            out.remainder = out.remainder + term;
            rest = rest - term;
        }
    }
    out.divides = out.remainder.is_zero();
    if (out.divides && !(f * out.quotient == g))
        throw std::logic_error("poly_divides: quotient failed verification");
    return out;
}

} // namespace confspace
