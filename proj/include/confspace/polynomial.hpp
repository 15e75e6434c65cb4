#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace confspace {

using Exponents = std::vector<int>;

/// Polynomial in t_1..t_k over F_p, stored as exponent vector -> nonzero
/// coefficient in [1, p).
class FpPolynomial {
public:
    FpPolynomial() = default;
    FpPolynomial(std::int64_t p, int k);

    static FpPolynomial constant(std::int64_t p, int k, std::int64_t c);
    static FpPolynomial variable(std::int64_t p, int k, int i); ///< t_{i+1}, 0-based i
    /// Σ coeffs[i] t_{i+1}.
    static FpPolynomial linear_form(std::int64_t p, const std::vector<std::int64_t>& coeffs);
    static FpPolynomial monomial(std::int64_t p, Exponents exps, std::int64_t c = 1);

    std::int64_t prime() const noexcept { return p_; }
    int variables() const noexcept { return k_; }
    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest total degree in the t_i; -1 for zero.
    int total_degree() const;
    bool is_homogeneous() const;
    std::int64_t coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, std::int64_t c);

    FpPolynomial operator+(const FpPolynomial& o) const;
    FpPolynomial operator-(const FpPolynomial& o) const;
    FpPolynomial operator*(const FpPolynomial& o) const;
    FpPolynomial scaled(std::int64_t c) const;
    FpPolynomial pow(int e) const;

    /// Replaces t_i by images[i], a polynomial over the same p.
    FpPolynomial substitute(const std::vector<FpPolynomial>& images) const;

    std::string to_string() const;

    friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

private:
    void require_compatible(const FpPolynomial& o) const;

    std::int64_t p_ = 2;
    int k_ = 0;
    std::map<Exponents, std::int64_t> terms_;
};

struct DivisionResult {
    bool divides = false;
    FpPolynomial quotient;
    FpPolynomial remainder;
};

/// Division of g by f in lex order. f divides g iff the remainder vanishes;
/// a positive verdict is re-checked by multiplication. Throws DomainError for f = 0.
DivisionResult poly_divides(const FpPolynomial& f, const FpPolynomial& g);

} // namespace confspace
