#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paratensor/symexpr/rational.hpp"

namespace paratensor::symexpr {

/// Exponent vector of a monomial. Index i is the power of chart coordinate i;
/// trailing zero exponents are always trimmed so that a monomial has exactly
/// one representation regardless of the chart size.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t var) const noexcept {
        return var < exps_.size() ? exps_[var] : 0;
    }
    std::size_t width() const noexcept { return exps_.size(); }
    bool is_one() const noexcept { return exps_.empty(); }
    std::uint64_t total_degree() const noexcept;

    /// Product; throws DomainError when an exponent overflows 32 bits.
    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const noexcept;
    /// Quotient `other / *this`; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    Monomial without(std::size_t var) const;

    /// Lexicographic order on the declared coordinate order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) = default;
};

/// Multivariate polynomial with rational coefficients in canonical form:
/// terms sorted by strictly decreasing monomial, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial variable(std::size_t index);
    static Polynomial monomial(const Monomial& m, const Rational& c);
    /// Builds a canonical polynomial from arbitrary (unsorted, duplicated) terms.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
    }
    /// Value of a constant polynomial; throws DomainError otherwise.
    Rational constant_value() const;
    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    /// Number of variable slots touched by any term.
    std::size_t width() const noexcept;
    std::uint32_t degree_in(std::size_t var) const noexcept;
    bool depends_on(std::size_t var) const noexcept { return degree_in(var) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::uint32_t e) const;
    Polynomial derivative(std::size_t var) const;

    /// Exact quotient if `divisor` divides this polynomial, nullopt otherwise.
    std::optional<Polynomial> exact_div(const Polynomial& divisor) const;

    /// Scales so the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Coefficients with respect to `var`: result[e] is the coefficient of var^e.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients(std::size_t var, const std::vector<Polynomial>& coeffs);

    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q[x_0, ..., x_{n-1}]; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Name of coordinate `index`, falling back to x<index> when unnamed.
std::string variable_name(std::span<const std::string> names, std::size_t index);

}  // namespace paratensor::symexpr
