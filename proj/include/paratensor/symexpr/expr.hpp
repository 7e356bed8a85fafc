#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "paratensor/symexpr/polynomial.hpp"

namespace paratensor::symexpr {

/// Scalar field over a chart: a reduced quotient of two polynomials.
///
/// Canonical form: gcd(numerator, denominator) = 1 and the denominator is
/// monic under the lexicographic monomial order (so a polynomial has
/// denominator exactly 1). Two Exprs denote the same function iff they
/// compare equal, which makes is_zero() a syntactic test.
class Expr {
public:
    Expr() = default;
    Expr(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    Expr(long c) : Expr(Rational(c)) {}                      // NOLINT(google-explicit-constructor)
    Expr(int c) : Expr(Rational(c)) {}                       // NOLINT(google-explicit-constructor)
    Expr(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)

    /// Reduces num/den to canonical form; throws DomainError if den is zero.
    static Expr fraction(const Polynomial& num, const Polynomial& den);
    static Expr variable(std::size_t index) { return Expr(Polynomial::variable(index)); }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Throws DomainError when the expression is not a constant.
    Rational constant_value() const;

    Expr operator-() const;
    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    /// Throws DomainError on division by the zero expression.
    Expr operator/(const Expr& o) const;
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    Expr pow(std::uint32_t e) const;
    Expr diff(std::size_t var) const;

    /// Exact value at `point`; throws DomainError when the denominator vanishes.
    Rational eval(std::span<const Rational> point) const;

    std::string to_string(std::span<const std::string> names = {}) const;

    friend bool operator==(const Expr& a, const Expr& b) = default;

private:
    Polynomial num_;
    Polynomial den_{Rational(1)};
};

inline bool is_zero(const Expr& e) noexcept { return e.is_zero(); }

/// Partial derivative with respect to the named coordinate of `chart`.
/// Throws DomainError for a name outside the chart.
Expr diff(const Expr& e, std::string_view coord, std::span<const std::string> chart);

Rational eval(const Expr& e, std::span<const Rational> point);

}  // namespace paratensor::symexpr
