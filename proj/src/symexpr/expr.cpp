#include "paratensor/symexpr/expr.hpp"

#include <algorithm>

#include "paratensor/error.hpp"

namespace paratensor::symexpr {

Expr Expr::fraction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("division by the zero expression");
    Expr e;
    if (num.is_zero()) return e;
    if (den.is_constant()) {
        e.num_ = num.scaled(1 / den.leading_coeff());
        return e;
    }
    const Polynomial g = gcd(num, den);
    Polynomial n = num;
    Polynomial d = den;
    if (!g.is_constant()) {
        n = *num.exact_div(g);
        d = *den.exact_div(g);
    }
    const Rational lc = d.leading_coeff();
    e.num_ = n.scaled(1 / lc);
    e.den_ = d.scaled(1 / lc);
    return e;
}

Rational Expr::constant_value() const {
    if (!is_constant()) throw DomainError("expression is not constant");
    return num_.constant_value() / den_.constant_value();
}

Expr Expr::operator-() const {
    Expr r(*this);
    r.num_ = -r.num_;
    return r;
}

Expr Expr::operator+(const Expr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        if (is_polynomial()) return Expr(num_ + o.num_);
        return fraction(num_ + o.num_, den_);
    }
    return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (is_polynomial() && o.is_polynomial()) return Expr(num_ * o.num_);
    // Cross-cancel first to keep the products small.
    const Polynomial g1 = gcd(num_, o.den_);
    const Polynomial g2 = gcd(o.num_, den_);
    const Polynomial n1 = g1.is_constant() ? num_ : *num_.exact_div(g1);
    const Polynomial d2 = g1.is_constant() ? o.den_ : *o.den_.exact_div(g1);
    const Polynomial n2 = g2.is_constant() ? o.num_ : *o.num_.exact_div(g2);
    const Polynomial d1 = g2.is_constant() ? den_ : *den_.exact_div(g2);
    return fraction(n1 * n2, d1 * d2);
}

Expr Expr::operator/(const Expr& o) const {
    if (o.is_zero()) throw DomainError("division by the zero expression");
    Expr inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (o.num_.is_constant()) {
        inv.num_ = o.den_.scaled(1 / o.num_.leading_coeff());
        inv.den_ = Polynomial(Rational(1));
    } else {
        const Rational lc = o.num_.leading_coeff();
        inv.num_ = o.den_.scaled(1 / lc);
        inv.den_ = o.num_.scaled(1 / lc);
    }
    return *this * inv;
}

Expr Expr::pow(std::uint32_t e) const {
    Expr r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

Expr Expr::diff(std::size_t var) const {
    if (is_polynomial()) return Expr(num_.derivative(var));
    // (n/d)' = (n' d - n d') / d^2
    const Polynomial top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return fraction(top, den_ * den_);
}

Rational Expr::eval(std::span<const Rational> point) const {
    const Rational d = den_.evaluate(point);
    if (d == 0) throw DomainError("denominator vanishes at evaluation point");
    return num_.evaluate(point) / d;
}

std::string Expr::to_string(std::span<const std::string> names) const {
    if (is_polynomial()) return num_.to_string(names);
    auto wrap = [&](const Polynomial& p) {
        std::string s = p.to_string(names);
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

Expr diff(const Expr& e, std::string_view coord, std::span<const std::string> chart) {
    const auto it = std::find(chart.begin(), chart.end(), coord);
    if (it == chart.end()) throw DomainError("unknown coordinate '" + std::string(coord) + "'");
    return e.diff(static_cast<std::size_t>(it - chart.begin()));
}

Rational eval(const Expr& e, std::span<const Rational> point) { return e.eval(point); }

}  // namespace paratensor::symexpr
