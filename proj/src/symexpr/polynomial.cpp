#include "paratensor/symexpr/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "paratensor/error.hpp"

namespace paratensor::symexpr {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t s = 0;
    for (auto e : exps_) s += e;
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t s = std::uint64_t{exponent(i)} + other.exponent(i);
        if (s > std::numeric_limits<std::uint32_t>::max()) throw DomainError("monomial exponent overflow");
        e[i] = static_cast<std::uint32_t>(s);
    }
    Monomial m;
    m.exps_ = std::move(e);
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (exps_.size() > other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    std::vector<std::uint32_t> e(other.exps_);
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t var) const {
    if (var >= exps_.size()) return *this;
    std::vector<std::uint32_t> e(exps_);
    e[var] = 0;
    return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Term& a, const Term& b) { return a.monomial > b.monomial; }

}  // namespace

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(std::size_t index) { return monomial(Monomial::variable(index), Rational(1)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, c});
    if (!p.terms_.empty()) p.terms_.back().coeff.canonicalize();
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    for (auto& t : terms) t.coeff.canonicalize();
    std::sort(terms.begin(), terms.end(), term_before);
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

std::size_t Polynomial::width() const noexcept {
    std::size_t w = 0;
    for (const auto& t : terms_) w = std::max(w, t.monomial.width());
    return w;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        auto c = a->monomial <=> b->monomial;
        if (c > 0) {
            r.terms_.push_back(*a++);
        } else if (c < 0) {
            r.terms_.push_back(*b++);
        } else {
            Rational s = a->coeff + b->coeff;
            if (s != 0) r.terms_.push_back({a->monomial, std::move(s)});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (is_constant()) return o.scaled(terms_.front().coeff);
    if (o.is_constant()) return scaled(o.terms_.front().coeff);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) out.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    return from_terms(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result(Rational(1));
    Polynomial base(*this);
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const auto e = t.monomial.exponent(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps(t.monomial.width());
        for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = t.monomial.exponent(i);
        exps[var] = e - 1;
        out.push_back({Monomial(std::move(exps)), t.coeff * e});
    }
    // Lowering one exponent preserves the relative order of surviving terms.
    Polynomial r;
    r.terms_ = std::move(out);
    return r;
}

std::optional<Polynomial> Polynomial::exact_div(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    if (divisor.is_constant()) return scaled(1 / divisor.terms_.front().coeff);
    Polynomial rem(*this);
    std::vector<Term> quotient;
    const auto& lead = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto& lt = rem.leading_term();
        if (!lead.monomial.divides(lt.monomial)) return std::nullopt;
        Polynomial t = monomial(lead.monomial.quotient_of(lt.monomial), lt.coeff / lead.coeff);
        quotient.push_back(t.terms_.front());
        rem = rem - t * divisor;
    }
    return from_terms(std::move(quotient));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return scaled(1 / leading_coeff());
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.monomial.width(); ++i) {
            const auto e = t.monomial.exponent(i);
            if (e == 0) continue;
            if (i >= point.size()) throw DomainError("evaluation point has too few coordinates");
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
            v *= p;
        }
        sum += v;
    }
    return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    for (const auto& t : terms_) buckets[t.monomial.exponent(var)].push_back({t.monomial.without(var), t.coeff});
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
}

Polynomial Polynomial::from_coefficients(std::size_t var, const std::vector<Polynomial>& coeffs) {
    std::vector<Term> out;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const Monomial x = e == 0 ? Monomial{} : Monomial::variable(var, static_cast<std::uint32_t>(e));
        for (const auto& t : coeffs[e].terms_) out.push_back({t.monomial * x, t.coeff});
    }
    return from_terms(std::move(out));
}

std::string variable_name(std::span<const std::string> names, std::size_t index) {
    if (index < names.size()) return names[index];
    return "x" + std::to_string(index);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out << '-';
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.monomial.width(); ++i) {
            const auto e = t.monomial.exponent(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += variable_name(names, i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out << c.get_str();
        } else if (c == 1) {
            out << mono;
        } else {
            out << c.get_str() << '*' << mono;
        }
    }
    return out.str();
}

// --------------------------------------------------------------------- gcd

namespace {

std::size_t lowest_variable(const Polynomial& a, const Polynomial& b) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto* p : {&a, &b})
        for (const auto& t : p->terms())
            for (std::size_t i = 0; i < t.monomial.width() && i < best; ++i)
                if (t.monomial.exponent(i) != 0) best = i;
    return best;
}

// gcd of the coefficients of p viewed as a polynomial in var.
Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial g;
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
    auto q = p.exact_div(d);
    if (!q) throw DomainError("internal error: inexact division in gcd");
    return *std::move(q);
}

void trim(std::vector<Polynomial>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder of a by b in the variable whose coefficients are given.
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
    const std::size_t db = b.size() - 1;
    const Polynomial& lb = b.back();
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        const Polynomial la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] = a[i + shift] - la * b[i];
        trim(a);
    }
    return a;
}

// Degree of the gcd of two univariate polynomials over Q (coefficients by
// ascending power, no trailing zeros).
std::size_t univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim_q = [](std::vector<Rational>& c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
    };
    trim_q(a);
    trim_q(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
            trim_q(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// True when gcd(a, b) certainly does not depend on v. The other variables
// are fixed at a point where the leading coefficient of a in v does not
// vanish; the image of the true gcd then keeps its v-degree and divides both
// images, so a constant image gcd bounds that degree by zero.
bool gcd_free_of(const Polynomial& a, const Polynomial& b, std::size_t v) {
    if (!a.depends_on(v) || !b.depends_on(v)) return true;
    const std::size_t width = std::max(a.width(), b.width());
    const auto ca = a.coefficients_in(v);
    const auto cb = b.coefficients_in(v);
    for (long attempt = 0; attempt < 4; ++attempt) {
        std::vector<Rational> point(width);
        for (std::size_t i = 0; i < width; ++i)
            point[i] = Rational(static_cast<long>(3 + 7 * i) + 11 * attempt, 2 + static_cast<long>(i));
        if (ca.back().evaluate(point) == 0) continue;
        std::vector<Rational> ia, ib;
        for (const auto& c : ca) ia.push_back(c.evaluate(point));
        for (const auto& c : cb) ib.push_back(c.evaluate(point));
        return univariate_gcd_degree(std::move(ia), std::move(ib)) == 0;
    }
    return false;
}


// ------------------------------------------------------- heuristic gcd
// Evaluates one variable at a large integer, recurses, and rebuilds the
// candidate from its xi-adic digits; a candidate is accepted only after it
// divides both inputs exactly, in which case it is the gcd.

Integer integer_content(const Polynomial& p) {
    Integer c(0);
    for (const auto& t : p.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_num_mpz_t());
    return c;
}

Integer max_norm(const Polynomial& p) {
    Integer m(0);
    for (const auto& t : p.terms()) {
        Integer a = abs(t.coeff.get_num());
        if (a > m) m = a;
    }
    return m;
}

// Scales to integer coefficients with content 1.
Polynomial integer_primitive(const Polynomial& p) {
    Integer l(1);
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    Polynomial q = p.scaled(Rational(l));
    return q.scaled(Rational(1) / Rational(integer_content(q)));
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Integer& x) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), t.monomial.exponent(var));
        terms.push_back({t.monomial.without(var), t.coeff * Rational(pw)});
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial interpolate(Polynomial h, std::size_t var, const Integer& x) {
    std::vector<Term> out;
    const Integer half = x / 2;
    for (std::uint32_t power = 0; !h.is_zero(); ++power) {
        std::vector<Term> digit;
        for (const auto& t : h.terms()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), x.get_mpz_t());
            if (r > half) r -= x;
            if (r != 0) digit.push_back({t.monomial, Rational(r)});
        }
        const Polynomial g = Polynomial::from_terms(digit);
        for (const auto& t : g.terms()) out.push_back({t.monomial * Monomial::variable(var, power), t.coeff});
        h = (h - g).scaled(Rational(1) / Rational(x));
        if (power == std::numeric_limits<std::uint32_t>::max()) throw DomainError("interpolation overflow");
    }
    return Polynomial::from_terms(std::move(out));
}

// Integer gcd of integer polynomials, or nullopt when the heuristic gives up.
std::optional<Polynomial> heuristic_gcd(const Polynomial& f0, const Polynomial& g0) {
    const Integer cf = integer_content(f0), cg = integer_content(g0);
    Integer c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    if (f0.is_constant() || g0.is_constant()) return Polynomial(Rational(c));
    const Polynomial f = f0.scaled(Rational(1) / Rational(c));
    const Polynomial g = g0.scaled(Rational(1) / Rational(c));

    std::size_t var = 0;
    for (const auto* p : {&f, &g})
        for (const auto& t : p->terms()) var = std::max(var, t.monomial.width());
    --var;
    if (!f.depends_on(var) && !g.depends_on(var)) return std::nullopt;

    const Integer fn = max_norm(f), gn = max_norm(g);
    const Integer bound = 2 * std::min(fn, gn) + 29;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), bound.get_mpz_t());
    Integer x = std::min(bound, Integer(99 * root));
    const Integer lf = abs(f.leading_coeff().get_num()), lg = abs(g.leading_coeff().get_num());
    const Integer alt = 2 * std::min(Integer(fn / lf), Integer(gn / lg)) + 4;
    if (alt > x) x = alt;

    for (int attempt = 0; attempt < 6; ++attempt) {
        const Polynomial ff = substitute(f, var, x), gg = substitute(g, var, x);
        if (!ff.is_zero() && !gg.is_zero()) {
            auto h = heuristic_gcd(ff, gg);
            if (!h) return std::nullopt;
            Polynomial cand = interpolate(*h, var, x);
            if (!cand.is_zero()) {
                cand = cand.scaled(Rational(1) / Rational(integer_content(cand)));
                if (cand.leading_coeff() < 0) cand = -cand;
                if (f.exact_div(cand) && g.exact_div(cand)) return cand.scaled(Rational(c));
            }
        }
        Integer r1, r2;
        mpz_sqrt(r1.get_mpz_t(), x.get_mpz_t());
        mpz_sqrt(r2.get_mpz_t(), r1.get_mpz_t());
        x = Integer(73794 * x * r2) / 27011;
    }
    return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
    if (a == b) return a.monic();
    if (auto q = a.exact_div(b)) return b.monic();
    if (auto q = b.exact_div(a)) return a.monic();

    // A gcd free of some variable divides every coefficient in that variable,
    // which removes the variable from the problem.
    const std::size_t width = std::max(a.width(), b.width());
    for (std::size_t w = 0; w < width; ++w) {
        if (!a.depends_on(w) && !b.depends_on(w)) continue;
        if (!gcd_free_of(a, b, w)) continue;
        Polynomial g;
        for (const auto* p : {&a, &b})
            for (const auto& c : p->coefficients_in(w)) {
                if (c.is_zero()) continue;
                g = gcd(g, c);
                if (g.is_constant()) return Polynomial(Rational(1));
            }
        return g.monic();
    }

    if (auto h = heuristic_gcd(integer_primitive(a), integer_primitive(b))) return h->monic();

    const std::size_t v = lowest_variable(a, b);
    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial c = gcd(ca, cb);

    auto pa = divide_exact(a, ca).coefficients_in(v);
    auto pb = divide_exact(b, cb).coefficients_in(v);
    if (pa.size() < pb.size()) std::swap(pa, pb);

    // Primitive polynomial remainder sequence.
    while (true) {
        auto r = pseudo_remainder(pa, pb);
        if (r.empty()) break;
        if (r.size() == 1) {
            pb = {Polynomial(Rational(1))};
            break;
        }
        Polynomial rp = Polynomial::from_coefficients(v, r);
        rp = divide_exact(rp, content_in(rp, v)).monic();
        pa = std::move(pb);
        pb = rp.coefficients_in(v);
    }
    Polynomial g = Polynomial::from_coefficients(v, pb);
    g = divide_exact(g, content_in(g, v));
    return (c * g).monic();
}

}  // namespace paratensor::symexpr
