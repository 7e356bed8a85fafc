#include "paratensor/symexpr/rational.hpp"

#include "paratensor/error.hpp"

namespace paratensor::symexpr {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace paratensor::symexpr
