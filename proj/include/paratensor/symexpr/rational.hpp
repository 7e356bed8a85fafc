#pragma once

#include <gmpxx.h>

#include <string>

namespace paratensor::symexpr {

/// Exact rational backed by GMP. mpq_class keeps gcd(|num|, den) = 1 and
/// den > 0 after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical p/q; throws DomainError on q == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "3", "-2/5".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace paratensor::symexpr
