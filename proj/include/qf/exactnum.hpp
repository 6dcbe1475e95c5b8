#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "qf/errors.hpp"

namespace qf {

// The scalar types of the whole library. Everything downstream computes in
// exact arbitrary-precision arithmetic; there is no floating-point mode.
using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced fraction with positive denominator. Throws DomainError("division
/// by zero") when den = 0.
Rational normalize(const Integer& num, const Integer& den);

/// Floor square root of a nonnegative integer.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// r with r^2 = q and r >= 0, iff numerator and denominator are both perfect
/// squares. Throws DomainError on q < 0; returns nullopt for non-squares.
std::optional<Rational> exact_sqrt(const Rational& q);

/// r with r^4 = q and r >= 0 when it exists; nullopt otherwise (including
/// all q < 0).
std::optional<Rational> exact_fourth_root(const Rational& q);

Rational pow4(const Rational& x);
Rational pow_int(const Rational& base, unsigned exp);

Integer rat_num(const Rational& q);
Integer rat_den(const Rational& q);

/// Decimal serialization; rationals as "p/q" with the denominator omitted
/// when it is 1.
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer parse_integer(std::string_view s);
Rational parse_rational(std::string_view s);

/// gcd/lcm on positive rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
Rational rational_gcd(const Rational& a, const Rational& b);
Rational rational_lcm(const Rational& a, const Rational& b);

} // namespace qf
