#include "qf/exactnum.hpp"

#include <cctype>

namespace qf {

Rational normalize(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DomainError("division by zero");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer isqrt(const Integer& n) {
    if (n < 0) {
        throw DomainError("isqrt of negative integer");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) {
        return false;
    }
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) {
        throw DomainError("exact_sqrt of negative rational");
    }
    const Integer num = q.get_num();
    const Integer den = q.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den)) {
        return std::nullopt;
    }
    return normalize(isqrt(num), isqrt(den));
}

std::optional<Rational> exact_fourth_root(const Rational& q) {
    if (q < 0) {
        return std::nullopt;
    }
    auto half = exact_sqrt(q);
    if (!half) {
        return std::nullopt;
    }
    return exact_sqrt(*half);
}

Rational pow4(const Rational& x) {
    Rational s = x * x;
    return s * s;
}

Rational pow_int(const Rational& base, unsigned exp) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    // Powers of a canonical fraction stay coprime with positive denominator.
    return Rational(num, den);
}

Integer rat_num(const Rational& q) { return Integer(q.get_num()); }
Integer rat_den(const Rational& q) { return Integer(q.get_den()); }

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_str();
}

namespace {

bool looks_like_integer(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Integer parse_integer(std::string_view s) {
    if (!looks_like_integer(s)) {
        throw DomainError("invalid integer literal: '" + std::string(s) + "'");
    }
    return Integer(std::string(s));
}

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s));
    }
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    return normalize(num, den);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return normalize(num, den);
}

Rational rational_lcm(const Rational& a, const Rational& b) {
    Integer num, den;
    mpz_lcm(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_gcd(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return normalize(num, den);
}

} // namespace qf
