#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qf/exactnum.hpp"
#include "qf/multipoly.hpp"

namespace qf::test {

/// Deterministic randomness for property tests.
class Rng {
public:
    explicit Rng(unsigned long seed = 0x5eed) : state_(gmp_randinit_mt) {
        state_.seed(seed);
    }

    Integer integer(unsigned bits) {
        Integer n = state_.get_z_bits(bits);
        if (state_.get_z_bits(1) == 1) {
            n = -n;
        }
        return n;
    }

    Integer nonneg(unsigned long bound) { // uniform in [0, bound)
        return state_.get_z_range(Integer(bound));
    }

    Rational rational(unsigned bits) {
        Integer den = state_.get_z_bits(bits);
        if (den == 0) {
            den = 1;
        }
        return normalize(integer(bits), den);
    }

    Rational nonzero_rational(unsigned bits) {
        Rational q = rational(bits);
        return q == 0 ? Rational(1) : q;
    }

    MultiPoly poly(const std::vector<std::string>& vars, unsigned max_terms,
                   unsigned max_exp, unsigned coeff_bits) {
        MultiPoly p;
        unsigned terms = 1 + static_cast<unsigned>(nonneg(max_terms).get_ui());
        for (unsigned i = 0; i < terms; ++i) {
            MultiPoly mono(rational(coeff_bits));
            for (const auto& v : vars) {
                mono *= MultiPoly::variable(
                    v, static_cast<std::uint32_t>(nonneg(max_exp + 1).get_ui()));
            }
            p += mono;
        }
        return p;
    }

    MultiPoly nonzero_poly(const std::vector<std::string>& vars, unsigned max_terms,
                           unsigned max_exp, unsigned coeff_bits) {
        for (int tries = 0; tries < 32; ++tries) {
            MultiPoly p = poly(vars, max_terms, max_exp, coeff_bits);
            if (!p.is_zero()) {
                return p;
            }
        }
        return MultiPoly(Rational(1));
    }

private:
    gmp_randclass state_;
};

/// Rewrite var^2 -> replacement until the polynomial is linear in var.
/// The replacement must not contain var.
inline MultiPoly reduce_square(const MultiPoly& p, const std::string& var,
                               const MultiPoly& replacement) {
    MultiPoly cur = p;
    while (cur.degree_in(var) >= 2) {
        MultiPoly kept, quotient;
        for (const auto& [coeff, mono] : cur.terms()) {
            auto it = mono.find(var);
            if (it != mono.end() && it->second >= 2) {
                auto reduced = mono;
                reduced[var] -= 2;
                if (reduced[var] == 0) {
                    reduced.erase(var);
                }
                quotient += MultiPoly::from_terms({{coeff, reduced}});
            } else {
                kept += MultiPoly::from_terms({{coeff, mono}});
            }
        }
        cur = kept + quotient * replacement;
    }
    return cur;
}

inline bool contains_vector(const std::vector<std::vector<Integer>>& haystack,
                            const std::vector<Integer>& needle) {
    for (const auto& v : haystack) {
        if (v == needle) {
            return true;
        }
    }
    return false;
}

} // namespace qf::test
