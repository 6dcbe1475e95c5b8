#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qf/exactnum.hpp"

namespace qf {

/// Sparse multivariate polynomial over Rational.
///
/// Variables are kept as a sorted list of names; every exponent vector has
/// the same arity as that list and unused variables are pruned, so equal
/// polynomials compare equal structurally. Terms are stored in descending
/// graded-lexicographic order (total degree first, then lexicographic on the
/// exponent vector), which is also the serialization order. No zero
/// coefficient is ever stored.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c);

    static MultiPoly variable(const std::string& name, std::uint32_t exp = 1);
    /// Build from explicit terms: list of (coefficient, {var -> exponent}).
    static MultiPoly from_terms(
        const std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>>& terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || vars_.empty(); }
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(const std::string& var) const;
    bool is_homogeneous() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(std::uint32_t k) const;

    /// Exact evaluation; every variable must be bound.
    Rational eval_at(const std::map<std::string, Rational>& point) const;

    /// Variable-for-polynomial substitution (used to instantiate formula
    /// templates); unbound variables are kept as themselves.
    MultiPoly substitute_polys(const std::map<std::string, MultiPoly>& bindings) const;

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    Rational content() const;
    /// Variable-wise minimum exponent over all terms.
    std::map<std::string, std::uint32_t> monomial_gcd() const;
    /// True when the polynomial is coefficient * single monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    /// Long division; nullopt when the divisor does not divide exactly.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    /// Terms in canonical order as (coefficient, {var -> exponent}) pairs.
    std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> terms() const;

    std::string to_string() const;

private:
    struct GradedLexDesc {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const Exponents& exps, const Rational& coeff);
    void prune_vars();
    static void align(const MultiPoly& a, const MultiPoly& b,
                      std::vector<std::string>& vars, MultiPoly& ra, MultiPoly& rb);
    MultiPoly reindexed(const std::vector<std::string>& new_vars) const;

    friend class RatFunc;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

/// Quotient of two MultiPoly. Simplification is limited to content and
/// monomial cancellation; equality is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);
    explicit RatFunc(const MultiPoly& p) : RatFunc(p, MultiPoly(Rational(1))) {}
    explicit RatFunc(const Rational& c) : RatFunc(MultiPoly(c), MultiPoly(Rational(1))) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc pow(std::uint32_t k) const;

    /// Equality as rational functions (cross-multiplied).
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Exact evaluation; throws DomainError when the denominator vanishes at
    /// the point.
    Rational eval_at(const std::map<std::string, Rational>& point) const;

    std::string to_string() const;

private:
    MultiPoly num_;
    MultiPoly den_;
    void reduce();
};

/// Substitute rational functions for every variable of p.
RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings);

struct ClearedCoords {
    std::vector<MultiPoly> coords;
    MultiPoly common_denominator;
};

/// Multiply every coordinate by one common denominator D (an lcm computed by
/// content/monomial rules, with a product fallback for non-monomial
/// denominators) so all coordinates become polynomials. For a homogeneous
/// degree-4 diagonal form this scales the form value by D^4.
ClearedCoords clear_denominators(const std::vector<RatFunc>& coords);

struct ClearedRationalCoords {
    std::vector<Integer> coords;
    Integer common_denominator;
};

ClearedRationalCoords clear_denominators(const std::vector<Rational>& coords);

} // namespace qf
