#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qf/congruent.hpp"
#include "qf/multipoly.hpp"

namespace qf {

/// Diagonal quartic form sum_i coeff_i * var_i^4 = 0 with nonzero rational
/// coefficients and at least 3 variables.
class DiagonalForm {
public:
    DiagonalForm(std::vector<Rational> coeffs, std::vector<std::string> vars);

    std::size_t arity() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const std::vector<std::string>& vars() const { return vars_; }

    MultiPoly to_poly() const;
    Rational eval(const std::vector<Rational>& v) const;

    bool operator==(const DiagonalForm& o) const = default;

private:
    std::vector<Rational> coeffs_;
    std::vector<std::string> vars_;
};

/// Solution whose coordinates are rational functions of free parameters.
/// No coordinate is identically zero.
class ParametricSolution {
public:
    ParametricSolution(std::vector<std::string> params, std::vector<RatFunc> coords);

    const std::vector<std::string>& params() const { return params_; }
    const std::vector<RatFunc>& coords() const { return coords_; }

    std::vector<Rational> eval_at(const std::map<std::string, Rational>& point) const;

private:
    std::vector<std::string> params_;
    std::vector<RatFunc> coords_;
};

/// A theorem-1.1-style construction instantiated at concrete parameters:
/// the form, the symbolic solution, and the evaluated/cleared vectors.
struct VarietyConstruction {
    DiagonalForm form;
    ParametricSolution parametric;
    std::vector<Rational> vector;
    std::vector<Integer> cleared;
    Integer denominator;
};

/// x^4+y^4-z^4 = 2u^4+2v^4+2w^4 via family i -> EC point -> Prop 2.6.
VarietyConstruction thm11_eq16(const Integer& a, const Integer& b);
/// x^4+y^4-z^4 = u^4+2v^4+2w^4 via family i -> quartic triple -> Lemma 2.7.
VarietyConstruction thm11_eq17(const Integer& a, const Integer& b);
/// x^4+y^4+4z^4 = u^4+2v^4+2w^4 via family iii (requires a > b).
VarietyConstruction thm11_eq18(const Integer& a, const Integer& b);
/// x^4+y^4-4z^4 = 4u^4+v^4-2w^4 via family ii (requires a != b). The sign of
/// the 4z^4 term is opposite to the printed equation; only this variant
/// verifies. See splitting_search for the printed signature's NotFound.
VarietyConstruction thm11_eq19_variant(const Integer& a, const Integer& b);

/// Exact identity sum_i c_i * g_i^4 = 2 * n_poly^2.
struct SplittingIdentity {
    MultiPoly n_poly;
    std::vector<std::pair<Rational, MultiPoly>> terms;

    MultiPoly residual() const; // sum - 2*n_poly^2, zero by construction
};

struct SplittingBounds {
    std::uint32_t max_exponent = 4; ///< per-variable exponent cap in candidate monomials
    std::uint32_t max_coeff = 4;    ///< cap for the outer and binomial coefficients
    std::size_t max_candidates = 20000;
};

/// Deterministic search for terms g_i from the candidate set
/// {c*m, c*(p*m1 +- q*m2)} with sum_i signature_i * g_i^4 = 2*n_poly^2.
std::optional<SplittingIdentity> splitting_search(const MultiPoly& n_poly,
                                                  const std::vector<Rational>& signature,
                                                  const SplittingBounds& bounds = {});

/// Certified input for the Theorem 1.2 composer: f(a1(t), a2(t)) equals
/// sum_i k_i * b_i(t)^4 with f one of the three family shapes.
struct Thm12Witness {
    FamilyShape shape;
    MultiPoly a1, a2;          // polynomials in "t"
    std::vector<Rational> k;
    std::vector<MultiPoly> b;  // polynomials in "t"
};

/// Form structure of the Theorem 1.2 expansion for coefficients k:
/// x^4+y^4 - 2z^4 - sum_i 2k_i^2 v_i^4 - sum_{i<j} 4k_i k_j v_ij^4,
/// with (m^2+m+6)/2 variables.
DiagonalForm thm12_form(const std::vector<Rational>& k);

struct Thm12Result {
    DiagonalForm form;
    ParametricSolution parametric;
};

Thm12Result thm12_expand(const Thm12Witness& witness);

struct RemarkFamilyResult {
    DiagonalForm form;
    ParametricSolution parametric;
    SplittingIdentity splitting;
    /// True when the printed Remark signature (s^2, 2, 2s^2) was found;
    /// false when the Theorem 1.2 expansion splitting was used instead.
    bool printed_signature_used;
};

/// The Remark family built from the Lemma 2.8 witness
/// n(t) = s*c^4 + (4/s)*d^4 = a^4 - b^4.
RemarkFamilyResult remark_family(const Rational& s);

struct Thm13Result {
    DiagonalForm form;
    ParametricSolution parametric;
    std::size_t thm12_variable_count; ///< (m'^2+m'+6)/2 at m' = 2m-1
    std::size_t printed_variable_count; ///< the paper's 2m^2-m+4
};

/// Composes a caller-supplied symmetric witness (2m-1 terms) through
/// Theorem 1.2 and reports the variable-count discrepancy against the
/// printed Theorem 1.3 value.
Thm13Result thm13_compose(std::size_t m, const Thm12Witness& symmetric_solution);

} // namespace qf
