#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qf/congruent.hpp"
#include "qf/varieties.hpp"

namespace qf {

enum class VerifyMode { Numeric, Symbolic };

struct CoordinateFinding {
    std::size_t index = 0;
    bool zero_at_point = false;       ///< numeric: coordinate vanishes
    bool identically_zero = false;    ///< symbolic: coordinate is the zero function
    std::optional<MultiPoly> vanishing_locus; ///< symbolic: coordinate numerator
};

/// Outcome of a membership check. `pass` is true iff the residual is exactly
/// zero (and, for numeric checks, the required coordinates are nonzero).
struct VerificationReport {
    DiagonalForm form;
    VerifyMode mode;
    bool pass;
    std::optional<Rational> residual_value;
    std::optional<MultiPoly> residual_poly;
    std::vector<CoordinateFinding> coordinates;
};

/// Exact check of sum coeff_i v_i^4 = 0. The all-zero vector is rejected as
/// trivial; indices in required_nonzero must hold nonzero entries.
VerificationReport verify_numeric(const DiagonalForm& form, const std::vector<Rational>& v,
                                  const std::set<std::size_t>& required_nonzero = {});

/// Substitutes the parametric coordinates, cross-multiplies and expands;
/// passes iff the residual polynomial is identically zero. Reports each
/// coordinate's numerator as its vanishing locus.
VerificationReport verify_symbolic(const DiagonalForm& form, const ParametricSolution& ps);

/// All nontrivial integer solutions with max|x_i| <= height, deduplicated to
/// primitive representatives (gcd 1, first nonzero coordinate positive),
/// in lexicographic order. The last coordinate is solved exactly by
/// exact_fourth_root.
std::vector<std::vector<Integer>> brute_force(const DiagonalForm& form, unsigned height,
                                              unsigned height_cap = 1000);

/// Smallest-y certificate with y <= bound, or nullopt. A nullopt does not
/// prove n non-congruent.
std::optional<CongruentCertificate> congruent_check_small(const Integer& n,
                                                          const Integer& bound);

/// Primitive canonical representative: divide by the gcd and flip the global
/// sign so the first nonzero coordinate is positive.
std::vector<Integer> canonicalize_solution(const std::vector<Integer>& v);
std::vector<Integer> canonicalize_solution(const std::vector<Rational>& v);

} // namespace qf
