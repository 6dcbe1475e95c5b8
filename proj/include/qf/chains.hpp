#pragma once

#include <array>
#include <vector>

#include "qf/congruent.hpp"
#include "qf/varieties.hpp"

namespace qf {

/// One F-chain block: a family shape evaluated at a rational argument pair.
struct FBlock {
    FamilyShape shape;
    Rational arg1, arg2;

    Rational value() const { return family_value(shape, arg1, arg2); }
};

/// F_1(x_1,y_1) = ... = F_m(x_m,y_m): every block evaluates to the common
/// value, which must be positive.
class FChain {
public:
    FChain(std::vector<FBlock> blocks);

    const std::vector<FBlock>& blocks() const { return blocks_; }
    const Rational& common_value() const { return common_value_; }

private:
    std::vector<FBlock> blocks_;
    Rational common_value_;
};

/// Length-2 F-chains from Lemma 2.8. s = 1 pairs x^4+4y^4 with x^4-y^4;
/// s = 2 pairs 2x^4+2y^4 with x^4-y^4.
FChain f_chain_lemma28(const Rational& t, const Rational& s);

/// The two lifted block shapes of Theorem 1.4.
enum class PhiShape { MinusTwoZ4, MinusZ4 }; // x^4+y^4-2z^4 and x^4+y^4-z^4

Rational phi_value(PhiShape shape, const Rational& x, const Rational& y, const Rational& z);

struct PhiBlock {
    PhiShape shape;
    std::array<Rational, 3> coords;

    Rational value() const { return phi_value(shape, coords[0], coords[1], coords[2]); }
};

/// phi_1(...) = ... = phi_m(...): every block evaluates to the common value.
class PhiChain {
public:
    PhiChain(std::vector<PhiBlock> blocks);

    const std::vector<PhiBlock>& blocks() const { return blocks_; }
    const Rational& common_value() const { return common_value_; }

private:
    std::vector<PhiBlock> blocks_;
    Rational common_value_;
};

/// Lift an F-chain to a phi-chain of value 2n^2. For each block i,
/// family_params[i] must reproduce the block's value through the matching
/// family; phi_ids[i] picks the Prop 2.6 route (MinusTwoZ4) or the
/// Lemma 2.7 route (MinusZ4). Coordinates are divided by the block's w.
PhiChain thm14_lift(const FChain& fc, const std::vector<PhiShape>& phi_ids,
                    const std::vector<std::pair<Rational, Rational>>& family_params);

/// A concrete verified solution of a diagonal form.
struct VerifiedSolution {
    DiagonalForm form;
    std::vector<Rational> coords;
};

/// The three corollary equations at parameter t, via the s = 1 Lemma 2.8
/// chain (block A = x^4+4y^4 at (2t^3, 2t), block B = x^4-y^4 at
/// (t^4+2, t^4-2)); block A supplies the left side.
std::array<VerifiedSolution, 3> corollary_solutions(const Rational& t);

/// Bounded-height enumeration of integer triples with equal phi values,
/// grouped into chains of length >= m. Zero-valued groups are dropped;
/// output is canonical (triples sorted within a chain, chains sorted by
/// value) and deterministic.
std::vector<PhiChain> chain_search(PhiShape phi, std::size_t m, unsigned height,
                                   unsigned height_cap = 1000);

} // namespace qf
