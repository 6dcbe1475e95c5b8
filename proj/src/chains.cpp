#include "qf/chains.hpp"

#include <algorithm>
#include <map>

#include "qf/surfaces.hpp"

namespace qf {

FChain::FChain(std::vector<FBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw DomainError("F-chain requires at least one block");
    }
    common_value_ = blocks_.front().value();
    for (const auto& b : blocks_) {
        if (b.value() != common_value_) {
            throw DomainError("F-chain blocks do not share one value");
        }
    }
    if (common_value_ <= 0) {
        throw DomainError("F-chain common value must be positive");
    }
}

FChain f_chain_lemma28(const Rational& t, const Rational& s) {
    if (t == 0) {
        throw DegenerateParameters("f_chain_lemma28: t must be nonzero");
    }
    Rational t3 = t * t * t;
    Rational t4 = t3 * t;
    if (s == 1) {
        // x^4+4y^4 at (2t^3, 2t) equals x^4-y^4 at (t^4+2, t^4-2).
        return FChain({
            FBlock{FamilyShape::I, Rational(2) * t3, Rational(2) * t},
            FBlock{FamilyShape::III, t4 + Rational(2), t4 - Rational(2)},
        });
    }
    if (s == 2) {
        // 2x^4+2y^4 at (t^3, 2t) equals x^4-y^4 at (t^4/2+2, t^4/2-2).
        return FChain({
            FBlock{FamilyShape::II, t3, Rational(2) * t},
            FBlock{FamilyShape::III, t4 / Rational(2) + Rational(2),
                   t4 / Rational(2) - Rational(2)},
        });
    }
    throw DomainError("f_chain_lemma28: s must be 1 or 2");
}

Rational phi_value(PhiShape shape, const Rational& x, const Rational& y,
                   const Rational& z) {
    Rational zc = (shape == PhiShape::MinusTwoZ4) ? Rational(2) : Rational(1);
    return pow4(x) + pow4(y) - zc * pow4(z);
}

PhiChain::PhiChain(std::vector<PhiBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw DomainError("phi-chain requires at least one block");
    }
    common_value_ = blocks_.front().value();
    for (const auto& b : blocks_) {
        if (b.value() != common_value_) {
            throw DomainError("phi-chain blocks do not share one value");
        }
    }
}

namespace {

/// Lift one block's congruent value n to a phi-block of value 2n^2.
PhiBlock lift_block(FamilyShape family, const Rational& a, const Rational& b,
                    PhiShape route) {
    RationalCertificate cert = family_at(family, a, b);
    PhiBlock out;
    out.shape = route;
    if (route == PhiShape::MinusTwoZ4) {
        // Prop 2.6: (x0/w0)^4 + (y0/w0)^4 - 2(z0/w0)^4 = 2n^2.
        auto [u, v] = cert_to_uv(cert);
        SurfaceSolution sol = prop26_solution(cert.n, u, v);
        const auto& c = sol.coords();
        out.coords = {c[0] / c[3], c[1] / c[3], c[2] / c[3]};
    } else {
        // Lemma 2.7: (x/w)^4 + (y/w)^4 - (z/w)^4 = 2n^2 with
        // (x, y, z, w) = (X^2, nY^2, K, XY).
        Rational K = cert.z * cert.t;
        SurfaceSolution sol = lemma27_solution(cert.n, cert.x, cert.y, K);
        const auto& c = sol.coords();
        out.coords = {c[0] / c[3], c[1] / c[3], c[2] / c[3]};
    }
    return out;
}

} // namespace

PhiChain thm14_lift(const FChain& fc, const std::vector<PhiShape>& phi_ids,
                    const std::vector<std::pair<Rational, Rational>>& family_params) {
    const auto& blocks = fc.blocks();
    if (phi_ids.size() != blocks.size() || family_params.size() != blocks.size()) {
        throw DomainError("thm14_lift: per-block argument count mismatch");
    }
    std::vector<PhiBlock> lifted;
    lifted.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& [a, b] = family_params[i];
        if (family_value(blocks[i].shape, a, b) != fc.common_value()) {
            throw DomainError("thm14_lift: family parameters do not reproduce the block value");
        }
        lifted.push_back(lift_block(blocks[i].shape, a, b, phi_ids[i]));
    }
    PhiChain chain(std::move(lifted));
    Rational expected = Rational(2) * fc.common_value() * fc.common_value();
    if (chain.common_value() != expected) {
        throw DomainError("thm14_lift: lifted value is not 2n^2"); // unreachable
    }
    return chain;
}

std::array<VerifiedSolution, 3> corollary_solutions(const Rational& t) {
    if (t == 0) {
        throw DegenerateParameters("corollary_solutions: t must be nonzero");
    }
    FChain fc = f_chain_lemma28(t, Rational(1));
    const auto& a_args = fc.blocks()[0];
    const auto& b_args = fc.blocks()[1];
    auto lift = [&](std::size_t block, PhiShape route) {
        const FBlock& fb = (block == 0) ? a_args : b_args;
        return lift_block(fb.shape, fb.arg1, fb.arg2, route);
    };

    // phi_alpha(A) = phi_beta(B) = 2n^2 rearranges to
    // x_A^4 + y_A^4 + c_beta z_B^4 = x_B^4 + y_B^4 + c_alpha z_A^4.
    auto assemble = [&](PhiShape alpha, PhiShape beta) {
        PhiBlock A = lift(0, alpha);
        PhiBlock B = lift(1, beta);
        Rational c_alpha = (alpha == PhiShape::MinusTwoZ4) ? Rational(2) : Rational(1);
        Rational c_beta = (beta == PhiShape::MinusTwoZ4) ? Rational(2) : Rational(1);
        DiagonalForm form({Rational(1), Rational(1), c_beta, Rational(-1), Rational(-1),
                           -c_alpha},
                          {"x", "y", "z", "u", "v", "w"});
        std::vector<Rational> coords{A.coords[0], A.coords[1], B.coords[2],
                                     B.coords[0], B.coords[1], A.coords[2]};
        if (form.eval(coords) != 0) {
            throw DomainError("corollary_solutions: verification failed"); // unreachable
        }
        return VerifiedSolution{std::move(form), std::move(coords)};
    };

    return {
        // x^4+y^4+2z^4 = u^4+v^4+2w^4
        assemble(PhiShape::MinusTwoZ4, PhiShape::MinusTwoZ4),
        // x^4+y^4+z^4 = u^4+v^4+w^4
        assemble(PhiShape::MinusZ4, PhiShape::MinusZ4),
        // x^4+y^4+z^4 = u^4+v^4+2w^4
        assemble(PhiShape::MinusTwoZ4, PhiShape::MinusZ4),
    };
}

std::vector<PhiChain> chain_search(PhiShape phi, std::size_t m, unsigned height,
                                   unsigned height_cap) {
    if (m < 2) {
        throw DomainError("chain_search requires m >= 2");
    }
    if (height > height_cap) {
        throw DomainError("chain_search: height exceeds the configured cap");
    }
    // Canonical triples: 0 <= x <= y (phi is symmetric in x, y), z >= 0,
    // not all zero; fourth powers make signs irrelevant.
    std::map<Rational, std::vector<std::array<Integer, 3>>> groups;
    for (unsigned x = 0; x <= height; ++x) {
        for (unsigned y = x; y <= height; ++y) {
            for (unsigned z = 0; z <= height; ++z) {
                if (x == 0 && y == 0 && z == 0) {
                    continue;
                }
                Rational val = phi_value(phi, Rational(x), Rational(y), Rational(z));
                if (val == 0) {
                    continue;
                }
                groups[val].push_back({Integer(x), Integer(y), Integer(z)});
            }
        }
    }
    std::vector<PhiChain> out;
    for (auto& [val, triples] : groups) {
        if (triples.size() < m) {
            continue;
        }
        std::sort(triples.begin(), triples.end());
        std::vector<PhiBlock> blocks;
        blocks.reserve(triples.size());
        for (const auto& tr : triples) {
            blocks.push_back(
                PhiBlock{phi, {Rational(tr[0]), Rational(tr[1]), Rational(tr[2])}});
        }
        out.emplace_back(std::move(blocks));
    }
    return out; // std::map iteration: ascending common value
}

} // namespace qf
