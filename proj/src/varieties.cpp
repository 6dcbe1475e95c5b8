#include "qf/varieties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qf/surfaces.hpp"

namespace qf {

DiagonalForm::DiagonalForm(std::vector<Rational> coeffs, std::vector<std::string> vars)
    : coeffs_(std::move(coeffs)), vars_(std::move(vars)) {
    if (coeffs_.size() != vars_.size()) {
        throw DomainError("diagonal form: coefficient/variable count mismatch");
    }
    if (coeffs_.size() < 3) {
        throw DomainError("diagonal form requires at least 3 variables");
    }
    for (const auto& c : coeffs_) {
        if (c == 0) {
            throw DomainError("diagonal form has a zero coefficient");
        }
    }
    std::set<std::string> uniq(vars_.begin(), vars_.end());
    if (uniq.size() != vars_.size()) {
        throw DomainError("diagonal form has duplicate variable names");
    }
}

MultiPoly DiagonalForm::to_poly() const {
    MultiPoly p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p += MultiPoly(coeffs_[i]) * MultiPoly::variable(vars_[i], 4);
    }
    return p;
}

Rational DiagonalForm::eval(const std::vector<Rational>& v) const {
    if (v.size() != coeffs_.size()) {
        throw DomainError("diagonal form evaluation: arity mismatch");
    }
    Rational acc(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] * pow4(v[i]);
    }
    return acc;
}

ParametricSolution::ParametricSolution(std::vector<std::string> params,
                                       std::vector<RatFunc> coords)
    : params_(std::move(params)), coords_(std::move(coords)) {
    for (const auto& c : coords_) {
        if (c.is_zero()) {
            throw DomainError("parametric solution has an identically zero coordinate");
        }
    }
}

std::vector<Rational> ParametricSolution::eval_at(
    const std::map<std::string, Rational>& point) const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
        out.push_back(c.eval_at(point));
    }
    return out;
}

namespace {

/// Residual of substituting a parametric solution into a form; identically
/// zero iff the solution satisfies the form.
MultiPoly symbolic_residual(const DiagonalForm& form, const ParametricSolution& ps) {
    if (ps.coords().size() != form.arity()) {
        throw DomainError("symbolic verification: arity mismatch");
    }
    std::map<std::string, RatFunc> bindings;
    for (std::size_t i = 0; i < form.arity(); ++i) {
        bindings.emplace(form.vars()[i], ps.coords()[i]);
    }
    return substitute(form.to_poly(), bindings).num();
}

void require_identity(const DiagonalForm& form, const ParametricSolution& ps,
                      const char* what) {
    if (!symbolic_residual(form, ps).is_zero()) {
        throw DomainError(std::string(what) + ": symbolic verification failed");
    }
}

VarietyConstruction finish_construction(DiagonalForm form, ParametricSolution parametric,
                                        std::vector<Rational> vec, const char* what) {
    require_identity(form, parametric, what);
    if (form.eval(vec) != 0) {
        throw DomainError(std::string(what) + ": numeric verification failed");
    }
    auto cleared = clear_denominators(vec);
    return VarietyConstruction{std::move(form), std::move(parametric), std::move(vec),
                               std::move(cleared.coords), std::move(cleared.common_denominator)};
}

struct Prop26Symbolic {
    RatFunc x, y, z, w0; // x^4+y^4 = 2z^4 + 2n^2 w0^4 with n = cert.n
    RatFunc n;
};

/// Prop 2.6 coordinates from a symbolic certificate: U = (x/y)^2,
/// V = x*z*t/y^3, then (U^2+2nU-n^2, U^2-2nU-n^2, U^2+n^2, 2V).
Prop26Symbolic prop26_from_polys(const CertificatePolys& f) {
    RatFunc U(f.x.pow(2), f.y.pow(2));
    RatFunc V(f.x * f.z * f.t, f.y.pow(3));
    RatFunc n{f.n};
    RatFunc U2 = U * U;
    RatFunc n2 = n * n;
    RatFunc two{Rational(2)};
    Prop26Symbolic out;
    out.x = U2 + two * n * U - n2;
    out.y = U2 - two * n * U - n2;
    out.z = U2 + n2;
    out.w0 = two * V;
    out.n = n;
    return out;
}

const std::vector<std::string> kSixVars{"x", "y", "z", "u", "v", "w"};

} // namespace

VarietyConstruction thm11_eq16(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) {
        throw DegenerateParameters("thm11_eq16 requires a, b >= 1");
    }
    static const auto parts = [] {
        const auto& f = family_polys(FamilyShape::I);
        Prop26Symbolic s = prop26_from_polys(f);
        RatFunc ab{MultiPoly::variable("a") * MultiPoly::variable("b")};
        RatFunc a2{MultiPoly::variable("a", 2)};
        RatFunc b2{MultiPoly::variable("b", 2)};
        RatFunc two{Rational(2)};
        // 2n^2 w0^4 = (2ab w0)^4 + 2(a^2 w0)^4 + 2(2b^2 w0)^4
        std::vector<RatFunc> coords{s.x, s.y, two * ab * s.w0,
                                    s.z, a2 * s.w0, two * b2 * s.w0};
        DiagonalForm form({Rational(1), Rational(1), Rational(-1), Rational(-2),
                           Rational(-2), Rational(-2)},
                          kSixVars);
        return std::make_pair(std::move(form),
                              ParametricSolution({"a", "b"}, std::move(coords)));
    }();
    // Concrete vector through the positive integer certificate, so V > 0 and
    // the z, v, w entries come out positive.
    auto [curve, point] = cert_to_ec_point(family_i(a, b));
    SurfaceSolution s = prop26_solution(curve, point);
    Rational ra(a), rb(b);
    const Rational& w0 = s.coords()[3];
    std::vector<Rational> vec{s.coords()[0],       s.coords()[1], Rational(2) * ra * rb * w0,
                              s.coords()[2],       ra * ra * w0,  Rational(2) * rb * rb * w0};
    return finish_construction(parts.first, parts.second, std::move(vec), "thm11_eq16");
}

VarietyConstruction thm11_eq17(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) {
        throw DegenerateParameters("thm11_eq17 requires a, b >= 1");
    }
    static const auto parts = [] {
        const auto& f = family_polys(FamilyShape::I);
        MultiPoly XY = f.x * f.y;
        MultiPoly ab = MultiPoly::variable("a") * MultiPoly::variable("b");
        MultiPoly a2 = MultiPoly::variable("a", 2);
        MultiPoly b2 = MultiPoly::variable("b", 2);
        std::vector<RatFunc> coords{
            RatFunc{f.x.pow(2)},
            RatFunc{f.n * f.y.pow(2)},
            RatFunc{f.z * f.t},
            RatFunc{MultiPoly(2) * ab * XY},
            RatFunc{MultiPoly(2) * b2 * XY},
            RatFunc{a2 * XY},
        };
        DiagonalForm form({Rational(1), Rational(1), Rational(-1), Rational(-1),
                           Rational(-2), Rational(-2)},
                          kSixVars);
        return std::make_pair(std::move(form),
                              ParametricSolution({"a", "b"}, std::move(coords)));
    }();
    SurfaceSolution s = lemma27_solution(cert_to_quartic(family_i(a, b)));
    Rational ra(a), rb(b);
    const Rational& XY = s.coords()[3];
    std::vector<Rational> vec{s.coords()[0],
                              s.coords()[1],
                              s.coords()[2],
                              Rational(2) * ra * rb * XY,
                              Rational(2) * rb * rb * XY,
                              ra * ra * XY};
    return finish_construction(parts.first, parts.second, std::move(vec), "thm11_eq17");
}

VarietyConstruction thm11_eq18(const Integer& a, const Integer& b) {
    if (b < 1 || a <= b) {
        throw DegenerateParameters("thm11_eq18 requires a > b >= 1");
    }
    static const auto parts = [] {
        const auto& f = family_polys(FamilyShape::III);
        MultiPoly XY = f.x * f.y;
        MultiPoly ab = MultiPoly::variable("a") * MultiPoly::variable("b");
        MultiPoly a2 = MultiPoly::variable("a", 2);
        MultiPoly b2 = MultiPoly::variable("b", 2);
        // 2n^2 = 2(a^2)^4 + 2(b^2)^4 - 4(ab)^4 for n = a^4-b^4; the negative
        // term moves to the left as +4z^4.
        std::vector<RatFunc> coords{
            RatFunc{f.x.pow(2)},
            RatFunc{f.n * f.y.pow(2)},
            RatFunc{ab * XY},
            RatFunc{f.z * f.t},
            RatFunc{a2 * XY},
            RatFunc{b2 * XY},
        };
        DiagonalForm form({Rational(1), Rational(1), Rational(4), Rational(-1),
                           Rational(-2), Rational(-2)},
                          kSixVars);
        return std::make_pair(std::move(form),
                              ParametricSolution({"a", "b"}, std::move(coords)));
    }();
    SurfaceSolution s = lemma27_solution(cert_to_quartic(family_iii(a, b)));
    Rational ra(a), rb(b);
    const Rational& XY = s.coords()[3];
    std::vector<Rational> vec{s.coords()[0], s.coords()[1], ra * rb * XY,
                              s.coords()[2], ra * ra * XY,  rb * rb * XY};
    return finish_construction(parts.first, parts.second, std::move(vec), "thm11_eq18");
}

VarietyConstruction thm11_eq19_variant(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) {
        throw DegenerateParameters("thm11_eq19_variant requires a, b >= 1");
    }
    if (a == b) {
        throw DegenerateParameters("thm11_eq19_variant requires a != b");
    }
    static const auto parts = [] {
        const auto& f = family_polys(FamilyShape::II);
        MultiPoly XY = f.x * f.y;
        MultiPoly a2 = MultiPoly::variable("a", 2);
        MultiPoly b2 = MultiPoly::variable("b", 2);
        MultiPoly ab = MultiPoly::variable("a") * MultiPoly::variable("b");
        // 2n^2 = 4(a^2+b^2)^4 + 4(a^2-b^2)^4 - 2(2ab)^4 for n = 2a^4+2b^4.
        std::vector<RatFunc> coords{
            RatFunc{f.x.pow(2)},
            RatFunc{f.n * f.y.pow(2)},
            RatFunc{(a2 - b2) * XY},
            RatFunc{(a2 + b2) * XY},
            RatFunc{f.z * f.t},
            RatFunc{MultiPoly(2) * ab * XY},
        };
        DiagonalForm form({Rational(1), Rational(1), Rational(-4), Rational(-4),
                           Rational(-1), Rational(2)},
                          kSixVars);
        return std::make_pair(std::move(form),
                              ParametricSolution({"a", "b"}, std::move(coords)));
    }();
    SurfaceSolution s = lemma27_solution(cert_to_quartic(family_ii(a, b)));
    Rational ra(a), rb(b);
    const Rational& XY = s.coords()[3];
    std::vector<Rational> vec{s.coords()[0],
                              s.coords()[1],
                              (ra * ra - rb * rb) * XY,
                              (ra * ra + rb * rb) * XY,
                              s.coords()[2],
                              Rational(2) * ra * rb * XY};
    return finish_construction(parts.first, parts.second, std::move(vec),
                               "thm11_eq19_variant");
}

// ---------------------------------------------------------------------------
// Splitting search

MultiPoly SplittingIdentity::residual() const {
    MultiPoly acc;
    for (const auto& [c, g] : terms) {
        acc += MultiPoly(c) * g.pow(4);
    }
    return acc - MultiPoly(2) * n_poly.pow(2);
}

namespace {

/// Candidate polynomials in deterministic order: monomials c*m (outer
/// coefficient ascending, exponents graded-lex descending), then binomials
/// c*(p*m1 + s*q*m2) ordered by (c, p, q, m1, m2, sign).
std::vector<MultiPoly> splitting_candidates(const MultiPoly& n_poly,
                                            const SplittingBounds& bounds) {
    const auto vars = n_poly.variables();
    const std::uint32_t target_degree = 2 * n_poly.total_degree();
    const bool homogeneous = n_poly.is_homogeneous();
    // Each g^4 must reach degree <= deg(2n^2); for homogeneous n every g is
    // homogeneous of exactly deg(n)/2.
    std::optional<std::uint32_t> exact_degree;
    if (homogeneous) {
        if (n_poly.total_degree() % 2 != 0) {
            return {};
        }
        exact_degree = n_poly.total_degree() / 2;
    }
    const std::uint32_t max_degree = target_degree / 4;

    // Enumerate admissible monomials, graded-lex descending.
    std::vector<MultiPoly::Exponents> exps;
    MultiPoly::Exponents cur(vars.size(), 0);
    const auto admissible = [&](const MultiPoly::Exponents& e) {
        std::uint64_t deg = 0;
        for (auto x : e) {
            deg += x;
        }
        if (exact_degree) {
            return deg == *exact_degree;
        }
        return deg <= max_degree;
    };
    // Odd iteration over the exponent box.
    std::vector<MultiPoly::Exponents> box;
    box.emplace_back();
    box.back().assign(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::vector<MultiPoly::Exponents> next;
        for (const auto& e : box) {
            for (std::uint32_t k = 0; k <= bounds.max_exponent; ++k) {
                auto ne = e;
                ne[i] = k;
                next.push_back(std::move(ne));
            }
        }
        box = std::move(next);
    }
    for (auto& e : box) {
        if (admissible(e)) {
            exps.push_back(std::move(e));
        }
    }
    auto graded_lex_desc = [](const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
        std::uint64_t da = 0, db = 0;
        for (auto x : a) {
            da += x;
        }
        for (auto x : b) {
            db += x;
        }
        if (da != db) {
            return da > db;
        }
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    };
    std::sort(exps.begin(), exps.end(), graded_lex_desc);

    auto monomial = [&](const MultiPoly::Exponents& e) {
        MultiPoly m(Rational(1));
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] > 0) {
                m *= MultiPoly::variable(vars[i], e[i]);
            }
        }
        return m;
    };

    std::vector<MultiPoly> candidates;
    auto guard = [&]() {
        if (candidates.size() > bounds.max_candidates) {
            throw DomainError("splitting_search: candidate set exceeds the configured cap");
        }
    };
    for (std::uint32_t c = 1; c <= bounds.max_coeff; ++c) {
        for (const auto& e : exps) {
            bool constant = std::all_of(e.begin(), e.end(),
                                        [](std::uint32_t x) { return x == 0; });
            if (constant && !exact_degree.has_value() && target_degree > 0) {
                // Constants cannot contribute the needed degree; still allow
                // them when the target itself is constant.
                continue;
            }
            candidates.push_back(monomial(e) * Rational(c));
            guard();
        }
    }
    for (std::uint32_t c = 1; c <= bounds.max_coeff; ++c) {
        for (std::uint32_t p = 1; p <= bounds.max_coeff; ++p) {
            for (std::uint32_t q = 1; q <= bounds.max_coeff; ++q) {
                if (std::gcd(p, q) != 1) {
                    continue;
                }
                for (std::size_t i = 0; i < exps.size(); ++i) {
                    for (std::size_t j = i + 1; j < exps.size(); ++j) {
                        MultiPoly m1 = monomial(exps[i]) * Rational(p);
                        MultiPoly m2 = monomial(exps[j]) * Rational(q);
                        candidates.push_back((m1 + m2) * Rational(c));
                        candidates.push_back((m1 - m2) * Rational(c));
                        guard();
                    }
                }
            }
        }
    }
    return candidates;
}

} // namespace

std::optional<SplittingIdentity> splitting_search(const MultiPoly& n_poly,
                                                  const std::vector<Rational>& signature,
                                                  const SplittingBounds& bounds) {
    if (signature.empty()) {
        throw DomainError("splitting_search: empty signature");
    }
    for (const auto& c : signature) {
        if (c == 0) {
            throw DomainError("splitting_search: zero signature coefficient");
        }
    }
    const MultiPoly target = MultiPoly(2) * n_poly.pow(2);
    const std::vector<MultiPoly> candidates = splitting_candidates(n_poly, bounds);
    if (candidates.empty()) {
        return std::nullopt;
    }
    std::vector<MultiPoly> fourth;
    fourth.reserve(candidates.size());
    for (const auto& g : candidates) {
        fourth.push_back(g.pow(4));
    }
    // Last slot is resolved by lookup: c_last * g^4 -> first candidate g.
    const Rational& c_last = signature.back();
    std::map<std::string, std::size_t> last_map;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        last_map.emplace((fourth[i] * c_last).to_string(), i);
    }

    const std::size_t free_slots = signature.size() - 1;
    std::vector<std::size_t> chosen(free_slots, 0);
    std::vector<MultiPoly> partial(free_slots + 1);
    partial[0] = target;

    // Depth-first enumeration in candidate order.
    std::size_t depth = 0;
    while (true) {
        if (depth == free_slots) {
            auto it = last_map.find(partial[depth].to_string());
            if (it != last_map.end()) {
                SplittingIdentity id;
                id.n_poly = n_poly;
                for (std::size_t s = 0; s < free_slots; ++s) {
                    id.terms.emplace_back(signature[s], candidates[chosen[s]]);
                }
                id.terms.emplace_back(c_last, candidates[it->second]);
                if (!id.residual().is_zero()) {
                    throw DomainError("splitting_search: internal identity check failed");
                }
                return id;
            }
            // Backtrack.
            if (free_slots == 0) {
                return std::nullopt;
            }
            --depth;
            ++chosen[depth];
        }
        while (true) {
            if (chosen[depth] < candidates.size()) {
                partial[depth + 1] =
                    partial[depth] - fourth[chosen[depth]] * signature[depth];
                ++depth;
                if (depth < free_slots) {
                    chosen[depth] = 0;
                }
                break;
            }
            // Exhausted this level.
            if (depth == 0) {
                return std::nullopt;
            }
            --depth;
            ++chosen[depth];
        }
    }
}

// ---------------------------------------------------------------------------
// Theorem 1.2 / Remark / Theorem 1.3

DiagonalForm thm12_form(const std::vector<Rational>& k) {
    const std::size_t m = k.size();
    if (m == 0) {
        throw DomainError("thm12_form: empty coefficient list");
    }
    for (const auto& ki : k) {
        if (ki == 0) {
            throw DomainError("thm12_form: zero coefficient");
        }
    }
    std::vector<Rational> coeffs{Rational(1), Rational(1), Rational(-2)};
    std::vector<std::string> vars{"x", "y", "z"};
    for (std::size_t i = 0; i < m; ++i) {
        coeffs.push_back(Rational(-2) * k[i] * k[i]);
        vars.push_back("v" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            coeffs.push_back(Rational(-4) * k[i] * k[j]);
            vars.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    }
    return DiagonalForm(std::move(coeffs), std::move(vars));
}

Thm12Result thm12_expand(const Thm12Witness& witness) {
    const std::size_t m = witness.k.size();
    if (m == 0 || witness.b.size() != m) {
        throw DomainError("thm12_expand: coefficient/polynomial count mismatch");
    }
    if (witness.a1.is_zero() || witness.a2.is_zero()) {
        throw DomainError("thm12_expand: witness arguments must not be identically zero");
    }
    // Certify f(a1, a2) = sum k_i b_i^4.
    const auto& f = family_polys(witness.shape);
    std::map<std::string, MultiPoly> args{{"a", witness.a1}, {"b", witness.a2}};
    MultiPoly n_of_t = f.n.substitute_polys(args);
    MultiPoly sum;
    for (std::size_t i = 0; i < m; ++i) {
        sum += MultiPoly(witness.k[i]) * witness.b[i].pow(4);
    }
    if (n_of_t != sum) {
        throw DomainError("thm12_expand: witness does not certify f(a1,a2) = sum k_i b_i^4");
    }

    // Symbolic certificate at (a1(t), a2(t)) and the Prop 2.6 lift.
    CertificatePolys inst;
    inst.n = n_of_t;
    inst.x = f.x.substitute_polys(args);
    inst.y = f.y.substitute_polys(args);
    inst.z = f.z.substitute_polys(args);
    inst.t = f.t.substitute_polys(args);
    if (inst.y.is_zero()) {
        throw DomainError("thm12_expand: certificate y-entry is identically zero");
    }
    Prop26Symbolic lift = prop26_from_polys(inst);

    std::vector<RatFunc> coords{lift.x, lift.y, lift.z};
    for (std::size_t i = 0; i < m; ++i) {
        coords.push_back(RatFunc{witness.b[i].pow(2)} * lift.w0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            coords.push_back(RatFunc{witness.b[i] * witness.b[j]} * lift.w0);
        }
    }

    DiagonalForm form = thm12_form(witness.k);
    std::set<std::string> param_set(witness.a1.variables().begin(),
                                    witness.a1.variables().end());
    param_set.insert(witness.a2.variables().begin(), witness.a2.variables().end());
    for (const auto& bi : witness.b) {
        param_set.insert(bi.variables().begin(), bi.variables().end());
    }
    std::vector<std::string> params(param_set.begin(), param_set.end());
    if (params.empty()) {
        params = {"t"};
    }
    ParametricSolution ps(std::move(params), std::move(coords));
    require_identity(form, ps, "thm12_expand");
    return Thm12Result{std::move(form), std::move(ps)};
}

RemarkFamilyResult remark_family(const Rational& s) {
    if (s == 0) {
        throw DomainError("remark_family: s must be nonzero");
    }
    MultiPoly t = MultiPoly::variable("t");
    Rational inv_s = Rational(1) / s;
    // Lemma 2.8 witness: a = t^4/s + 2, b = t^4/s - 2, c = 2t^3/s, d = 2t,
    // with a^4 - b^4 = s*c^4 + (4/s)*d^4.
    MultiPoly a1 = t.pow(4) * inv_s + MultiPoly(2);
    MultiPoly a2 = t.pow(4) * inv_s - MultiPoly(2);
    MultiPoly c_poly = t.pow(3) * (Rational(2) * inv_s);
    MultiPoly d_poly = t * Rational(2);

    // Splitting of 2n^2 over formal (a, b) standing for (c, d).
    MultiPoly fa = MultiPoly::variable("a"), fb = MultiPoly::variable("b");
    MultiPoly n_formal = fa.pow(4) * s + fb.pow(4) * (Rational(4) / s);
    std::vector<Rational> printed{s * s, Rational(2), Rational(2) * s * s};
    auto splitting = splitting_search(n_formal, printed);
    bool printed_used = splitting.has_value();
    if (!splitting) {
        // Theorem 1.2 expansion: 2(s c^4 + (4/s) d^4)^2
        //   = 2s^2 (c^2)^4 + 16 (cd)^4 + (32/s^2)(d^2)^4.
        std::vector<Rational> expansion{Rational(2) * s * s, Rational(16),
                                        Rational(32) / (s * s)};
        splitting = splitting_search(n_formal, expansion);
    }
    if (!splitting) {
        throw UnresolvedSplitting("remark_family: no splitting of 2n^2 found");
    }

    // Certificate for n(t) = a1^4 - a2^4 via family iii at (a1, a2).
    const auto& f = family_polys(FamilyShape::III);
    std::map<std::string, MultiPoly> args{{"a", a1}, {"b", a2}};
    CertificatePolys inst;
    inst.n = f.n.substitute_polys(args);
    inst.x = f.x.substitute_polys(args);
    inst.y = f.y.substitute_polys(args);
    inst.z = f.z.substitute_polys(args);
    inst.t = f.t.substitute_polys(args);
    Prop26Symbolic lift = prop26_from_polys(inst);

    std::map<std::string, MultiPoly> cd{{"a", c_poly}, {"b", d_poly}};
    std::vector<RatFunc> coords{lift.x, lift.y, lift.z};
    std::vector<Rational> coeffs{Rational(1), Rational(1), Rational(-2)};
    std::vector<std::string> vars{"x", "y", "z"};
    const char* names[3] = {"u", "v", "w"};
    for (std::size_t i = 0; i < splitting->terms.size(); ++i) {
        const auto& [ci, gi] = splitting->terms[i];
        coords.push_back(RatFunc{gi.substitute_polys(cd)} * lift.w0);
        coeffs.push_back(-ci);
        vars.push_back(names[i]);
    }
    DiagonalForm form(std::move(coeffs), std::move(vars));
    ParametricSolution ps({"t"}, std::move(coords));
    require_identity(form, ps, "remark_family");
    return RemarkFamilyResult{std::move(form), std::move(ps), std::move(*splitting),
                              printed_used};
}

Thm13Result thm13_compose(std::size_t m, const Thm12Witness& symmetric_solution) {
    if (m < 3) {
        throw DomainError("thm13_compose requires m >= 3");
    }
    const std::size_t expected_terms = 2 * m - 1;
    if (symmetric_solution.k.size() != expected_terms) {
        throw DomainError("thm13_compose: witness must have 2m-1 terms");
    }
    Thm12Result base = thm12_expand(symmetric_solution);
    Thm13Result out{std::move(base.form), std::move(base.parametric), 0, 0};
    out.thm12_variable_count = out.form.arity();
    out.printed_variable_count = 2 * m * m - m + 4;
    return out;
}

} // namespace qf
