#include "qf/verify.hpp"

#include <algorithm>

namespace qf {

VerificationReport verify_numeric(const DiagonalForm& form, const std::vector<Rational>& v,
                                  const std::set<std::size_t>& required_nonzero) {
    if (v.size() != form.arity()) {
        throw DomainError("verify_numeric: arity mismatch");
    }
    VerificationReport report{form, VerifyMode::Numeric, false, std::nullopt, std::nullopt, {}};
    Rational residual = form.eval(v);
    report.residual_value = residual;
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    bool required_ok = true;
    for (std::size_t i : required_nonzero) {
        if (i >= v.size()) {
            throw DomainError("verify_numeric: required_nonzero index out of range");
        }
        if (v[i] == 0) {
            required_ok = false;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            CoordinateFinding f;
            f.index = i;
            f.zero_at_point = true;
            report.coordinates.push_back(std::move(f));
        }
    }
    report.pass = (residual == 0) && !all_zero && required_ok;
    return report;
}

VerificationReport verify_symbolic(const DiagonalForm& form, const ParametricSolution& ps) {
    if (ps.coords().size() != form.arity()) {
        throw DomainError("verify_symbolic: arity mismatch");
    }
    std::map<std::string, RatFunc> bindings;
    for (std::size_t i = 0; i < form.arity(); ++i) {
        bindings.emplace(form.vars()[i], ps.coords()[i]);
    }
    RatFunc substituted = substitute(form.to_poly(), bindings);
    VerificationReport report{form, VerifyMode::Symbolic, false, std::nullopt,
                              substituted.num(), {}};
    for (std::size_t i = 0; i < ps.coords().size(); ++i) {
        CoordinateFinding f;
        f.index = i;
        f.identically_zero = ps.coords()[i].num().is_zero();
        f.vanishing_locus = ps.coords()[i].num();
        report.coordinates.push_back(std::move(f));
    }
    report.pass = substituted.num().is_zero();
    return report;
}

std::vector<Integer> canonicalize_solution(const std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    std::vector<Integer> out = v;
    if (g > 1) {
        for (auto& x : out) {
            x /= g;
        }
    }
    for (const auto& x : out) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : out) {
                    y = -y;
                }
            }
            break;
        }
    }
    return out;
}

std::vector<Integer> canonicalize_solution(const std::vector<Rational>& v) {
    auto cleared = clear_denominators(v);
    return canonicalize_solution(cleared.coords);
}

std::vector<std::vector<Integer>> brute_force(const DiagonalForm& form, unsigned height,
                                              unsigned height_cap) {
    if (form.arity() > 6) {
        throw DomainError("brute_force supports arity <= 6");
    }
    if (height > height_cap) {
        throw DomainError("brute_force: height exceeds the configured cap");
    }
    const std::size_t k = form.arity();
    const Rational& last_coeff = form.coeffs().back();
    const Integer h(height);

    std::vector<std::vector<Integer>> out;
    std::vector<Integer> partial(k, Integer(0));

    // Enumerate |x_1|..|x_{k-1}|, solve |x_k| exactly, then expand the sign
    // orbit to every canonical representative (first nonzero positive).
    auto emit = [&](const std::vector<Integer>& unsigned_sol) {
        Integer g(0);
        for (const auto& x : unsigned_sol) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
        if (g != 1) {
            return; // non-primitive or all-zero
        }
        std::vector<std::size_t> flippable;
        bool seen_nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (unsigned_sol[i] != 0) {
                if (seen_nonzero) {
                    flippable.push_back(i);
                }
                seen_nonzero = true;
            }
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << flippable.size()); ++mask) {
            std::vector<Integer> s = unsigned_sol;
            for (std::size_t b = 0; b < flippable.size(); ++b) {
                if (mask & (std::size_t{1} << b)) {
                    s[flippable[b]] = -s[flippable[b]];
                }
            }
            out.push_back(std::move(s));
        }
    };

    auto solve_last = [&]() {
        Rational rest(0);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            rest += form.coeffs()[i] * pow4(Rational(partial[i]));
        }
        Rational target = -rest / last_coeff;
        if (target < 0) {
            return;
        }
        auto root = exact_fourth_root(target);
        if (!root || root->get_den() != 1) {
            return;
        }
        Integer last = root->get_num();
        if (last > h) {
            return;
        }
        partial[k - 1] = last;
        emit(partial);
    };

    // Odometer over the first k-1 coordinates.
    std::vector<unsigned> idx(k - 1, 0);
    bool done = false;
    while (!done) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            partial[i] = Integer(idx[i]);
        }
        solve_last();
        std::size_t pos = idx.size();
        while (true) {
            if (pos == 0) {
                done = true;
                break;
            }
            --pos;
            if (idx[pos] < height) {
                ++idx[pos];
                std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos) + 1, idx.end(), 0u);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CongruentCertificate> congruent_check_small(const Integer& n,
                                                          const Integer& bound) {
    if (n < 1) {
        throw DomainError("congruent_check_small requires n >= 1");
    }
    for (Integer y(1); y <= bound; ++y) {
        Integer d = n * y * y;
        // x^2 - t^2 = d with t >= 1 forces x <= (d+1)/2.
        Integer xmax = (d + 1) / 2;
        for (Integer x(1); x <= xmax; ++x) {
            Integer x2 = x * x;
            if (x2 <= d) {
                continue;
            }
            Integer lo = x2 - d;
            Integer hi = x2 + d;
            if (is_perfect_square(lo) && is_perfect_square(hi)) {
                Integer t = isqrt(lo);
                if (t == 0) {
                    continue;
                }
                return CongruentCertificate(n, x, y, isqrt(hi), t);
            }
        }
    }
    return std::nullopt;
}

} // namespace qf
