#include "qf/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qf {

bool MultiPoly::GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    // Descending graded-lex: begin() is the leading term.
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) {
        terms_.emplace(Exponents{}, c);
    }
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(const std::string& name, std::uint32_t exp) {
    MultiPoly p;
    if (exp == 0) {
        return MultiPoly(Rational(1));
    }
    p.vars_ = {name};
    p.terms_.emplace(Exponents{exp}, Rational(1));
    return p;
}

MultiPoly MultiPoly::from_terms(
    const std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>>& terms) {
    MultiPoly acc;
    for (const auto& [coeff, mono] : terms) {
        MultiPoly t(coeff);
        for (const auto& [var, exp] : mono) {
            t *= variable(var, exp);
        }
        acc += t;
    }
    return acc;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    if (!is_constant()) {
        throw DomainError("constant_value of non-constant polynomial");
    }
    return terms_.begin()->second;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) {
        deg = std::max<std::uint32_t>(
            deg, static_cast<std::uint32_t>(std::accumulate(e.begin(), e.end(), std::uint64_t{0})));
    }
    return deg;
}

std::uint32_t MultiPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        return 0;
    }
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, e[idx]);
    }
    return deg;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) {
        return true;
    }
    std::uint64_t d0 = std::accumulate(terms_.begin()->first.begin(),
                                       terms_.begin()->first.end(), std::uint64_t{0});
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), std::uint64_t{0}) != d0) {
            return false;
        }
    }
    return true;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::prune_vars() {
    if (vars_.empty()) {
        return;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                used[i] = true;
            }
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
        return;
    }
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) {
            kept.push_back(vars_[i]);
        }
    }
    TermMap pruned;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (used[i]) {
                ne.push_back(e[i]);
            }
        }
        pruned.emplace(std::move(ne), c);
    }
    vars_ = std::move(kept);
    terms_ = std::move(pruned);
}

MultiPoly MultiPoly::reindexed(const std::vector<std::string>& new_vars) const {
    MultiPoly r;
    r.vars_ = new_vars;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            ne[pos[i]] = e[i];
        }
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

void MultiPoly::align(const MultiPoly& a, const MultiPoly& b,
                      std::vector<std::string>& vars, MultiPoly& ra, MultiPoly& rb) {
    vars.clear();
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(vars));
    ra = (a.vars_ == vars) ? a : a.reindexed(vars);
    rb = (b.vars_ == vars) ? b : b.reindexed(vars);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    std::vector<std::string> vars;
    MultiPoly a, b;
    align(*this, o, vars, a, b);
    for (const auto& [e, c] : b.terms_) {
        a.add_term(e, c);
    }
    a.prune_vars();
    return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) {
        return MultiPoly();
    }
    std::vector<std::string> vars;
    MultiPoly a, b;
    align(*this, o, vars, a, b);
    MultiPoly r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    r.prune_vars();
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c == 0) {
        return MultiPoly();
    }
    MultiPoly r(*this);
    for (auto& [e, coeff] : r.terms_) {
        coeff *= c;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
    MultiPoly r(Rational(1));
    MultiPoly base(*this);
    while (k > 0) {
        if (k & 1u) {
            r *= base;
        }
        k >>= 1u;
        if (k > 0) {
            base *= base;
        }
    }
    return r;
}

Rational MultiPoly::eval_at(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) {
            throw DomainError("eval_at: unbound variable '" + vars_[i] + "'");
        }
        vals[i] = &it->second;
    }
    // Cache powers per variable up to its max exponent.
    std::vector<std::vector<Rational>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        std::uint32_t maxe = 0;
        for (const auto& [e, c] : terms_) {
            maxe = std::max(maxe, e[i]);
        }
        powers[i].resize(maxe + 1);
        powers[i][0] = Rational(1);
        for (std::uint32_t k = 1; k <= maxe; ++k) {
            powers[i][k] = powers[i][k - 1] * *vals[i];
        }
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] != 0) {
                t *= powers[i][e[i]];
            }
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_polys(const std::map<std::string, MultiPoly>& bindings) const {
    MultiPoly acc;
    for (const auto& [e, c] : terms_) {
        MultiPoly t(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto it = bindings.find(vars_[i]);
            MultiPoly base = (it != bindings.end()) ? it->second : variable(vars_[i]);
            t *= base.pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        g = (g == 0) ? a : rational_gcd(g, a);
    }
    return g;
}

std::map<std::string, std::uint32_t> MultiPoly::monomial_gcd() const {
    std::map<std::string, std::uint32_t> result;
    if (terms_.empty()) {
        return result;
    }
    std::vector<std::uint32_t> mins(vars_.size(), UINT32_MAX);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            mins[i] = std::min(mins[i], e[i]);
        }
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (mins[i] > 0) {
            result[vars_[i]] = mins[i];
        }
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) {
        throw DomainError("division by zero polynomial");
    }
    if (is_zero()) {
        return MultiPoly();
    }
    std::vector<std::string> vars;
    MultiPoly rem, d;
    align(*this, divisor, vars, rem, d);
    const auto& dlead = *d.terms_.begin();
    MultiPoly quot;
    quot.vars_ = vars;
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.begin();
        Exponents qe(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (rlead.first[i] < dlead.first[i]) {
                return std::nullopt;
            }
            qe[i] = rlead.first[i] - dlead.first[i];
        }
        Rational qc = rlead.second / dlead.second;
        MultiPoly qterm;
        qterm.vars_ = vars;
        qterm.terms_.emplace(qe, qc);
        quot.add_term(qe, qc);
        rem = rem - qterm * d;
        if (!rem.is_zero() && rem.vars_ != vars) {
            rem = rem.reindexed(vars);
        }
    }
    quot.prune_vars();
    return quot;
}

std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> MultiPoly::terms() const {
    std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        std::map<std::string, std::uint32_t> mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] != 0) {
                mono[vars_[i]] = e[i];
            }
        }
        out.emplace_back(c, std::move(mono));
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            coeff = abs(coeff);
        }
        first = false;
        bool has_vars =
            std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x != 0; });
        if (coeff != 1 || !has_vars) {
            os << qf::to_string(coeff);
            if (has_vars) {
                os << "*";
            }
        }
        bool first_var = true;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!first_var) {
                os << "*";
            }
            first_var = false;
            os << vars_[i];
            if (e[i] > 1) {
                os << "^" << e[i];
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw DomainError("rational function with identically zero denominator");
    }
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    // Cancel the common monomial part.
    auto mn = num_.monomial_gcd();
    auto md = den_.monomial_gcd();
    std::map<std::string, MultiPoly> shared;
    MultiPoly common(Rational(1));
    bool any = false;
    for (const auto& [var, en] : mn) {
        auto it = md.find(var);
        if (it != md.end()) {
            common *= MultiPoly::variable(var, std::min(en, it->second));
            any = true;
        }
    }
    if (any) {
        num_ = *num_.divide_exact(common);
        den_ = *den_.divide_exact(common);
    }
    // Make the denominator primitive with a positive leading coefficient.
    Rational c = den_.content();
    if (den_.terms_.begin()->second < 0) {
        c = -c;
    }
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) {
        return RatFunc(num_ + o.num_, den_);
    }
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) {
        throw DomainError("division by zero rational function");
    }
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(std::uint32_t k) const {
    return RatFunc(num_.pow(k), den_.pow(k));
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

Rational RatFunc::eval_at(const std::map<std::string, Rational>& point) const {
    Rational d = den_.eval_at(point);
    if (d == 0) {
        throw DomainError("rational function denominator vanishes at evaluation point");
    }
    return num_.eval_at(point) / d;
}

std::string RatFunc::to_string() const {
    if (is_polynomial() && den_.constant_value() == 1) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings) {
    const auto& vars = p.variables();
    std::vector<const RatFunc*> binds(vars.size());
    std::vector<std::uint32_t> max_exp(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = bindings.find(vars[i]);
        if (it == bindings.end()) {
            throw DomainError("substitute: unbound variable '" + vars[i] + "'");
        }
        binds[i] = &it->second;
        max_exp[i] = p.degree_in(vars[i]);
    }
    // Common denominator prod_i den_i^max_exp_i; each term contributes
    // coeff * prod num_i^e_i * den_i^(max_exp_i - e_i).
    std::vector<std::vector<MultiPoly>> num_pows(vars.size()), den_pows(vars.size());
    MultiPoly denominator(Rational(1));
    for (std::size_t i = 0; i < vars.size(); ++i) {
        num_pows[i].resize(max_exp[i] + 1);
        den_pows[i].resize(max_exp[i] + 1);
        num_pows[i][0] = MultiPoly(Rational(1));
        den_pows[i][0] = MultiPoly(Rational(1));
        for (std::uint32_t k = 1; k <= max_exp[i]; ++k) {
            num_pows[i][k] = num_pows[i][k - 1] * binds[i]->num();
            den_pows[i][k] = den_pows[i][k - 1] * binds[i]->den();
        }
        denominator *= den_pows[i][max_exp[i]];
    }
    MultiPoly numerator;
    for (const auto& [coeff, mono] : p.terms()) {
        MultiPoly t(coeff);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            std::uint32_t e = 0;
            auto it = mono.find(vars[i]);
            if (it != mono.end()) {
                e = it->second;
            }
            if (e > 0) {
                t *= num_pows[i][e];
            }
            if (max_exp[i] > e) {
                t *= den_pows[i][max_exp[i] - e];
            }
        }
        numerator += t;
    }
    return RatFunc(numerator, denominator);
}

namespace {

bool is_content_monomial(const MultiPoly& p) { return p.is_monomial(); }

/// lcm of two content*monomial polynomials.
MultiPoly monomial_lcm(const MultiPoly& a, const MultiPoly& b) {
    Rational c = rational_lcm(a.content(), b.content());
    auto ma = a.monomial_gcd();
    auto mb = b.monomial_gcd();
    for (const auto& [var, e] : mb) {
        auto it = ma.find(var);
        if (it == ma.end()) {
            ma[var] = e;
        } else {
            it->second = std::max(it->second, e);
        }
    }
    MultiPoly r{c};
    for (const auto& [var, e] : ma) {
        r *= MultiPoly::variable(var, e);
    }
    return r;
}

} // namespace

ClearedCoords clear_denominators(const std::vector<RatFunc>& coords) {
    if (coords.empty()) {
        throw DomainError("clear_denominators: empty coordinate list");
    }
    MultiPoly d(Rational(1));
    for (const auto& c : coords) {
        const MultiPoly& den = c.den();
        if (d.divide_exact(den).has_value()) {
            continue; // den | d already
        }
        if (den.divide_exact(d).has_value()) {
            d = den;
        } else if (is_content_monomial(d) && is_content_monomial(den)) {
            d = monomial_lcm(d, den);
        } else {
            d = d * den; // Fallback: product of denominators.
        }
    }
    ClearedCoords out;
    out.common_denominator = d;
    out.coords.reserve(coords.size());
    for (const auto& c : coords) {
        auto factor = d.divide_exact(c.den());
        if (!factor) {
            throw DomainError("clear_denominators: internal divisibility failure");
        }
        out.coords.push_back(c.num() * *factor);
    }
    return out;
}

ClearedRationalCoords clear_denominators(const std::vector<Rational>& coords) {
    if (coords.empty()) {
        throw DomainError("clear_denominators: empty coordinate list");
    }
    Integer d(1);
    for (const auto& c : coords) {
        Integer den = c.get_den();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    ClearedRationalCoords out;
    out.common_denominator = d;
    out.coords.reserve(coords.size());
    for (const auto& c : coords) {
        Rational scaled = c * Rational(d);
        out.coords.push_back(Integer(scaled.get_num()));
    }
    return out;
}

} // namespace qf
