#include "pwl/poly.hpp"

#include "pwl/errors.hpp"

#include <set>
#include <sstream>

namespace pwl {

Exponent exponent_of(const std::vector<int>& exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw ResourceError("too many variables");
    Exponent e;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExponent) throw DomainError("exponent out of range");
        e.e[i] = static_cast<std::uint8_t>(exps[i]);
    }
    return e;
}

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw ResourceError("polynomial variable count out of range");
}

Poly Poly::constant(int nvars, const Q& c) {
    Poly p(nvars);
    p.add_term(Exponent{}, c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
    Poly p(nvars);
    Exponent e;
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(int nvars, const std::vector<int>& exps, const Q& c) {
    if (static_cast<int>(exps.size()) != nvars) throw DomainError("monomial length mismatch");
    Poly p(nvars);
    p.add_term(exponent_of(exps), c);
    return p;
}

Poly Poly::linear(const QVec& coeffs, const Q& c0) {
    Poly p(static_cast<int>(coeffs.size()));
    p.add_term(Exponent{}, c0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e;
        e[static_cast<int>(i)] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Q Poly::constant_term() const { return coefficient(Exponent{}); }

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

Q Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Q(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Q& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

static void check_compatible(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw DomainError("polynomial variable count mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Q& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

static Exponent add_exponents(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > kMaxExponent) throw ResourceError("exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r(a.nvars());
    if (a.is_zero() || b.is_zero()) return r;
    Q prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(add_exponents(ea, eb), prod);
            if (!inserted) it->second += prod;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (sgn(it->second) == 0)
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    Poly result = constant(nvars_, 1), base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Q Poly::eval(const QVec& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw DomainError("evaluation point dimension mismatch");
    std::vector<std::vector<Q>> powers(static_cast<std::size_t>(nvars_));
    Q total = 0, term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (int i = 0; i < nvars_ && sgn(term) != 0; ++i) {
            int k = e[i];
            if (k == 0) continue;
            auto& pw = powers[static_cast<std::size_t>(i)];
            if (pw.empty()) pw.push_back(Q(1));
            while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * x[static_cast<std::size_t>(i)]);
            term *= pw[static_cast<std::size_t>(k)];
        }
        total += term;
    }
    return total;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw DomainError("substitution arity mismatch");
    int m = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != m) throw DomainError("substitution images disagree on variable count");
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(nvars_));
    Poly result(m);
    for (const auto& [e, c] : terms_) {
        Poly term = constant(m, c);
        for (int i = 0; i < nvars_; ++i) {
            int k = e[i];
            if (k == 0) continue;
            auto& pw = powers[static_cast<std::size_t>(i)];
            if (pw.empty()) pw.push_back(constant(m, 1));
            while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
            term = term * pw[static_cast<std::size_t>(k)];
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result;
}

Poly Poly::signed_permute(const std::vector<int>& targets, const std::vector<int>& signs) const {
    if (static_cast<int>(targets.size()) != nvars_ || static_cast<int>(signs.size()) != nvars_)
        throw DomainError("signed permutation size mismatch");
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent out;
        int parity = 0;
        for (int i = 0; i < nvars_; ++i) {
            out[targets[static_cast<std::size_t>(i)]] = e[i];
            if (signs[static_cast<std::size_t>(i)] < 0) parity += e[i];
        }
        r.terms_.emplace(out, (parity & 1) ? Q(-c) : c);
    }
    return r;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e.degree() == d) r.terms_.emplace(e, c);
    return r;
}

std::vector<int> Poly::degrees_present() const {
    std::set<int> ds;
    for (const auto& [e, c] : terms_) ds.insert(e.degree());
    return {ds.begin(), ds.end()};
}

Poly Poly::extend(int nvars) const {
    if (nvars < nvars_) throw DomainError("extend cannot shrink");
    Poly r(nvars);
    r.terms_ = terms_;
    return r;
}

Poly Poly::truncate(int nvars) const {
    if (nvars > nvars_) throw DomainError("truncate cannot grow");
    Poly r(nvars);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int i = nvars; i < nvars_; ++i)
            if (e[i] != 0) {
                keep = false;
                break;
            }
        if (keep) r.terms_.emplace(e, c);
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
    check_compatible(*this, g);
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    const auto& [lt_e, lt_c] = *g.terms_.rbegin();
    Poly p = *this, q(nvars_), r(nvars_);
    while (!p.is_zero()) {
        auto it = std::prev(p.terms_.end());
        Exponent e = it->first;
        Q c = it->second;
        if (lt_e.divides(e)) {
            Exponent quot;
            for (int i = 0; i < kMaxVars; ++i) quot.e[i] = static_cast<std::uint8_t>(e.e[i] - lt_e.e[i]);
            Q t = c / lt_c;
            q.add_term(quot, t);
            for (const auto& [ge, gc] : g.terms_) p.add_term(add_exponents(quot, ge), -t * gc);
        } else {
            r.add_term(e, c);
            p.terms_.erase(it);
        }
    }
    return {q, r};
}

Poly Poly::exact_div(const Poly& g) const {
    auto [q, r] = divmod(g);
    if (!r.is_zero()) throw TheoremViolation("polynomial division left a nonzero remainder");
    return q;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Q mag = abs(c);
        bool negative = sgn(c) < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit_coef = mag == 1 && e.degree() > 0;
        if (!unit_coef) os << mag.get_str();
        bool need_star = !unit_coef;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << int(e[i]);
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace pwl
