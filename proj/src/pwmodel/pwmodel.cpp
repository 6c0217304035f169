#include "pwl/pwmodel.hpp"

#include "pwl/errors.hpp"

#include <sstream>

namespace pwl {

ExpPoly ExpPoly::from_poly(const Poly& p) {
    ExpPoly F(p.nvars());
    F.add(zeros(static_cast<std::size_t>(p.nvars())), p);
    return F;
}

ExpPoly ExpPoly::exponential(const QVec& a, const Poly& p) {
    ExpPoly F(static_cast<int>(a.size()));
    F.add(a, p);
    return F;
}

std::vector<ExpTerm> ExpPoly::term_list() const {
    std::vector<ExpTerm> out;
    for (const auto& [a, p] : terms_) out.push_back({a, p});
    return out;
}

bool ExpPoly::is_polynomial() const {
    return terms_.empty() || (terms_.size() == 1 && pwl::is_zero(terms_.begin()->first));
}

Poly ExpPoly::polynomial_part() const {
    auto it = terms_.find(zeros(static_cast<std::size_t>(dim_)));
    return it == terms_.end() ? Poly(dim_) : it->second;
}

void ExpPoly::add(const QVec& a, const Poly& p) {
    if (static_cast<int>(a.size()) != dim_ || p.nvars() != dim_) throw DomainError("ExpPoly term dimension mismatch");
    if (p.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(a, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Q ExpPoly::radius2() const {
    Q r = 0;
    for (const auto& [a, p] : terms_) r = std::max(r, norm2(a));
    return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    if (o.dim_ != dim_) throw DomainError("ExpPoly dimension mismatch");
    for (const auto& [a, p] : o.terms_) add(a, p);
    return *this;
}

ExpPoly ExpPoly::operator*(const Q& s) const {
    ExpPoly r(dim_);
    for (const auto& [a, p] : terms_) r.add(a, p * s);
    return r;
}

ExpPoly ExpPoly::times(const Poly& q) const {
    ExpPoly r(dim_);
    for (const auto& [a, p] : terms_) r.add(a, p * q);
    return r;
}

std::string ExpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.to_string() << ")";
        if (!pwl::is_zero(a)) os << "*exp<" << key(a) << ",l>";
    }
    return os.str();
}

ExpPoly act_exp(const WeylElement& w, const ExpPoly& F) {
    ExpPoly r(F.dim());
    for (const auto& [a, p] : F.terms()) r.add(w.apply(a), act_poly(w, p));
    return r;
}

ExpPoly symmetrize(const ExpPoly& F, const WeylGroup& g) {
    if (F.dim() != g.dim()) throw DomainError("symmetrize: dimension mismatch");
    ExpPoly acc(F.dim());
    g.for_each([&](const WeylElement& w) { acc += act_exp(w, F); });
    return acc * (1 / Q(static_cast<unsigned long>(g.order())));
}

bool is_invariant(const ExpPoly& F, const WeylGroup& g) {
    for (const auto& s : g.generators())
        if (act_exp(s, F) != F) return false;
    return true;
}

ExpPoly restrict_flat(const ExpPoly& F, const PropagationPair& pair) {
    if (F.dim() != pair.large.ambient_dim) throw DomainError("restrict_flat: dimension mismatch");
    ExpPoly r(pair.small.ambient_dim);
    for (const auto& [a, p] : F.terms()) r.add(pair.restrict_vec(a), restrict_poly(p, pair));
    return r;
}

Poly shift(const Poly& p, const QVec& v) {
    const int n = p.nvars();
    if (static_cast<int>(v.size()) != n) throw DomainError("shift: dimension mismatch");
    if (is_zero(v)) return p;
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) images.push_back(Poly::variable(n, i) + Poly::constant(n, v[i]));
    return p.substitute(images);
}

Poly varpi(const RootSystem& rs) {
    Poly p = Poly::constant(rs.ambient_dim, 1);
    for (const auto& a : rs.positive)
        if (!rs.is_root(scale(a, Q(2)))) p = p * Poly::linear(a);
    return p;
}

bool is_rho_skew(const Poly& Phi, const WeylGroup& g, const QVec& rho) {
    Poly shifted = shift(Phi, neg(rho));  // G(y) = Phi(y - rho)
    for (const auto& w : g.generators()) {
        // Phi(w(l + rho) - rho) = G(w(l + rho)), compared after shifting back by rho.
        Poly lhs = compose_poly(shifted, w);
        Poly rhs = shifted * Q(g.skew_character(w));
        if (lhs != rhs) return false;
    }
    return true;
}

bool shifted_vanishing_check(const Poly& Phi, const RootSystem& rs, const QVec& rho) {
    Poly shifted = shift(Phi, neg(rho));
    for (const auto& a : rs.positive)
        if (!shifted.divmod(Poly::linear(a)).second.is_zero()) return false;
    return true;
}

RhoShiftedSkew::RhoShiftedSkew(Poly F, std::shared_ptr<const WeylGroup> g, QVec rho)
    : F_(std::move(F)), group_(std::move(g)), rho_(std::move(rho)), lazy_(std::make_shared<Lazy>()) {}

RhoShiftedSkew RhoShiftedSkew::from_invariant(const Poly& F, const WeylGroup& g, const QVec& rho) {
    if (F.nvars() != g.dim() || static_cast<int>(rho.size()) != g.dim())
        throw DomainError("T inverse: dimension mismatch");
    if (!is_invariant(F, g)) throw DomainError("T inverse: input is not invariant");
    return RhoShiftedSkew(F, std::make_shared<const WeylGroup>(g), rho);
}

RhoShiftedSkew RhoShiftedSkew::from_poly(const Poly& Phi, const WeylGroup& g, const QVec& rho) {
    if (!is_rho_skew(Phi, g, rho)) throw DomainError("polynomial is not rho-shifted skew");
    Poly F = op_T_poly(Phi, g.root_system(), rho);
    return RhoShiftedSkew(F, std::make_shared<const WeylGroup>(g), rho);
}

const Poly& RhoShiftedSkew::expanded() const {
    std::call_once(lazy_->once, [&] {
        const auto& rs = group_->root_system();
        Q denom = varpi(rs).eval(rho_);
        lazy_->value = shift(varpi(rs) * F_, rho_) * (1 / denom);
    });
    return lazy_->value;
}

Q RhoShiftedSkew::eval(const QVec& lambda) const {
    const auto& rs = group_->root_system();
    QVec y = add(lambda, rho_);
    Q num = F_.eval(y);
    for (const auto& a : rs.positive) num *= dot(y, a) / dot(rho_, a);
    return num;
}

Poly rho_skew_symmetrize_raw(const Poly& F, const WeylGroup& g, const QVec& rho) {
    Poly shifted = shift(F, neg(rho));
    Poly acc(F.nvars());
    g.for_each([&](const WeylElement& w) { acc += compose_poly(shifted, w) * Q(g.skew_character(w)); });
    return shift(acc, rho) * (1 / Q(static_cast<unsigned long>(g.order())));
}

RhoShiftedSkew rho_skew_symmetrize(const Poly& F, const WeylGroup& g, const QVec& rho) {
    return RhoShiftedSkew::from_poly(rho_skew_symmetrize_raw(F, g, rho), g, rho);
}

Poly op_T_poly(const Poly& Phi, const RootSystem& rs, const QVec& rho) {
    Q c = varpi(rs).eval(rho);
    if (sgn(c) == 0) throw DomainError("rho is singular");
    Poly q = shift(Phi, neg(rho));
    for (const auto& a : rs.positive) {
        if (rs.is_root(scale(a, Q(2)))) continue;
        auto [quot, rem] = q.divmod(Poly::linear(a));
        if (!rem.is_zero())
            throw TheoremViolation("shifted skew polynomial is not divisible by <l," + key(a) + ">");
        q = std::move(quot);
    }
    return q * c;
}

Poly op_T(const RhoShiftedSkew& Phi) { return Phi.t_image(); }

RhoShiftedSkew op_T_inv(const Poly& F, const WeylGroup& g, const QVec& rho) {
    return RhoShiftedSkew::from_invariant(F, g, rho);
}

RhoShiftedSkew restrict_rho_shifted(const RhoShiftedSkew& Phi, const PropagationPair& pair) {
    if (Phi.t_image().nvars() != pair.large.ambient_dim) throw DomainError("restrict_rho_shifted: dimension mismatch");
    Poly Fn = restrict_poly(Phi.t_image(), pair);
    return RhoShiftedSkew::from_invariant(Fn, WeylGroup(pair.small, true), rho(pair.small));
}

RhoShiftedSkew rho_shifted_lift(const RhoShiftedSkew& Psi, const PropagationPair& pair) {
    Poly Fk = constructive_pw_lift(Psi.t_image(), pair);
    return RhoShiftedSkew::from_invariant(Fk, WeylGroup(pair.large, true), rho(pair.large));
}

}  // namespace pwl
