#include "pwl/geometry.hpp"

#include "pwl/errors.hpp"
#include "pwl/weyl.hpp"

#include <algorithm>
#include <set>

namespace pwl {

namespace {

/// Roots of one factor in local coordinates.
RootSystem factor_system(const RootSystem& rs, std::size_t i) {
    const Factor& f = rs.factors.at(i);
    RootSystem sub;
    sub.ambient_dim = f.dim;
    sub.factors = {Factor{f.label, f.rank, 0, f.dim}};
    auto inside = [&](const QVec& v) {
        for (int c = 0; c < rs.ambient_dim; ++c)
            if (sgn(v[c]) != 0 && (c < f.offset || c >= f.offset + f.dim)) return false;
        return true;
    };
    auto slice = [&](const QVec& v) { return QVec(v.begin() + f.offset, v.begin() + f.offset + f.dim); };
    for (std::size_t k = 0; k < rs.positive.size(); ++k) {
        if (!inside(rs.positive[k])) continue;
        sub.positive.push_back(slice(rs.positive[k]));
        sub.mult.push_back(rs.mult[k]);
    }
    for (const auto& s : rs.simple)
        if (inside(s)) sub.simple.push_back(slice(s));
    return sub;
}

QVec place(const QVec& v, int offset, int dim) {
    QVec w = zeros(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
}

std::vector<QVec> subspace_equations(const RootSystem& rs) {
    std::vector<QVec> eqs;
    for (const auto& f : rs.factors) {
        if (f.label != Label::A) continue;
        QVec e = zeros(static_cast<std::size_t>(rs.ambient_dim));
        for (int i = 0; i < f.dim; ++i) e[f.offset + i] = 1;
        eqs.push_back(std::move(e));
    }
    return eqs;
}

void add_pair(Polytope& p, const QVec& n, const Q& b) {
    p.ineqs.push_back({n, b});
    p.ineqs.push_back({neg(n), b});
}

Polytope sigma_orbit(const RootSystem& sub) {
    QVec sigma = zeros(static_cast<std::size_t>(sub.ambient_dim));
    for (const auto& a : sub.simple) sigma = add(sigma, scale(a, Q(2)));
    std::set<QVec> orbit;
    WeylGroup(sub, false).for_each([&](const WeylElement& w) { orbit.insert(w.apply(sigma)); });
    Polytope p;
    p.dim = sub.ambient_dim;
    for (const auto& n : orbit) p.ineqs.push_back({n, Q(1, 2)});
    return p;
}

Polytope closed_form(const RootSystem& rs) {
    Label t = sigma2_type(rs);
    const int n = rs.ambient_dim;
    if (t == Label::A || t == Label::C) return omega(rs);
    Polytope p;
    p.dim = n;
    if (t == Label::B) {
        for (int j = 0; j < n; ++j) add_pair(p, unit(n, j), Q(1, 4));
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                add_pair(p, add(unit(n, i), unit(n, j)), Q(1, 4));
                add_pair(p, sub(unit(n, i), unit(n, j)), Q(1, 4));
            }
    }
    return p;
}

/// Assemble a product polytope from per-factor pieces.
template <typename F>
Polytope per_factor(const RootSystem& rs, F&& piece) {
    Polytope out;
    out.dim = rs.ambient_dim;
    for (std::size_t i = 0; i < rs.factors.size(); ++i) {
        const Factor& f = rs.factors[i];
        Polytope p = piece(factor_system(rs, i));
        for (const auto& q : p.ineqs) out.ineqs.push_back({place(q.normal, f.offset, rs.ambient_dim), q.bound});
    }
    out.equalities = subspace_equations(rs);
    return out;
}

/// Rows for lp_maximize: inequalities, then each equality as two opposite rows.
void lp_rows(const Polytope& p, QMatrix& A, QVec& b) {
    const int m = static_cast<int>(p.ineqs.size() + 2 * p.equalities.size());
    A = QMatrix(m, p.dim);
    b.assign(static_cast<std::size_t>(m), Q(0));
    int r = 0;
    for (const auto& q : p.ineqs) {
        if (sgn(q.bound) < 0) throw DomainError("polytope does not contain the origin");
        for (int j = 0; j < p.dim; ++j) A(r, j) = q.normal[j];
        b[r++] = q.bound;
    }
    for (const auto& e : p.equalities) {
        for (int j = 0; j < p.dim; ++j) {
            A(r, j) = e[j];
            A(r + 1, j) = -e[j];
        }
        r += 2;
    }
}

Radius make_radius(const Q& sq) {
    Radius r;
    r.squared = sq;
    r.rational = rational_sqrt(sq, r.value);
    return r;
}

/// Inverse Gram matrix of the simple roots; its diagonal holds |omega_j^vee|^2.
QMatrix inverse_gram(const RootSystem& rs) {
    const int r = rs.rank();
    QMatrix g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g(i, j) = dot(rs.simple[i], rs.simple[j]);
    QMatrix inv(r, r);
    for (int j = 0; j < r; ++j) {
        auto col = solve(g, unit(static_cast<std::size_t>(r), static_cast<std::size_t>(j)));
        if (!col) throw TheoremViolation("singular Gram matrix");
        for (int i = 0; i < r; ++i) inv(i, j) = (*col)[i];
    }
    return inv;
}

}  // namespace

bool Polytope::contains(const QVec& x) const {
    if (static_cast<int>(x.size()) != dim) throw DomainError("point dimension does not match the polytope");
    for (const auto& e : equalities)
        if (sgn(dot(e, x)) != 0) return false;
    for (const auto& q : ineqs)
        if (dot(q.normal, x) >= q.bound) return false;
    return true;
}

Q Polytope::support(const QVec& c) const {
    if (static_cast<int>(c.size()) != dim) throw DomainError("direction dimension does not match the polytope");
    QMatrix A;
    QVec b;
    lp_rows(*this, A, b);
    LPResult r = lp_maximize(A, b, c);
    if (!r.bounded) throw DomainError("polytope is unbounded");
    return r.value;
}

Polytope omega(const RootSystem& rs) {
    Polytope p;
    p.dim = rs.ambient_dim;
    for (const auto& a : rs.positive) add_pair(p, a, Q(1, 2));
    p.equalities = subspace_equations(rs);
    return p;
}

Label sigma2_type(const RootSystem& rs) {
    Label l = rs.family().label;
    return l == Label::BC ? Label::C : l;
}

Polytope omega_star(const RootSystem& rs) {
    return per_factor(rs, [](const RootSystem& sub) {
        Label t = sigma2_type(sub);
        return (t == Label::A || t == Label::C) ? omega(sub) : sigma_orbit(sub);
    });
}

Polytope omega_star_closed(const RootSystem& rs) { return per_factor(rs, closed_form); }

bool polytope_contains(const Polytope& outer, const Polytope& inner) {
    if (outer.dim != inner.dim) throw DomainError("polytope dimension mismatch");
    for (const auto& e : outer.equalities) {
        // inner must lie in the subspace of outer
        if (sgn(inner.support(e)) != 0 || sgn(inner.support(neg(e))) != 0) return false;
    }
    for (const auto& q : outer.ineqs)
        if (inner.support(q.normal) > q.bound) return false;
    return true;
}

bool polytope_equal(const Polytope& a, const Polytope& b) { return polytope_contains(a, b) && polytope_contains(b, a); }

std::vector<QVec> normalized_normals(const Polytope& p) {
    std::set<QVec> s;
    for (const auto& q : p.ineqs) s.insert(scale(q.normal, 1 / (2 * q.bound)));
    return {s.begin(), s.end()};
}

Polytope restrict_polytope(const Polytope& pk, const PropagationPair& pair) {
    if (pk.dim != pair.large.ambient_dim) throw DomainError("restrict_polytope: dimension mismatch");
    Polytope p;
    p.dim = pair.small.ambient_dim;
    std::set<std::pair<QVec, Q>> seen;
    for (const auto& q : pk.ineqs) {
        QVec n = pair.restrict_vec(q.normal);
        if (is_zero(n)) continue;  // 0 < bound holds everywhere
        if (seen.insert({n, q.bound}).second) p.ineqs.push_back({n, q.bound});
    }
    p.equalities = subspace_equations(pair.small);
    return p;
}

std::vector<QVec> vertices(const Polytope& p) {
    const int m = static_cast<int>(p.ineqs.size());
    const int need = p.dim - static_cast<int>(p.equalities.size());
    if (need <= 0) return {zeros(static_cast<std::size_t>(p.dim))};
    std::vector<int> pick(need);
    for (int i = 0; i < need; ++i) pick[i] = i;
    std::set<QVec> out;
    long visited = 0;
    while (true) {
        if (++visited > 5000000) throw ResourceError("vertex enumeration exceeds the size cap");
        std::vector<QVec> rows;
        QVec rhs;
        for (int i : pick) {
            rows.push_back(p.ineqs[i].normal);
            rhs.push_back(p.ineqs[i].bound);
        }
        for (const auto& e : p.equalities) {
            rows.push_back(e);
            rhs.push_back(0);
        }
        QMatrix A = QMatrix::from_rows(rows);
        if (rank(A) == p.dim) {
            auto x = solve(A, rhs);
            if (x) {
                bool feasible = true;
                for (const auto& q : p.ineqs)
                    if (dot(q.normal, *x) > q.bound) {
                        feasible = false;
                        break;
                    }
                if (feasible) out.insert(*x);
            }
        }
        int i = need - 1;
        while (i >= 0 && pick[i] == m - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {out.begin(), out.end()};
}

IntersectionCertificate check_intersection(const PropagationPair& pair) {
    IntersectionCertificate c;
    Polytope pn = omega_star(pair.small);
    Polytope pk = restrict_polytope(omega_star(pair.large), pair);
    c.small_in_restricted = polytope_contains(pk, pn);
    c.restricted_in_small = polytope_contains(pn, pk);
    if (pair.label() == Label::A) {
        const int rn = pair.rank_small();
        const Q expect = frac(rn, 2 * (rn + 1));
        for (int i = 0; i < pn.dim; ++i) {
            QVec e = unit(static_cast<std::size_t>(pn.dim), static_cast<std::size_t>(i));
            if (pn.support(e) != expect || !(expect < Q(1, 2))) c.a_chain_ok = false;
        }
        if (pair.rank_large() <= 4) {
            c.vertex_check_run = true;
            auto vn = vertices(pn), vk = vertices(pk);
            c.vertex_check_ok = vn == vk;
            for (int i = 0; i < pn.dim; ++i) {
                Q top = 0;
                for (const auto& v : vn) top = std::max(top, v[i]);
                if (top != expect) c.vertex_check_ok = false;
            }
        }
    }
    c.ok = c.small_in_restricted && c.restricted_in_small && c.a_chain_ok && c.vertex_check_ok;
    c.note = pair.small.name() + " in " + pair.large.name();
    if (!c.ok) throw TheoremViolation("Omega*_n differs from Omega*_k restricted to a_n for " + c.note);
    return c;
}

Radius inradius(const Polytope& p) {
    if (p.ineqs.empty()) throw DomainError("polytope is unbounded");
    bool first = true;
    Q best;
    for (const auto& q : p.ineqs) {
        Q n2 = norm2(q.normal);
        if (sgn(n2) == 0) continue;
        Q d2 = q.bound * q.bound / n2;
        if (first || d2 < best) best = d2;
        first = false;
    }
    // A bounded test: every coordinate direction must have finite support.
    for (int i = 0; i < p.dim; ++i) (void)p.support(unit(static_cast<std::size_t>(p.dim), static_cast<std::size_t>(i)));
    return make_radius(best);
}

Radius omega_circumradius(const RootSystem& rs) {
    Q total = 0;
    for (std::size_t i = 0; i < rs.factors.size(); ++i) {
        RootSystem sub = factor_system(rs, i);
        HighestRoot h = highest_root(sub);
        QMatrix inv = inverse_gram(sub);
        Q best = 0;
        for (int j = 0; j < sub.rank(); ++j) best = std::max(best, Q(inv(j, j) / (4 * h.coefficients[j] * h.coefficients[j])));
        total += best;
    }
    return make_radius(total);
}

InjectivityRadius injectivity_radius_sigma2(Label t) {
    switch (t) {
        case Label::A:
        case Label::C:
        case Label::BC:
            return {Q(2), "sqrt(2)*pi"};
        case Label::B:
        case Label::D:
            return {Q(4), "2*pi"};
    }
    throw DomainError("unknown family");
}

InjectivityRadius injectivity_radius(const SpaceDescriptor& d) { return injectivity_radius_sigma2(sigma2_type(d.rs)); }

DiskRemark disk_remark(const RootSystem& rs) {
    DiskRemark r;
    r.circum2 = omega_circumradius(rs).squared;
    r.quarter_injectivity2 = injectivity_radius_sigma2(sigma2_type(rs)).squared / 16;
    r.holds = r.circum2 <= r.quarter_injectivity2;
    return r;
}

}  // namespace pwl
