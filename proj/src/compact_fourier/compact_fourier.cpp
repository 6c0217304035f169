#include "pwl/compact_fourier.hpp"

#include "pwl/errors.hpp"

#include <cmath>
#include <numbers>

namespace pwl {

void FourierData::set(const std::vector<int>& I, const Q& v) {
    if (static_cast<int>(I.size()) != rank) throw DomainError("Fourier index length does not match rank");
    for (int x : I)
        if (x < 0) throw DomainError("Fourier index entries must be nonnegative");
    if (sgn(v) == 0)
        coeffs.erase(I);
    else
        coeffs[I] = v;
}

Q FourierData::at(const std::vector<int>& I) const {
    auto it = coeffs.find(I);
    return it == coeffs.end() ? Q(0) : it->second;
}

namespace {

QVec unit_rho(const RootSystem& rs) {
    QVec r = zeros(static_cast<std::size_t>(rs.ambient_dim));
    for (const auto& a : rs.positive) r = add(r, scale(a, Q(1, 2)));
    return r;
}

QVec reflect(const QVec& v, const QVec& a) { return sub(v, scale(a, 2 * dot(v, a) / norm2(a))); }

void require_dominant_integral(const RootSystem& rs, const QVec& v) {
    if (static_cast<int>(v.size()) != rs.ambient_dim) throw DomainError("weight dimension mismatch");
    for (const auto& a : rs.simple) {
        Q c = 2 * dot(v, a) / norm2(a);
        if (sgn(c) < 0 || !is_integer(c)) throw DomainError("not a dominant integral weight: " + key(v));
    }
}

QVec index_combination(const std::vector<int>& I, const std::vector<QVec>& basis, int dim) {
    if (I.size() != basis.size()) throw DomainError("index length does not match rank");
    QVec w = zeros(static_cast<std::size_t>(dim));
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (I[j] < 0) throw DomainError("index entries must be nonnegative");
        if (I[j]) w = add(w, scale(basis[j], Q(I[j])));
    }
    return w;
}

}  // namespace

Q DimPolynomial::eval(const QVec& mu) const {
    QVec y = add(mu, rho_full);
    Q v = 1;
    for (const auto& a : full.positive) v *= dot(y, a);
    return v / varpi_rho;
}

Poly DimPolynomial::poly() const { return shift(varpi(full), rho_full) * (1 / varpi_rho); }

DimPolynomial dim_polynomial(const RootSystem& full) {
    DimPolynomial d{full, unit_rho(full), 1};
    for (const auto& a : full.positive) d.varpi_rho *= dot(d.rho_full, a);
    if (sgn(d.varpi_rho) == 0) throw DomainError("degenerate root system");
    return d;
}

DegreeFunction unitary_degree(const RootSystem& U) {
    auto dp = std::make_shared<DimPolynomial>(dim_polynomial(U));
    auto om = fundamental_weights(U);
    int dim = U.ambient_dim;
    return [dp, om, dim](const std::vector<int>& I) { return dp->eval(index_combination(I, om, dim)); };
}

DegreeFunction group_degree(const RootSystem& U) {
    auto d = unitary_degree(U);
    return [d](const std::vector<int>& I) -> Q {
        Q v = d(I);
        return v * v;
    };
}

Q ell2d_norm(const FourierData& data, const DegreeFunction& deg) {
    Q s = 0;
    for (const auto& [I, a] : data.coeffs) s += deg(I) * a * a;
    return s;
}

std::vector<int> index_of_weight(const QVec& mu, const RootSystem& rs) {
    const RootSystem& red = rs.reduced() ? rs : reduced_systems(rs).second;
    std::vector<int> I;
    for (const auto& a : red.simple) {
        Q c = dot(mu, a) / norm2(a);
        if (sgn(c) < 0 || !is_integer(c)) throw DomainError("not a spherical weight: " + key(mu));
        I.push_back(static_cast<int>(c.get_num().get_si()));
    }
    if (mu_of_index(I, rs).weight != mu) throw DomainError("weight is outside the span of the lattice: " + key(mu));
    return I;
}

std::map<QVec, Q> shift_S_rho(const FourierData& data, const RootSystem& rs, const QVec& rho_v) {
    if (data.rank != rs.rank()) throw DomainError("Fourier data rank does not match the root system");
    std::map<QVec, Q> out;
    for (const auto& [I, a] : data.coeffs) out[add(mu_of_index(I, rs).weight, rho_v)] = a;
    return out;
}

FourierData unshift_S_rho(const std::map<QVec, Q>& shifted, const RootSystem& rs, const QVec& rho_v) {
    FourierData d(rs.rank());
    for (const auto& [p, a] : shifted) d.set(index_of_weight(sub(p, rho_v), rs), a);
    return d;
}

QVec dominant_conjugate(const RootSystem& rs, const QVec& v) {
    QVec w = v;
    for (bool moved = true; moved;) {
        moved = false;
        for (const auto& a : rs.simple) {
            if (sgn(dot(w, a)) < 0) {
                w = reflect(w, a);
                moved = true;
            }
        }
    }
    return w;
}

std::map<QVec, long> weight_multiplicities(const RootSystem& rs, const QVec& highest, std::size_t max_weights) {
    require_dominant_integral(rs, highest);
    const QVec r = unit_rho(rs);
    const Q top = norm2(highest);
    const Q top_shift = norm2(add(highest, r));

    // Weights by depth below the highest weight; the weight set is saturated, so
    // subtracting simple roots inside the ball |lambda| <= |highest| reaches every weight.
    std::vector<std::vector<QVec>> levels{{highest}};
    std::map<QVec, Q> m;
    std::map<QVec, long> out;
    m[highest] = 1;
    out[highest] = 1;
    std::map<QVec, bool> seen{{highest, true}};
    for (std::size_t depth = 0; depth < levels.size(); ++depth) {
        std::vector<QVec> next;
        for (const auto& lam : levels[depth]) {
            if (m[lam] == 0) continue;
            for (const auto& a : rs.simple) {
                QVec l2 = sub(lam, a);
                if (seen.count(l2) || norm2(l2) > top) continue;
                seen[l2] = true;
                next.push_back(l2);
            }
        }
        for (const auto& lam : next) {
            Q denom = top_shift - norm2(add(lam, r));
            Q acc = 0;
            if (sgn(denom) != 0) {
                for (const auto& a : rs.positive) {
                    for (int j = 1;; ++j) {
                        QVec up = add(lam, scale(a, Q(j)));
                        auto it = m.find(up);
                        if (it == m.end() || sgn(it->second) == 0) break;
                        acc += it->second * dot(up, a);
                    }
                }
            }
            Q val = sgn(denom) == 0 ? Q(0) : 2 * acc / denom;
            if (!is_integer(val) || sgn(val) < 0) throw TheoremViolation("Freudenthal recursion gave " + to_string(val));
            m[lam] = val;
            if (sgn(val) > 0) {
                out[lam] = val.get_num().get_si();
                if (out.size() > max_weights) throw ResourceError("weight diagram exceeds the size cap");
            }
        }
        if (!next.empty()) levels.push_back(std::move(next));
    }
    return out;
}

long freudenthal_dimension(const RootSystem& rs, const QVec& highest) {
    long d = 0;
    for (const auto& [w, k] : weight_multiplicities(rs, highest)) d += k;
    return d;
}

GroupManifold group_manifold(Label l, int rank) {
    GroupManifold gm;
    gm.U = build_root_system_any(l, rank);
    const int d = gm.U.ambient_dim;
    auto left = [&](const QVec& v) {
        QVec w = zeros(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i) w[i] = v[i];
        return w;
    };
    auto right = [&](const QVec& v) {
        QVec w = zeros(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i) w[d + i] = v[i];
        return w;
    };
    gm.full = product({gm.U, gm.U});
    gm.full.positive.clear();
    gm.full.simple.clear();
    gm.full.mult.clear();
    for (const auto& a : gm.U.positive) {
        gm.full.positive.push_back(left(a));
        gm.full.mult.push_back(1);
    }
    for (const auto& a : gm.U.positive) {
        gm.full.positive.push_back(right(neg(a)));
        gm.full.mult.push_back(1);
    }
    for (const auto& a : gm.U.simple) gm.full.simple.push_back(left(a));
    for (const auto& a : gm.U.simple) gm.full.simple.push_back(right(neg(a)));

    auto om = fundamental_weights(gm.U);
    for (const auto& w : om) gm.full_fundamental.push_back(left(w));
    for (const auto& w : om) gm.full_fundamental.push_back(right(neg(w)));

    gm.restricted.ambient_dim = 2 * d;
    gm.restricted.factors = {Factor{l, rank, 0, 2 * d}};
    auto half_diff = [&](const QVec& a) { return add(left(scale(a, Q(1, 2))), right(scale(a, Q(-1, 2)))); };
    for (const auto& a : gm.U.positive) {
        gm.restricted.positive.push_back(half_diff(a));
        gm.restricted.mult.push_back(2);
    }
    for (const auto& a : gm.U.simple) gm.restricted.simple.push_back(half_diff(a));
    for (const auto& w : om) gm.xi.push_back(add(left(w), right(neg(w))));
    gm.rho = rho(gm.restricted);
    return gm;
}

bool is_spherical(const QVec& mu, const GroupManifold& gm) {
    const int d = gm.U.ambient_dim;
    if (static_cast<int>(mu.size()) != 2 * d) throw DomainError("weight dimension mismatch");
    QVec nu(mu.begin(), mu.begin() + d);
    for (int i = 0; i < d; ++i)
        if (mu[d + i] != -nu[i]) return false;
    for (const auto& fac : gm.U.factors) {
        if (fac.label != Label::A) continue;
        Q s = 0;
        for (int i = 0; i < fac.dim; ++i) s += nu[fac.offset + i];
        if (sgn(s) != 0) return false;
    }
    for (const auto& a : gm.U.simple) {
        Q c = 2 * dot(nu, a) / norm2(a);
        if (sgn(c) < 0 || !is_integer(c)) return false;
    }
    return true;
}

QVec full_weight(const std::vector<int>& I, const GroupManifold& gm) {
    return index_combination(I, gm.full_fundamental, gm.full.ambient_dim);
}

FourierData q_map(const FourierData& central, const GroupManifold& gm) {
    const int r = gm.U.rank();
    if (central.rank != 2 * r) throw DomainError("central data must be indexed by 2r-tuples");
    FourierData out(r);
    for (const auto& [I, c] : central.coeffs) {
        std::vector<int> a(I.begin(), I.begin() + r), b(I.begin() + r, I.end());
        if (a == b) out.set(a, c);
    }
    return out;
}

StrongerIdentityReport stronger_identity_check(const FourierData& central, const GroupManifold& gm) {
    StrongerIdentityReport rep;
    FourierData q = q_map(central, gm);
    const Poly vp = varpi(gm.full);
    const Q varpi_rho = vp.eval(gm.rho);
    std::map<QVec, long> dims;
    for (const auto& [I, c] : central.coeffs) {
        QVec mu = full_weight(I, gm);
        if (!is_spherical(mu, gm)) {
            ++rep.dropped;
            continue;
        }
        ++rep.points;
        std::vector<int> J = index_of_weight(mu, gm.restricted);
        // V_nu (x) V_nu^*: the second factor's highest weight for -Delta+ is the lowest weight of
        // a U-module whose highest weight is its dominant conjugate.
        const int d = gm.U.ambient_dim;
        QVec a(mu.begin(), mu.begin() + d), b(mu.begin() + d, mu.end());
        auto dim_of = [&](const QVec& w) {
            auto it = dims.find(w);
            if (it != dims.end()) return it->second;
            long v = freudenthal_dimension(gm.U, w);
            dims.emplace(w, v);
            return v;
        };
        Q deg = Q(dim_of(a)) * Q(dim_of(dominant_conjugate(gm.U, b)));
        Q lhs = q.at(J) / deg;
        Q rhs = varpi_rho / vp.eval(add(mu, gm.rho)) * c;
        if (lhs != rhs) {
            rep.ok = false;
            rep.failures.push_back(key(mu) + ": " + to_string(lhs) + " != " + to_string(rhs));
        }
    }
    // Non-spherical weights must not leak into the image.
    std::size_t image = 0;
    for (const auto& [J, v] : q.coeffs) {
        QVec mu = mu_of_index(J, gm.restricted).weight;
        if (!is_spherical(mu, gm)) {
            rep.ok = false;
            rep.failures.push_back("non-spherical weight in image: " + key(mu));
        }
        ++image;
    }
    if (image != rep.points) {
        rep.ok = false;
        rep.failures.push_back("image size does not match the spherical support");
    }
    return rep;
}

std::vector<std::vector<int>> index_box(int rank, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> I(static_cast<std::size_t>(rank), 0);
    while (true) {
        out.push_back(I);
        int i = rank - 1;
        while (i >= 0 && I[i] == bound) I[i--] = 0;
        if (i < 0) break;
        ++I[i];
    }
    return out;
}

CknResult c_k_n(const Poly& Phi, const PropagationPair& pair, const std::vector<std::vector<int>>& truncation,
                const DegreeFunction& deg_n) {
    const int nk = pair.large.ambient_dim, nn = pair.small.ambient_dim;
    if (Phi.nvars() != nk) throw DomainError("c_k_n: extension lives on the wrong space");
    QVec c = add(neg(rho(pair.large)), pair.embed(rho(pair.small)));
    std::vector<Poly> images;
    for (int i = 0; i < nk; ++i) {
        Poly p = Poly::constant(nn, c[i]);
        if (i < nn) p = p + Poly::variable(nn, i);
        images.push_back(p);
    }
    CknResult res;
    res.extension = Phi.substitute(images);
    res.data = FourierData(pair.small.rank());
    for (const auto& I : truncation) {
        QVec mu = mu_of_index(I, pair.small).weight;
        res.data.set(I, res.extension.eval(mu));
        if (deg_n) res.deg[I] = deg_n(I);
    }
    return res;
}

namespace {

struct CharacterContext {
    std::vector<WeylElement> elems;
    std::vector<int> dets;
    QVec rho_u;
};

CharacterContext character_context(const RootSystem& U) {
    CharacterContext ctx;
    WeylGroup g(U, false);
    g.for_each([&](const WeylElement& w) {
        ctx.elems.push_back(w);
        ctx.dets.push_back(w.det());
    });
    ctx.rho_u = unit_rho(U);
    return ctx;
}

std::complex<double> phase(const QVec& lam, const QVec& t) {
    Q x = dot(lam, t);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Q frac = x - Q(fl);
    double th = 2 * std::numbers::pi * to_double(frac);
    return {std::cos(th), std::sin(th)};
}

std::complex<double> character_with(const CharacterContext& ctx, const RootSystem& U, const QVec& highest,
                                    const QVec& t) {
    int p = 0;
    for (const auto& a : U.positive)
        if (is_integer(dot(a, t))) ++p;
    QVec lr = add(highest, ctx.rho_u);
    std::complex<double> num = 0, den = 0;
    for (std::size_t i = 0; i < ctx.elems.size(); ++i) {
        QVec a = ctx.elems[i].apply(lr), b = ctx.elems[i].apply(ctx.rho_u);
        double fa = std::pow(to_double(dot(a, ctx.rho_u)), p), fb = std::pow(to_double(dot(b, ctx.rho_u)), p);
        num += double(ctx.dets[i]) * fa * phase(a, t);
        den += double(ctx.dets[i]) * fb * phase(b, t);
    }
    return num / den;
}

}  // namespace

std::complex<double> character_value(const RootSystem& U, const QVec& highest, const QVec& turns) {
    if (static_cast<int>(turns.size()) != U.ambient_dim) throw DomainError("torus point dimension mismatch");
    require_dominant_integral(U, highest);
    return character_with(character_context(U), U, highest, turns);
}

std::complex<double> evaluate_central(const FourierData& data, const RootSystem& U, const QVec& turns) {
    if (data.rank != U.rank()) throw DomainError("Fourier data rank does not match the group");
    if (static_cast<int>(turns.size()) != U.ambient_dim) throw DomainError("torus point dimension mismatch");
    auto ctx = character_context(U);
    auto om = fundamental_weights(U);
    std::complex<double> s = 0;
    for (const auto& [I, a] : data.coeffs)
        s += to_double(a) * character_with(ctx, U, index_combination(I, om, U.ambient_dim), turns);
    return s;
}

namespace {

long branch_generic(const RootSystem& large, const RootSystem& small, const std::function<QVec(const QVec&)>& res_fn,
                    const QVec& mu_k) {
    QVec target = res_fn(mu_k);
    std::map<QVec, long> res;
    for (const auto& [w, m] : weight_multiplicities(large, mu_k)) res[res_fn(w)] += m;
    const QVec rn = unit_rho(small);
    long found = 0;
    while (!res.empty()) {
        // A weight maximizing <., rho_n> has no weight above it, so it is a highest weight.
        auto best = res.begin();
        Q best_h = dot(best->first, rn);
        for (auto it = res.begin(); it != res.end(); ++it) {
            Q h = dot(it->first, rn);
            if (h > best_h) {
                best_h = h;
                best = it;
            }
        }
        QVec top = best->first;
        long m = best->second;
        if (m < 0) throw TheoremViolation("negative multiplicity while branching");
        if (top == target) found += m;
        for (const auto& [w, k] : weight_multiplicities(small, top)) {
            auto it = res.find(w);
            if (it == res.end()) throw TheoremViolation("branching character is not a sum of characters");
            it->second -= m * k;
            if (it->second == 0) res.erase(it);
        }
    }
    return found;
}

}  // namespace

long branch_multiplicity(const QVec& mu_k, const PropagationPair& full_pair) {
    return branch_generic(full_pair.large, full_pair.small, [&](const QVec& v) { return full_pair.restrict_vec(v); },
                          mu_k);
}

long group_branch_multiplicity(const std::vector<int>& I_k, const GroupManifold& large, const GroupManifold& small) {
    // V (x) V^* restricts factorwise, and duals branch like the modules themselves.
    if (static_cast<int>(I_k.size()) != large.U.rank()) throw DomainError("index length does not match rank");
    QVec nu = zeros(static_cast<std::size_t>(large.U.ambient_dim));
    auto om = fundamental_weights(large.U);
    for (std::size_t j = 0; j < I_k.size(); ++j) nu = add(nu, scale(om[j], Q(I_k[j])));
    long m = branch_multiplicity(nu, PropagationPair{small.U, large.U});
    return m * m;
}

long group_branch_multiplicity_doubled(const std::vector<int>& I_k, const GroupManifold& large,
                                       const GroupManifold& small) {
    PropagationPair up{small.U, large.U};
    const int dk = large.U.ambient_dim;
    auto res_fn = [&](const QVec& v) {
        QVec a(v.begin(), v.begin() + dk), b(v.begin() + dk, v.end());
        QVec ra = up.restrict_vec(a), rb = up.restrict_vec(b);
        QVec out = ra;
        out.insert(out.end(), rb.begin(), rb.end());
        return out;
    };
    QVec mu = mu_of_index(I_k, large.restricted).weight;
    return branch_generic(large.full, small.full, res_fn, mu);
}

}  // namespace pwl
