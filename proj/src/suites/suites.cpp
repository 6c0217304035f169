#include "pwl/suites.hpp"

#include "pwl/errors.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace pwl {

void SuiteReport::expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
        ok = false;
        if (failures.size() < 20) failures.push_back(what);
    }
}

void SuiteReport::merge(const SuiteReport& o) {
    ok = ok && o.ok;
    checks += o.checks;
    for (const auto& f : o.failures)
        if (failures.size() < 20) failures.push_back(f);
}

json SuiteReport::to_json() const {
    json out = detail;
    out["status"] = ok ? "ok" : "violation";
    out["checks"] = checks;
    if (!failures.empty()) out["failures"] = failures;
    return out;
}

namespace {

std::string tag(const RootSystem& a, const RootSystem& b) { return a.name() + "<" + b.name(); }

Poly nonconstant_invariant(const InvariantBasis& basis, int max_degree, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Poly p = random_invariant(basis, max_degree, rng);
        if (p.degree() > 0) return p;
    }
    return basis.generators.front();
}

}  // namespace

SuiteReport restriction_weyl_suite(Label l, int from, int to, int max_rank) {
    SuiteReport r;
    PropagationPair pair = propagate(build_root_system({l, from}), to);
    RestrictionCertificate c = verify_restriction_theorem(pair, max_rank);
    r.expect(c.ok, "restriction " + tag(pair.small, pair.large) + ": " + c.note);
    r.detail["order"] = c.target_order;
    return r;
}

SuiteReport lift_roundtrip_suite(Label l, int from, int to, int samples, int max_degree, std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    PropagationPair pair = propagate(build_root_system({l, from}), to);
    InvariantBasis basis = invariant_generators(WeylGroup(pair.small, true));
    WeylGroup gk(pair.large, true);
    const std::string t = tag(pair.small, pair.large);
    for (int s = 0; s < samples; ++s) {
        Poly q = random_invariant(basis, max_degree, rng);
        Poly a = lift_invariant(q, pair);
        Poly b = constructive_pw_lift(q, pair);
        r.expect(restrict_poly(a, pair) == q && is_invariant(a, gk), "generator lift " + t + ": " + q.to_string());
        r.expect(restrict_poly(b, pair) == q && is_invariant(b, gk), "constructive lift " + t + ": " + q.to_string());
    }
    return r;
}

SuiteReport rais_suite(const WeylGroup& g, int samples, int max_degree, std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    CoinvariantBasis cb(g, max_degree);
    for (int s = 0; s < samples; ++s) {
        Poly F = random_poly(g.dim(), max_degree, 6, rng);
        auto terms = rais_decompose(F, cb);
        bool inv = true;
        for (const auto& t : terms) inv = inv && is_invariant(t.Phi, g);
        r.expect(rais_expand(terms, g.dim()) == F, "expansion " + g.name() + ": " + F.to_string());
        r.expect(inv, "coefficients not invariant " + g.name());
    }
    return r;
}

SuiteReport t_calculus_suite(const RootSystem& rs, int samples, std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    WeylGroup g(rs, true);
    QVec rh = rho(rs);
    InvariantBasis basis = invariant_generators(g);
    Poly vp = varpi(rs);
    auto divides = [&](const Poly& Phi) { return shift(Phi, neg(rh)).divmod(vp).second.is_zero(); };
    for (int s = 0; s < samples; ++s) {
        Poly F = random_invariant(basis, 4, rng);
        Poly Phi = op_T_inv(F, g, rh).expanded();
        r.expect(op_T_poly(Phi, rs, rh) == F, "T o T^-1 on " + rs.name());
        r.expect(divides(Phi) && shifted_vanishing_check(Phi, rs, rh), "divisibility after T^-1 on " + rs.name());
    }
    int done = 0;
    for (int attempt = 0; done < samples && attempt < 20 * samples; ++attempt) {
        Poly P = random_poly(rs.ambient_dim, static_cast<int>(rs.positive.size()) + 2, 4, rng);
        Poly Phi = rho_skew_symmetrize_raw(P, g, rh);
        if (Phi.is_zero()) continue;
        ++done;
        r.expect(divides(Phi) && shifted_vanishing_check(Phi, rs, rh), "divisibility of a skew polynomial on " + rs.name());
        Poly F = op_T_poly(Phi, rs, rh);
        r.expect(is_invariant(F, g), "T image not invariant on " + rs.name());
        r.expect(op_T_inv(F, g, rh).expanded() == Phi, "T^-1 o T on " + rs.name());
    }
    r.expect(done == samples, "could not draw enough nonzero skew polynomials on " + rs.name());
    return r;
}

SuiteReport rho_restriction_suite(const PropagationTower& tower, int samples, std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    const auto& lv = tower.levels();
    const int n = lv.front(), k = lv.back();
    PropagationPair pair = tower.pair(n, k);
    WeylGroup gn(pair.small, true);
    QVec rn = rho(pair.small);
    InvariantBasis basis = invariant_generators(gn);
    const std::string t = tag(pair.small, pair.large);
    for (int s = 0; s < samples; ++s) {
        RhoShiftedSkew Psi = op_T_inv(random_invariant(basis, 6, rng), gn, rn);
        RhoShiftedSkew L = rho_shifted_lift(Psi, pair);
        r.expect(restrict_rho_shifted(L, pair).t_image() == Psi.t_image(), "rho-shifted round trip " + t);
    }
    ComposeCertificate c = compose_check(tower, MapKind::PRho, std::max(1, samples / 10), seed + 1);
    r.expect(c.ok, "P_rho composition on " + t);
    r.checks += c.checks;
    return r;
}

SuiteReport injectivity_suite() {
    SuiteReport r;
    const Q sqrt2pi2 = 2, twopi2 = 4;
    auto check = [&](const InjectivityRadius& ir, const Q& sq, const std::string& text, const std::string& what) {
        r.expect(ir.squared == sq && ir.text == text, what + " gives " + ir.text);
    };
    for (int m = 1; m <= 6; ++m) {
        // Compact groups as symmetric spaces U x U / U.
        check(injectivity_radius(space_descriptor(1, m + 1)), sqrt2pi2, "sqrt(2)*pi", "SU(" + std::to_string(m + 1) + ")");
        check(injectivity_radius(space_descriptor(4, m)), sqrt2pi2, "sqrt(2)*pi", "Sp(" + std::to_string(m) + ")");
        check(injectivity_radius(space_descriptor(2, m)), twopi2, "2*pi", "SO(" + std::to_string(2 * m + 1) + ")");
        if (m >= 4) check(injectivity_radius(space_descriptor(3, m)), twopi2, "2*pi", "SO(" + std::to_string(2 * m) + ")");
    }
    check(injectivity_radius_sigma2(Label::A), sqrt2pi2, "sqrt(2)*pi", "Sigma_2 of type A");
    check(injectivity_radius_sigma2(Label::C), sqrt2pi2, "sqrt(2)*pi", "Sigma_2 of type C");
    check(injectivity_radius_sigma2(Label::B), twopi2, "2*pi", "Sigma_2 of type B");
    check(injectivity_radius_sigma2(Label::D), twopi2, "2*pi", "Sigma_2 of type D");
    // Rows whose Sigma_2 type is read off the table directly, at rank >= 2.
    for (int p = 2; p <= 5; ++p)
        for (int q = p; q <= 5; ++q) {
            check(injectivity_radius(space_descriptor(5, 0, p, q)), sqrt2pi2, "sqrt(2)*pi", "AIII");
            check(injectivity_radius(space_descriptor(10, 0, p, q)), sqrt2pi2, "sqrt(2)*pi", "CII");
            if (p < q || p >= 4) check(injectivity_radius(space_descriptor(8, 0, p, q)), twopi2, "2*pi", "BDI");
        }
    for (int j = 3; j <= 6; ++j) {
        check(injectivity_radius(space_descriptor(6, j)), sqrt2pi2, "sqrt(2)*pi", "AI");
        check(injectivity_radius(space_descriptor(7, j)), sqrt2pi2, "sqrt(2)*pi", "AII");
        check(injectivity_radius(space_descriptor(11, j)), sqrt2pi2, "sqrt(2)*pi", "CI");
    }
    for (int j = 4; j <= 6; ++j) check(injectivity_radius(space_descriptor(9, j)), sqrt2pi2, "sqrt(2)*pi", "DIII");
    return r;
}

SuiteReport omega_star_suite(const RootSystem& rs) {
    SuiteReport r;
    Polytope os = omega_star(rs);
    r.expect(polytope_equal(os, omega_star_closed(rs)), "closed form of Omega* on " + rs.name());
    r.expect(polytope_contains(omega(rs), os), "Omega* inside Omega on " + rs.name());
    Radius in = inradius(os);
    Label l = rs.family().label;
    if (l == Label::B || l == Label::C) r.expect(in.rational && in.value == Q(1, 4), "inradius pi/4 on " + rs.name());
    if (l == Label::D) r.expect(in.squared == Q(1, 32), "inradius^2 pi^2/32 on " + rs.name());
    r.detail["inradius_squared"] = to_string(in.squared);
    return r;
}

SuiteReport intersection_suite(Label l, int from, int to) {
    SuiteReport r;
    PropagationPair pair = make_pair(build_root_system({l, from}), build_root_system({l, to}));
    try {
        IntersectionCertificate c = check_intersection(pair);
        r.expect(c.ok, "Omega* intersection " + tag(pair.small, pair.large));
        r.detail["vertex_check_run"] = c.vertex_check_run;
    } catch (const TheoremViolation& e) {
        r.expect(false, e.what());
    }
    return r;
}

SuiteReport table_suite(int max_j, int max_pq) {
    SuiteReport r;
    struct Row {
        int row;
        int min_j;
        std::function<int(int)> rank, dim;
    };
    // The "Rank M" and "Dim M" columns.
    const std::vector<Row> by_j = {
        {1, 2, [](int j) { return j - 1; }, [](int j) { return j * j - 1; }},
        {2, 1, [](int j) { return j; }, [](int j) { return 2 * j * j + j; }},
        {3, 2, [](int j) { return j; }, [](int j) { return 2 * j * j - j; }},
        {4, 1, [](int j) { return j; }, [](int j) { return 2 * j * j + j; }},
        {6, 2, [](int j) { return j - 1; }, [](int j) { return (j - 1) * (j + 2) / 2; }},
        {7, 2, [](int j) { return j - 1; }, [](int j) { return 2 * j * j - j - 1; }},
        {9, 2, [](int j) { return j / 2; }, [](int j) { return j * (j - 1); }},
        {11, 1, [](int j) { return j; }, [](int j) { return j * (j + 1); }},
    };
    for (const auto& row : by_j)
        for (int j = row.min_j; j <= max_j; ++j) {
            SpaceDescriptor d = space_descriptor(row.row, j);
            std::string what = "row " + std::to_string(row.row) + " j=" + std::to_string(j);
            r.expect(d.rank == row.rank(j) && d.rs.rank() == d.rank, what + " rank");
            r.expect(d.dim == row.dim(j) && manifold_dimension(d.rs) == d.dim, what + " dim");
        }
    struct PQRow {
        int row;
        int min_sum;
        int dim_factor;
    };
    for (const PQRow& row : {PQRow{5, 2, 2}, PQRow{8, 3, 1}, PQRow{10, 2, 4}})
        for (int p = 1; p <= max_pq; ++p)
            for (int q = 1; q <= max_pq; ++q) {
                if (p + q < row.min_sum) continue;
                SpaceDescriptor d = space_descriptor(row.row, 0, p, q);
                std::string what = "row " + std::to_string(row.row) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
                r.expect(d.rank == std::min(p, q) && d.rs.rank() == d.rank, what + " rank");
                r.expect(d.dim == row.dim_factor * p * q && manifold_dimension(d.rs) == d.dim, what + " dim");
            }
    return r;
}

SuiteReport stronger_identity_suite(Label l, int rank, int samples, std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    GroupManifold gm = group_manifold(l, rank);
    std::uniform_int_distribution<int> idx(0, 2), coef(-4, 4), count(1, 4), coin(0, 1);
    long points = 0;
    for (int s = 0; s < samples; ++s) {
        FourierData central(2 * rank);
        int terms = count(rng);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> I(static_cast<std::size_t>(2 * rank));
            for (int j = 0; j < rank; ++j) I[j] = idx(rng);
            for (int j = 0; j < rank; ++j) I[rank + j] = coin(rng) ? I[j] : idx(rng);
            int c = coef(rng);
            central.set(I, Q(c == 0 ? 1 : c, 1 + idx(rng)));
        }
        StrongerIdentityReport rep = stronger_identity_check(central, gm);
        points += static_cast<long>(rep.points);
        r.expect(rep.ok, "stronger identity on " + gm.U.name() + (rep.failures.empty() ? "" : ": " + rep.failures[0]));
    }
    r.detail["points"] = points;
    return r;
}

SuiteReport branching_suite(Label l, int n, int k, int bound) {
    SuiteReport r;
    GroupManifold gk = group_manifold(l, k), gn = group_manifold(l, n);
    PropagationPair up{gn.U, gk.U};
    json mults = json::object();
    // Multiplicity of the level-n spherical representation in the level-k one with padded index.
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& I, int pos, int left) {
        if (pos == n) {
            std::vector<int> Ik = pad_index(I, k);
            long m = group_branch_multiplicity(Ik, gk, gn);
            std::string key_;
            for (int x : Ik) key_ += std::to_string(x);
            mults[key_] = m;
            r.expect(m == 1, gk.U.name() + " -> " + gn.U.name() + " I=" + key_ + " multiplicity " + std::to_string(m));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            I[pos] = v;
            rec(I, pos + 1, left - v);
        }
    };
    std::vector<int> I(static_cast<std::size_t>(n));
    rec(I, 0, bound);
    // Restrictions of every level-k spherical weight land in the level-n spherical lattice.
    auto om = fundamental_weights(gk.U);
    std::function<void(std::vector<int>&, int, int)> rec2 = [&](std::vector<int>& J, int pos, int left) {
        if (pos == k) {
            QVec nu = zeros(static_cast<std::size_t>(gk.U.ambient_dim));
            for (int j = 0; j < k; ++j) nu = add(nu, scale(om[j], Q(J[j])));
            QVec res = up.restrict_vec(nu);
            QVec mu = res;
            for (const auto& x : res) mu.push_back(-x);
            r.expect(lambda_plus_member(mu, gn.restricted), "restricted weight outside the spherical lattice");
            return;
        }
        for (int v = 0; v <= left; ++v) {
            J[pos] = v;
            rec2(J, pos + 1, left - v);
        }
    };
    std::vector<int> J(static_cast<std::size_t>(k));
    rec2(J, 0, bound);
    r.detail["multiplicities"] = mults;
    return r;
}

SuiteReport limits_suite(const PropagationTower& tower, int samples, std::uint64_t seed) {
    SuiteReport r;
    ComposeCertificate c = compose_check(tower, MapKind::L, samples, seed);
    r.expect(c.ok, "L composition on " + label_name(tower.label()) + " tower");
    CommutationCertificate e = eta_nu_check(tower, samples, seed + 1);
    r.expect(e.ok, "eta o nu = L o eta on " + label_name(tower.label()) + " tower");
    CommutationCertificate nrm = l_norm_check(tower, samples, seed + 2, group_case_degree(tower.label()));
    r.expect(nrm.ok, "ell2d preserved by L on " + label_name(tower.label()) + " tower");
    r.detail["composition"] = c.ok;
    r.detail["eta_nu"] = e.ok;
    r.detail["ell2d_preserved"] = nrm.ok;
    return r;
}

SuiteReport oracle_suite(int max_sum, double tol) {
    SuiteReport r;
    double worst = 0;
    for (int a = 0; a <= max_sum; ++a)
        for (int b = 0; a + b <= max_sum; ++b) {
            ProjectionOracle o = su2_su3_projection_oracle(a, b);
            double err = std::abs(o.c_oracle - o.c_provider);
            worst = std::max(worst, err);
            std::string what = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            r.expect(err <= tol, "oracle mismatch at " + what);
            r.expect(std::lround(o.dim_V) == (a + 1) * (b + 1) * (a + b + 2) / 2, "dim V at " + what);
            r.expect(std::lround(o.dim_W) == a + 1, "dim W at " + what);
        }
    r.detail["max_error"] = worst;
    return r;
}

SuiteReport nonvanishing_suite(const PropagationTower& tower, std::uint64_t seed) {
    SuiteReport r;
    std::mt19937_64 rng(seed);
    const auto& lv = tower.levels();
    const int base = lv.front();
    const RootSystem& rb = tower.system(base);
    std::vector<CoherentElement> elems;
    elems.push_back({base, nonconstant_invariant(invariant_generators(WeylGroup(rb, true)), 6, rng), LiftRule::Generator});
    elems.push_back({base, nonconstant_invariant(invariant_generators(WeylGroup(rb, true)), 4, rng), LiftRule::Padding});
    {
        QVec a = zeros(static_cast<std::size_t>(rb.ambient_dim));
        a[0] = 1;
        a[static_cast<std::size_t>(rb.ambient_dim - 1)] = rb.family().label == Label::A ? Q(-1) : Q(2);
        Poly p = Poly::constant(rb.ambient_dim, 3) + Poly::variable(rb.ambient_dim, 0);
        elems.push_back({base, symmetrize(ExpPoly::exponential(a, p), WeylGroup(rb, true)), LiftRule::Padding});
    }
    {
        FourierData d(rb.rank());
        d.set(std::vector<int>(static_cast<std::size_t>(rb.rank()), 1), Q(2, 3));
        d.set(pad_index({2}, rb.rank()), Q(-1));
        elems.push_back({base, d, LiftRule::Padding});
    }
    static const char* kinds[] = {"poly/generator", "poly/padding", "exppoly/padding", "fourier/padding"};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        std::map<int, TowerValue> at;
        for (int L : lv) {
            at.emplace(L, project(elems[i], tower, L));
            r.expect(!is_zero_value(at.at(L)), std::string(kinds[i]) + " vanishes at level " + std::to_string(L));
        }
        for (std::size_t a = 0; a < lv.size(); ++a)
            for (std::size_t b = a + 1; b < lv.size(); ++b) {
                CoherentElement from_k{lv[b], at.at(lv[b]), elems[i].rule};
                r.expect(values_equal(project(from_k, tower, lv[a]), at.at(lv[a])),
                         std::string(kinds[i]) + " not coherent " + std::to_string(lv[b]) + "->" + std::to_string(lv[a]));
            }
    }
    return r;
}

}  // namespace pwl
