#include "pwl/errors.hpp"
#include "pwl/pwmodel.hpp"

#include "support.hpp"

#include <random>

using namespace pwl;
using pwl::test::v;
using pwl::test::vq;

namespace {

Poly lin(const QVec& a) { return Poly::linear(a); }

// <lambda + shift, a> as a polynomial in lambda.
Poly shifted_pairing(const QVec& a, const QVec& shift) { return Poly::linear(a, dot(shift, a)); }

// prod over positive roots (one per line) of <lambda + rho, a>, written out directly.
Poly varpi_shifted(const RootSystem& rs, const QVec& r) {
    Poly out = Poly::constant(rs.ambient_dim, 1);
    for (const auto& a : rs.positive) {
        if (rs.is_root(scale(a, 2))) continue;
        out = out * shifted_pairing(a, r);
    }
    return out;
}

Q varpi_at(const RootSystem& rs, const QVec& x) {
    Q out = 1;
    for (const auto& a : rs.positive)
        if (!rs.is_root(scale(a, 2))) out *= dot(x, a);
    return out;
}

}  // namespace

TEST_CASE("symmetrization of exponential polynomials") {
    WeylGroup bc1(build_root_system({Label::BC, 1}), false);
    ExpPoly F = ExpPoly::exponential(v({1}), Poly::constant(1, 1));
    ExpPoly S = symmetrize(F, bc1);
    ExpPoly expect(1);
    expect.add(v({1}), Poly::constant(1, frac(1, 2)));
    expect.add(v({-1}), Poly::constant(1, frac(1, 2)));
    CHECK(S == expect);
    CHECK(S.radius2() == F.radius2());

    WeylGroup b2(build_root_system({Label::B, 2}), false);
    ExpPoly inv = ExpPoly::from_poly(power_sum(2, 0, 2, 2));
    CHECK(symmetrize(inv, b2) == inv);
    CHECK(is_invariant(symmetrize(ExpPoly::exponential(v({1, 2}), lin(v({1, 0}))), b2), b2));
}

TEST_CASE("flat restriction") {
    RootSystem b3 = build_root_system({Label::B, 3});
    PropagationPair id = propagate(b3, 3);
    ExpPoly F = symmetrize(ExpPoly::exponential(v({0, 0, 1}), Poly::constant(3, 1)), WeylGroup(b3, false));
    CHECK(restrict_flat(F, id) == F);

    PropagationPair p = make_pair(build_root_system({Label::B, 2}), b3);
    ExpPoly R = restrict_flat(F, p);
    // Orbit of f3 is {+-f1, +-f2, +-f3}; the two with a = +-f3 project to 0.
    ExpPoly expect(2);
    expect.add(v({0, 0}), Poly::constant(2, frac(1, 3)));
    for (const auto& a : {v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})}) expect.add(a, Poly::constant(2, frac(1, 6)));
    CHECK(R == expect);

    Poly q = power_sum(3, 0, 3, 4);
    CHECK(restrict_flat(ExpPoly::from_poly(q), p) == ExpPoly::from_poly(restrict_poly(q, p)));
}

TEST_CASE("varpi is the product over indivisible positive roots") {
    for (Family f : {Family{Label::A, 2}, Family{Label::B, 3}, Family{Label::BC, 2}, Family{Label::D, 4}}) {
        RootSystem rs = build_root_system(f);
        CHECK(varpi(rs) == varpi_shifted(rs, zeros(static_cast<std::size_t>(rs.ambient_dim))));
    }
}

TEST_CASE("rho-skew symmetrization") {
    RootSystem a1 = build_root_system({Label::A, 1});
    WeylGroup g(a1, true);
    QVec r = rho(a1);
    QVec alpha = a1.simple[0];

    SUBCASE("a skew input is returned unchanged") {
        Poly F = shifted_pairing(alpha, r);
        CHECK(rho_skew_symmetrize_raw(F, g, r) == F);
    }
    SUBCASE("constants vanish") { CHECK(rho_skew_symmetrize_raw(Poly::constant(2, 5), g, r).is_zero()); }
    SUBCASE("Phi(lambda - rho) vanishes on root hyperplanes") {
        std::mt19937_64 rng(41);
        for (Family f : {Family{Label::A, 2}, Family{Label::B, 2}, Family{Label::BC, 2}}) {
            RootSystem rs = build_root_system(f);
            WeylGroup w(rs, true);
            QVec rr = rho(rs);
            Poly Phi = rho_skew_symmetrize_raw(random_poly(rs.ambient_dim, 4, 5, rng), w, rr);
            CHECK(is_rho_skew(Phi, w, rr));
            CHECK(shifted_vanishing_check(Phi, rs, rr));
        }
    }
}

TEST_CASE("T on the examples") {
    RootSystem a1 = build_root_system({Label::A, 1});
    WeylGroup g(a1, true);
    QVec r = rho(a1);
    QVec alpha = a1.simple[0];

    RhoShiftedSkew Phi = RhoShiftedSkew::from_poly(shifted_pairing(alpha, r), g, r);
    CHECK(op_T(Phi) == Poly::constant(2, dot(r, alpha)));

    RootSystem b2 = build_root_system({Label::B, 2});
    QVec rb = rho(b2);
    CHECK(rb == vq({frac(1, 2), frac(3, 2)}));
    Poly w = varpi_shifted(b2, rb);
    CHECK(op_T_poly(w, b2, rb) == Poly::constant(2, varpi_at(b2, rb)));

    CHECK(op_T_inv(Poly::constant(2, 1), WeylGroup(b2, true), rb).expanded() == w * (Q(1) / varpi_at(b2, rb)));

    Poly sq = lin(alpha).pow(2);
    Poly expect = shifted_pairing(alpha, r).pow(3) * (Q(1) / dot(r, alpha));
    CHECK(op_T_inv(sq, g, r).expanded() == expect);
}

TEST_CASE("T and its inverse are mutually inverse") {
    std::mt19937_64 rng(43);
    for (Family f : {Family{Label::A, 2}, Family{Label::B, 2}, Family{Label::C, 3}, Family{Label::BC, 2}, Family{Label::A, 3}}) {
        RootSystem rs = build_root_system(f);
        WeylGroup g(rs, true);
        QVec r = rho(rs);
        InvariantBasis b = invariant_generators(g);
        for (int t = 0; t < 3; ++t) {
            Poly F = random_invariant(b, 6, rng);
            RhoShiftedSkew Phi = op_T_inv(F, g, r);
            CHECK(is_rho_skew(Phi.expanded(), g, r));
            CHECK(op_T_poly(Phi.expanded(), rs, r) == F);
            CHECK(op_T_inv(op_T_poly(Phi.expanded(), rs, r), g, r).expanded() == Phi.expanded());
        }
    }
}

TEST_CASE("T on a non-skew input is a domain error") {
    RootSystem a1 = build_root_system({Label::A, 1});
    CHECK_THROWS_AS(RhoShiftedSkew::from_poly(Poly::constant(2, 1), WeylGroup(a1, true), rho(a1)), DomainError);
}

TEST_CASE("rho-shifted restriction") {
    SUBCASE("identity pair") {
        RootSystem b2 = build_root_system({Label::B, 2});
        WeylGroup g(b2, true);
        RhoShiftedSkew Phi = op_T_inv(power_sum(2, 0, 2, 2), g, rho(b2));
        CHECK(restrict_rho_shifted(Phi, propagate(b2, 2)).expanded() == Phi.expanded());
    }
    SUBCASE("dimension polynomials restrict to dimension polynomials") {
        for (auto [l, n, k] : std::vector<std::tuple<Label, int, int>>{{Label::A, 1, 3}, {Label::B, 2, 3}, {Label::BC, 1, 3}}) {
            PropagationPair p = propagate(build_root_system({l, n}), k);
            RhoShiftedSkew dk = op_T_inv(Poly::constant(p.large.ambient_dim, 1), WeylGroup(p.large, true), rho(p.large));
            RhoShiftedSkew dn = op_T_inv(Poly::constant(p.small.ambient_dim, 1), WeylGroup(p.small, true), rho(p.small));
            CHECK(restrict_rho_shifted(dk, p).expanded() == dn.expanded());
        }
    }
    SUBCASE("every target has a preimage") {
        std::mt19937_64 rng(47);
        for (auto [l, n, k] : std::vector<std::tuple<Label, int, int>>{{Label::A, 2, 3}, {Label::B, 2, 3}, {Label::BC, 1, 2}}) {
            PropagationPair p = propagate(build_root_system({l, n}), k);
            WeylGroup gn(p.small, true);
            RhoShiftedSkew Psi = op_T_inv(random_invariant(invariant_generators(gn), 4, rng), gn, rho(p.small));
            RhoShiftedSkew lifted = rho_shifted_lift(Psi, p);
            CHECK(restrict_rho_shifted(lifted, p).expanded() == Psi.expanded());
        }
    }
}

TEST_CASE("shift and exponential polynomial arithmetic") {
    Poly p = Poly::variable(2, 0) * Poly::variable(2, 1);
    QVec s = v({1, -2});
    CHECK(shift(p, s).eval(v({3, 4})) == p.eval(v({4, 2})));
    ExpPoly a = ExpPoly::exponential(v({1, 0}), p);
    ExpPoly b = a * Q(-1);
    a += b;
    CHECK(a.is_zero());
}
