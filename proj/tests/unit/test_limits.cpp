#include "pwl/errors.hpp"
#include "pwl/json_io.hpp"
#include "pwl/limits.hpp"

#include "support.hpp"

#include <cmath>
#include <random>

using namespace pwl;

namespace {

struct UnitProvider : CProvider {
    Q step_squared(int, int, const std::vector<int>&) const override { return 1; }
};

RadicalData singleton(int rank, const std::vector<int>& I, const Q& a) {
    RadicalData d;
    d.rank = rank;
    d.coeffs[I] = SqrtQ{a, 1};
    return d;
}

}  // namespace

TEST_CASE("towers") {
    PropagationTower t(Label::B, {2, 3, 5});
    CHECK(t.has_level(3));
    CHECK_FALSE(t.has_level(4));
    CHECK(t.path(2, 5) == std::vector<int>{3, 5});
    CHECK(t.pair(2, 5).rank_large() == 5);
    CHECK_THROWS_AS(PropagationTower(Label::D, {3, 4}), DomainError);
}

TEST_CASE("projections of coherent elements") {
    PropagationTower t(Label::B, {2, 3, 4, 5});
    CoherentElement e{2, power_sum(2, 0, 2, 2), LiftRule::Generator};
    CHECK(values_equal(project(e, t, 2), e.base_value));
    CoherentElement top{5, project(e, t, 5), LiftRule::Generator};
    CHECK(values_equal(project(top, t, 3), project(e, t, 3)));
    CHECK(values_equal(project(e, t, 4), TowerValue{power_sum(4, 0, 4, 2)}));
    for (int l : {2, 3, 4, 5}) CHECK_FALSE(is_zero_value(project(e, t, l)));

    FourierData f(2);
    f.set({1, 2}, 3);
    CoherentElement pad{2, f, LiftRule::Padding};
    FourierData up = std::get<FourierData>(project(pad, t, 4));
    CHECK(up.at({1, 2, 0, 0}) == 3);
    CHECK(up.coeffs.size() == 1);
}

TEST_CASE("compositions along towers") {
    CHECK(compose_check(PropagationTower(Label::A, {2, 3, 4}), MapKind::PFlat, 3, 1).ok);
    CHECK(compose_check(PropagationTower(Label::B, {2, 3, 4}), MapKind::PRho, 2, 2).ok);
    CHECK(compose_check(PropagationTower(Label::A, {1, 2, 3}), MapKind::Ckn, 3, 3).ok);
    CHECK(compose_check(PropagationTower(Label::A, {1, 2, 3}), MapKind::L, 3, 4).ok);
    CHECK(compose_check(PropagationTower(Label::C, {3, 4, 5}), MapKind::L, 3, 5).ok);
}

TEST_CASE("L with the unit provider on an identity step is the identity") {
    PropagationTower t(Label::A, {2});
    LevelDegree deg = group_case_degree(Label::A);
    RadicalData d = singleton(2, {1, 1}, frac(2, 3));
    CHECK(L_map(d, t, 2, 2, UnitProvider{}, deg) == d);
}

TEST_CASE("group-case scaling factor is one with the unitary degree") {
    PropagationTower t(Label::A, {1, 2, 3});
    GroupCaseProvider p(Label::A);
    LevelDegree deg = group_case_degree(Label::A);
    for (const auto& I : index_box(1, 4)) {
        RadicalData d = singleton(1, I, 1);
        RadicalData out = L_map(d, t, 1, 3, p, deg);
        REQUIRE(out.coeffs.size() == 1);
        CHECK(out.coeffs.begin()->second.signed_square() == 1);
    }
}

TEST_CASE("provider steps are ratios of dimensions") {
    GroupCaseProvider p(Label::A);
    // nu = omega_1 of SU(3) restricts to omega_1 of SU(2): 2 / 3.
    CHECK(p.step_squared(2, 1, {1, 0}) == frac(2, 3));
    CHECK(p.unitary_dim(2, {1, 1}) == 8);
    PropagationTower t(Label::A, {1, 2, 3});
    CHECK(chain_squared(t, p, 3, 1, {1}) == frac(2, 4));
}

TEST_CASE("nu is padding") {
    RadicalData d = singleton(2, {1, 0}, 1);
    RadicalData out = nu_map(d, 3);
    CHECK(out.rank == 3);
    CHECK(out.coeffs.count({1, 0, 0}) == 1);
    CHECK(nu_map(d, 2) == d);
}

TEST_CASE("eta commutes with nu and L") {
    for (Label l : {Label::A, Label::B, Label::C}) {
        std::vector<int> levels = l == Label::C ? std::vector<int>{3, 4, 5} : std::vector<int>{2, 3, 4};
        CommutationCertificate c = eta_nu_check(PropagationTower(l, levels), 4, 9);
        CHECK(c.ok);
        CHECK(c.checks > 0);
    }
}

TEST_CASE("ell2d norm of radical data") {
    LevelDegree deg = group_case_degree(Label::A);
    RadicalData d = singleton(1, {2}, 1);
    CHECK(ell2d_norm(d, 1, deg) == 3);
    CHECK(ell2d_norm(d, 1, group_plancherel_degree(Label::A)) == 9);
    RadicalData r = RadicalData::from([] {
        FourierData f(1);
        f.set({2}, frac(-1, 2));
        return f;
    }());
    CHECK(ell2d_norm(r, 1, deg) == frac(3, 4));
}

TEST_CASE("projection oracle in SU(3) matches the provider") {
    GroupCaseProvider p(Label::A);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            ProjectionOracle o = su2_su3_projection_oracle(a, b);
            CHECK(o.dim_V == doctest::Approx((a + 1) * (b + 1) * (a + b + 2) / 2.0));
            CHECK(o.dim_W == doctest::Approx(a + 1));
            CHECK(std::abs(o.c_oracle * o.c_oracle - to_double(p.step_squared(2, 1, {a, b}))) < 1e-12);
            CHECK(std::abs(o.c_oracle - o.c_provider) < 1e-12);
        }
}

TEST_CASE("map kinds and lift rules parse") {
    for (MapKind k : {MapKind::PFlat, MapKind::PRho, MapKind::Ckn, MapKind::L}) CHECK(parse_map_kind(map_kind_name(k)) == k);
    CHECK(parse_lift_rule(lift_rule_name(LiftRule::Padding)) == LiftRule::Padding);
    CHECK_THROWS_AS(parse_map_kind("nope"), DomainError);
}

TEST_CASE("json round trips") {
    std::mt19937_64 rng(79);
    Poly p = random_poly(3, 4, 5, rng);
    CHECK(poly_from_json(to_json(p)) == p);
    ExpPoly e = ExpPoly::exponential(qvec({1, -2, 0}), p);
    CHECK(exppoly_from_json(to_json(e)) == e);
    FourierData f(2);
    f.set({1, 0}, frac(5, 7));
    CHECK(fourier_from_json(to_json(f)) == f);
    CHECK(q_from_json(to_json(frac(-3, 8))) == frac(-3, 8));
    CHECK(qvec_from_json(to_json(qvec({1, 2}))) == qvec({1, 2}));
    PropagationTower t(Label::B, {2, 3});
    PropagationTower back = tower_from_json(tower_to_json(t));
    CHECK(back.levels() == t.levels());
    CHECK(back.label() == t.label());

    json w = to_json(reflection(qvec({1, 1, 0})));
    CHECK(w["perm"] == json::array({2, 1, 3}));
    CHECK(w["signs"] == json::array({-1, -1, 1}));
    json fj = to_json(f);
    CHECK(fj["entries"][0]["coef"] == "5/7");
    json rs = to_json(build_root_system({Label::B, 2}));
    CHECK(rs["family"] == "B");
    CHECK(rs["mult"]["(1,0)"] == 1);
}
