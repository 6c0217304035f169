#include "pwl/errors.hpp"
#include "pwl/geometry.hpp"
#include "pwl/weyl.hpp"

#include "support.hpp"

#include <random>

using namespace pwl;
using pwl::test::v;
using pwl::test::vq;

namespace {

std::set<QVec> normals(const Polytope& p) {
    auto n = normalized_normals(p);
    return {n.begin(), n.end()};
}

QVec random_point(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-30, 30);
    QVec x;
    for (int i = 0; i < n; ++i) x.push_back(frac(d(rng), 60));
    return x;
}

}  // namespace

TEST_CASE("Omega from the roots") {
    Polytope a1 = omega(build_root_system({Label::A, 1}));
    CHECK(a1.contains(vq({frac(-1, 5), frac(1, 5)})));
    CHECK_FALSE(a1.contains(vq({frac(-1, 4), frac(1, 4)})));

    Polytope b2 = omega(build_root_system({Label::B, 2}));
    // One inequality per root, both signs.
    CHECK(b2.ineqs.size() == 8);

    // C3: 2 f_j gives |x_j| < 1/4 and the short roots give |x_i +- x_j| < 1/2.
    Polytope c3 = omega(build_root_system({Label::C, 3}));
    std::set<QVec> expect;
    for (int j = 0; j < 3; ++j) expect.insert(scale(unit(3, static_cast<std::size_t>(j)), 2));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            expect.insert(add(unit(3, static_cast<std::size_t>(i)), unit(3, static_cast<std::size_t>(j))));
            expect.insert(sub(unit(3, static_cast<std::size_t>(j)), unit(3, static_cast<std::size_t>(i))));
        }
    for (const auto& e : std::set<QVec>(expect)) expect.insert(neg(e));
    CHECK(normals(c3) == expect);
}

TEST_CASE("Omega* closed forms") {
    Polytope b3 = omega_star(build_root_system({Label::B, 3}));
    CHECK(b3.contains(vq({frac(1, 5), frac(-1, 5), frac(1, 5)})));
    CHECK_FALSE(b3.contains(vq({frac(1, 4), 0, 0})));
    CHECK(polytope_equal(b3, omega_star_closed(build_root_system({Label::B, 3}))));

    Polytope d4 = omega_star(build_root_system({Label::D, 4}));
    CHECK(polytope_equal(d4, omega_star_closed(build_root_system({Label::D, 4}))));
    CHECK(d4.contains(vq({frac(1, 9), frac(1, 9), 0, 0})));
    CHECK_FALSE(d4.contains(vq({frac(1, 8), frac(1, 8), 0, 0})));

    RootSystem a2 = build_root_system({Label::A, 2});
    CHECK(polytope_equal(omega_star(a2), omega(a2)));
}

TEST_CASE("membership") {
    Polytope b2 = omega_star(build_root_system({Label::B, 2}));
    CHECK(b2.contains(zeros(2)));
    CHECK(b2.contains(vq({frac(1, 5), 0})));
    CHECK_FALSE(b2.contains(vq({frac(1, 4), 0})));
    for (Family f : {Family{Label::A, 3}, Family{Label::C, 3}, Family{Label::D, 5}, Family{Label::BC, 2}})
        CHECK(omega_star(build_root_system(f)).contains(zeros(static_cast<std::size_t>(build_root_system(f).ambient_dim))));
}

TEST_CASE("membership is Weyl invariant") {
    std::mt19937_64 rng(73);
    for (Family f : {Family{Label::B, 3}, Family{Label::C, 3}, Family{Label::D, 4}, Family{Label::A, 3}}) {
        RootSystem rs = build_root_system(f);
        Polytope om = omega(rs), os = omega_star(rs);
        WeylGroup g(rs, true);
        auto els = g.enumerate();
        for (int t = 0; t < 20; ++t) {
            QVec x = random_point(rs.ambient_dim, rng);
            if (f.label == Label::A) {
                Q mean = sum(x) / Q(rs.ambient_dim);
                for (auto& c : x) c -= mean;
            }
            const auto& w = els[static_cast<std::size_t>(t * 7) % els.size()];
            CHECK(om.contains(x) == om.contains(act(w, x)));
            CHECK(os.contains(x) == os.contains(act(w, x)));
        }
    }
}

TEST_CASE("Omega* lies in Omega") {
    for (Family f : {Family{Label::A, 2}, Family{Label::A, 4}, Family{Label::B, 4}, Family{Label::C, 4}, Family{Label::D, 5}, Family{Label::BC, 3}}) {
        RootSystem rs = build_root_system(f);
        CHECK(polytope_contains(omega(rs), omega_star(rs)));
    }
}

TEST_CASE("Omega* restricts along propagation") {
    for (auto [l, n, k] : std::vector<std::tuple<Label, int, int>>{{Label::B, 2, 4}, {Label::D, 4, 5}, {Label::A, 2, 4}, {Label::C, 3, 5}, {Label::BC, 1, 3}}) {
        PropagationPair p = propagate(build_root_system({l, n}), k);
        IntersectionCertificate c = check_intersection(p);
        CHECK(c.ok);
        CHECK(polytope_equal(restrict_polytope(omega_star(p.large), p), omega_star(p.small)));
        if (l == Label::A) CHECK(c.a_chain_ok);
    }
}

TEST_CASE("vertices of Omega for A2 are the scaled coweights") {
    RootSystem a2 = build_root_system({Label::A, 2});
    auto vs = vertices(omega(a2));
    CHECK(vs.size() == 6);
    for (const auto& x : vs) {
        Q m = 0;
        for (const auto& a : a2.positive) m = std::max(m, Q(abs(dot(a, x))));
        CHECK(m == frac(1, 2));
    }
}

TEST_CASE("inradius") {
    for (int n = 2; n <= 7; ++n) {
        Radius r = inradius(omega_star(build_root_system({Label::B, n})));
        CHECK(r.rational);
        CHECK(r.value == frac(1, 4));
    }
    Radius d = inradius(omega_star(build_root_system({Label::D, 5})));
    CHECK(d.squared == frac(1, 32));
    CHECK_FALSE(d.rational);
    CHECK(inradius(omega_star(build_root_system({Label::C, 4}))).value == frac(1, 4));
}

TEST_CASE("circumradius of Omega by vertex enumeration") {
    for (Family f : {Family{Label::A, 2}, Family{Label::B, 2}, Family{Label::B, 3}, Family{Label::C, 3}}) {
        RootSystem rs = build_root_system(f);
        Q best = 0;
        for (const auto& x : vertices(omega(rs))) best = std::max(best, norm2(x));
        CHECK(omega_circumradius(rs).squared == best);
    }
}

TEST_CASE("injectivity radii") {
    CHECK(injectivity_radius_sigma2(Label::A).squared == 2);
    CHECK(injectivity_radius_sigma2(Label::C).squared == 2);
    CHECK(injectivity_radius_sigma2(Label::B).squared == 4);
    CHECK(injectivity_radius_sigma2(Label::D).squared == 4);
    CHECK(injectivity_radius(space_descriptor(1, 5)).squared == 2);
    CHECK(sigma2_type(build_root_system({Label::BC, 2})) == Label::C);
}

TEST_CASE("disk remark") {
    auto holds = [](Label l, int r) { return disk_remark(build_root_system({l, r})).holds; };
    CHECK(holds(Label::A, 1));
    CHECK(holds(Label::B, 2));
    CHECK(holds(Label::D, 4));
    CHECK(holds(Label::BC, 1));
    CHECK_FALSE(holds(Label::A, 2));
    CHECK_FALSE(holds(Label::C, 3));
    CHECK_FALSE(holds(Label::D, 5));
}

TEST_CASE("unbounded support is an error") {
    Polytope half;
    half.dim = 2;
    half.ineqs.push_back({v({1, 0}), 1});
    CHECK_THROWS(half.support(v({0, 1})));
    CHECK(half.support(v({1, 0})) == 1);
}
