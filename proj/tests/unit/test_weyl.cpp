#include "pwl/errors.hpp"
#include "pwl/weyl.hpp"

#include "support.hpp"

#include <random>

using namespace pwl;
using pwl::test::v;

namespace {

// Orthogonal map of a signed permutation, applied to the standard basis by hand.
QVec reflect_formula(const QVec& alpha, const QVec& x) {
    return sub(x, scale(alpha, Q(2) * dot(x, alpha) / norm2(alpha)));
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

QVec random_vec(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    QVec x;
    for (int i = 0; i < n; ++i) x.push_back(frac(d(rng), 1 + (d(rng) + 9) % 4));
    return x;
}

}  // namespace

TEST_CASE("reflections as signed permutations") {
    WeylElement t = reflection(v({-1, 1}));
    CHECK(t.perm == std::vector<int>{1, 0});
    CHECK(t.signs == std::vector<int>{1, 1});

    WeylElement s = reflection(v({1, 0}));
    CHECK(s.perm == std::vector<int>{0, 1});
    CHECK(s.signs == std::vector<int>{-1, 1});

    WeylElement d = reflection(v({1, 1, 0, 0}));
    CHECK(d.perm == std::vector<int>{1, 0, 2, 3});
    CHECK(d.signs == std::vector<int>{-1, -1, 1, 1});
    CHECK(act(d, v({1, 2, 3, 4})) == v({-2, -1, 3, 4}));

    CHECK(act(s, v({3, 5})) == v({-3, 5}));
    CHECK(act(WeylElement::identity(3), v({1, 2, 3})) == v({1, 2, 3}));
    CHECK_THROWS_AS(reflection(v({0, 0})), DomainError);
}

TEST_CASE("reflections agree with the formula, square to 1 and negate their root") {
    for (Family f : {Family{Label::A, 3}, Family{Label::B, 3}, Family{Label::C, 3}, Family{Label::D, 4}, Family{Label::BC, 2}}) {
        RootSystem rs = build_root_system(f);
        for (const auto& a : rs.positive) {
            WeylElement s = reflection(a);
            CHECK(s.compose(s).is_identity());
            CHECK(act(s, a) == neg(a));
            for (int i = 0; i < rs.ambient_dim; ++i) {
                QVec e = unit(static_cast<std::size_t>(rs.ambient_dim), static_cast<std::size_t>(i));
                CHECK(act(s, e) == reflect_formula(a, e));
            }
        }
    }
}

TEST_CASE("reflections permute the roots") {
    for (Family f : {Family{Label::A, 4}, Family{Label::B, 4}, Family{Label::C, 4}, Family{Label::D, 4}, Family{Label::BC, 3}}) {
        RootSystem rs = build_root_system(f);
        auto roots = pwl::test::as_set(rs.roots());
        for (const auto& a : rs.positive) {
            WeylElement s = reflection(a);
            for (const auto& r : roots) CHECK(roots.count(act(s, r)) == 1);
        }
    }
}

TEST_CASE("group orders match enumeration") {
    for (int k = 1; k <= 5; ++k) {
        WeylGroup a(build_root_system({Label::A, k}), false);
        CHECK(a.enumerate().size() == factorial(k + 1));
        CHECK(a.order() == factorial(k + 1));
    }
    for (int k = 2; k <= 5; ++k) {
        WeylGroup b(build_root_system({Label::B, k}), false);
        CHECK(b.enumerate().size() == (1ULL << k) * factorial(k));
    }
    for (int k = 3; k <= 5; ++k) CHECK(WeylGroup(build_root_system({Label::C, k}), false).enumerate().size() == (1ULL << k) * factorial(k));
    for (int k = 4; k <= 5; ++k) {
        CHECK(WeylGroup(build_root_system({Label::D, k}), false).enumerate().size() == (1ULL << (k - 1)) * factorial(k));
        CHECK(WeylGroup(build_root_system({Label::D, k}), true).enumerate().size() == (1ULL << k) * factorial(k));
    }
    CHECK(WeylGroup(build_root_system({Label::A, 1}), false).enumerate().size() == 2);
    CHECK(WeylGroup(build_root_system({Label::B, 3}), false).enumerate().size() == 48);
    CHECK(WeylGroup(build_root_system({Label::D, 4}), false).enumerate().size() == 192);
    CHECK(WeylGroup(build_root_system({Label::D, 4}), true).enumerate().size() == 384);
}

TEST_CASE("enumeration is canonical, duplicate free and closed") {
    std::mt19937_64 rng(7);
    for (auto [f, ext] : std::vector<std::pair<Family, bool>>{{{Label::A, 3}, false}, {{Label::B, 3}, false}, {{Label::D, 4}, false}, {{Label::D, 4}, true}, {{Label::C, 4}, false}}) {
        WeylGroup g(build_root_system(f), ext);
        auto els = g.enumerate();
        CHECK(std::is_sorted(els.begin(), els.end()));
        CHECK(std::adjacent_find(els.begin(), els.end()) == els.end());
        std::set<WeylElement> set(els.begin(), els.end());
        std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
        for (int i = 0; i < 1000; ++i) {
            const auto& x = els[pick(rng)];
            const auto& y = els[pick(rng)];
            CHECK(set.count(x.compose(y)) == 1);
        }
        for (const auto& x : els) CHECK(set.count(x.inverse()) == 1);
    }
}

TEST_CASE("enumeration above the rank limit is a resource error") {
    WeylGroup g(build_root_system({Label::B, 6}), false);
    CHECK_THROWS_AS(g.enumerate(5), ResourceError);
}

TEST_CASE("orbit-stabilizer") {
    std::mt19937_64 rng(11);
    for (Family f : {Family{Label::A, 3}, Family{Label::B, 3}, Family{Label::D, 4}, Family{Label::C, 3}}) {
        WeylGroup g(build_root_system(f), false);
        auto els = g.enumerate();
        for (int trial = 0; trial < 5; ++trial) {
            QVec x = random_vec(g.dim(), rng);
            if (trial == 0) x = zeros(static_cast<std::size_t>(g.dim()));
            if (trial == 1) { x = zeros(static_cast<std::size_t>(g.dim())); x[0] = 1; }
            std::set<QVec> orbit;
            std::size_t stab = 0;
            for (const auto& w : els) {
                QVec y = act(w, x);
                orbit.insert(y);
                if (y == x) ++stab;
            }
            CHECK(orbit.size() * stab == els.size());
        }
    }
}

TEST_CASE("the action preserves inner products") {
    std::mt19937_64 rng(3);
    WeylGroup g(build_root_system({Label::D, 4}), true);
    for (const auto& w : g.enumerate()) {
        QVec x = random_vec(4, rng), y = random_vec(4, rng);
        CHECK(dot(act(w, x), act(w, y)) == dot(x, y));
    }
}

TEST_CASE("diagram involution") {
    CHECK(diagram_involution(build_root_system({Label::B, 3})).is_identity());
    RootSystem d4 = build_root_system({Label::D, 4});
    WeylElement s = diagram_involution(d4);
    CHECK(s.signs == std::vector<int>{-1, 1, 1, 1});
    CHECK(s.compose(s).is_identity());
    CHECK(act(s, d4.simple[0]) == d4.simple[1]);
    CHECK(act(s, d4.simple[1]) == d4.simple[0]);
    for (std::size_t i = 2; i < d4.simple.size(); ++i) CHECK(act(s, d4.simple[i]) == d4.simple[i]);

    PropagationPair p = propagate(d4, 5);
    WeylElement s5 = diagram_involution(p.large);
    CHECK(restrict_element(s5, p) == s);
}

TEST_CASE("sigma normalizes W(D4) and W~ = W u W sigma") {
    RootSystem d4 = build_root_system({Label::D, 4});
    WeylGroup w(d4, false), wt(d4, true);
    WeylElement s = diagram_involution(d4);
    auto els = w.enumerate();
    std::set<WeylElement> base(els.begin(), els.end());
    std::set<WeylElement> both = base;
    for (const auto& x : els) {
        CHECK(base.count(s.compose(x).compose(s)) == 1);
        CHECK(base.count(x.compose(s)) == 0);
        both.insert(x.compose(s));
    }
    auto ext = wt.enumerate();
    CHECK(both == std::set<WeylElement>(ext.begin(), ext.end()));
}

TEST_CASE("stabilizer of span(f1) in the rank-3 hyperoctahedral group") {
    // BC carries the same signed-permutation group as B and admits rank 1.
    PropagationPair q = propagate(build_root_system({Label::BC, 1}), 3);
    WeylGroup g(q.large, true);
    auto stab = stabilizer(g, q);
    // perm fixes index 0; signs arbitrary; the other two coordinates permute freely.
    std::size_t expected = 0;
    for (const auto& w : g.enumerate())
        if (w.perm[0] == 0) ++expected;
    CHECK(stab.size() == expected);
    CHECK(stab.size() == 16);
    std::set<WeylElement> restricted;
    for (const auto& w : stab) restricted.insert(restrict_element(w, q));
    CHECK(restricted.size() == 2);
}

TEST_CASE("stabilizer of the full space is the whole group") {
    RootSystem b2 = build_root_system({Label::B, 2});
    WeylGroup g(b2, false);
    CHECK(stabilizer(g, propagate(b2, 2)).size() == g.order());
}

TEST_CASE("restriction theorem certificates") {
    RestrictionCertificate a = verify_restriction_theorem(propagate(build_root_system({Label::A, 2}), 3));
    CHECK(a.ok);
    CHECK(a.target_order == 6);
    CHECK(a.w_restricted_order == 6);

    RestrictionCertificate d = verify_restriction_theorem(propagate(build_root_system({Label::D, 4}), 5));
    CHECK(d.ok);
    CHECK(d.target_order == 384);
    CHECK(d.w_restricted_order == 384);

    RestrictionCertificate b = verify_restriction_theorem(propagate(build_root_system({Label::B, 2}), 2));
    CHECK(b.ok);
    CHECK(b.target_order == 8);
}

TEST_CASE("restricted stabilizer equals W~_n, by brute force") {
    for (auto [l, n, k] : std::vector<std::tuple<Label, int, int>>{{Label::A, 1, 3}, {Label::B, 2, 4}, {Label::C, 3, 4}, {Label::D, 4, 5}, {Label::BC, 1, 3}}) {
        PropagationPair p = propagate(build_root_system({l, n}), k);
        WeylGroup wk(p.large, false), wn(p.small, true);
        std::set<WeylElement> restricted;
        for (const auto& w : stabilizer(wk, p)) restricted.insert(restrict_element(w, p));
        auto target = wn.enumerate();
        CHECK(restricted == std::set<WeylElement>(target.begin(), target.end()));
    }
}
