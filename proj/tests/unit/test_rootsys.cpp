#include "pwl/errors.hpp"
#include "pwl/linalg.hpp"
#include "pwl/rootsys.hpp"

#include "support.hpp"

using namespace pwl;
using pwl::test::as_set;
using pwl::test::v;
using pwl::test::vq;

namespace {

// Root strings closed under reflection: generate the orbit of the simple roots
// under the simple reflections, independently of the builder's enumeration.
std::set<QVec> reflection_closure(const std::vector<QVec>& simple) {
    std::set<QVec> seen(simple.begin(), simple.end());
    std::vector<QVec> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& r : frontier)
            for (const auto& a : simple) {
                QVec img = sub(r, scale(a, Q(2) * dot(r, a) / norm2(a)));
                if (seen.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("A1 has the single pair of roots on the trace-zero line") {
    RootSystem rs = build_root_system({Label::A, 1});
    CHECK(rs.ambient_dim == 2);
    CHECK(as_set(rs.roots()) == as_set({v({-1, 1}), v({1, -1})}));
}

TEST_CASE("B2 roots and simple roots") {
    RootSystem rs = build_root_system({Label::B, 2});
    CHECK(as_set(rs.positive) == as_set({v({1, 0}), v({0, 1}), v({-1, 1}), v({1, 1})}));
    CHECK(rs.simple == std::vector<QVec>{v({1, 0}), v({-1, 1})});
}

TEST_CASE("D4 has 24 roots and the simple roots sum to f2 + f4") {
    RootSystem rs = build_root_system({Label::D, 4});
    CHECK(rs.roots().size() == 24);
    QVec s = zeros(4);
    for (const auto& a : rs.simple) s = add(s, a);
    CHECK(s == v({0, 1, 0, 1}));
}

TEST_CASE("root sets equal the reflection closure of the simple roots") {
    for (Family f : {Family{Label::A, 3}, Family{Label::B, 3}, Family{Label::C, 3}, Family{Label::D, 4},
                     Family{Label::D, 5}, Family{Label::BC, 2}}) {
        CAPTURE(label_name(f.label));
        CAPTURE(f.rank);
        RootSystem rs = build_root_system(f);
        std::set<QVec> closure = reflection_closure(rs.simple);
        if (f.label == Label::BC) {
            // Simple roots of BC generate only the indivisible roots and 2 f_j arises as a double.
            for (const auto& r : rs.roots()) CHECK((closure.count(r) == 1 || closure.count(scale(r, frac(1, 2))) == 1));
        } else {
            CHECK(closure == as_set(rs.roots()));
        }
    }
}

TEST_CASE("reduced systems") {
    SUBCASE("B3 is its own reduction") {
        RootSystem rs = build_root_system({Label::B, 3});
        auto [half, two] = reduced_systems(rs);
        CHECK(as_set(half.roots()) == as_set(rs.roots()));
        CHECK(as_set(two.roots()) == as_set(rs.roots()));
    }
    SUBCASE("BC1 splits into +-f1 and +-2f1") {
        auto [half, two] = reduced_systems(build_root_system({Label::BC, 1}));
        CHECK(as_set(half.roots()) == as_set({v({1}), v({-1})}));
        CHECK(as_set(two.roots()) == as_set({v({2}), v({-2})}));
    }
    SUBCASE("BC2 splits into B2 and C2") {
        auto [half, two] = reduced_systems(build_root_system({Label::BC, 2}));
        CHECK(as_set(half.roots()) == as_set(build_root_system_any(Label::B, 2).roots()));
        CHECK(as_set(two.roots()) == as_set(build_root_system_any(Label::C, 2).roots()));
    }
}

TEST_CASE("rho") {
    CHECK(rho(build_root_system({Label::A, 1})) == vq({frac(-1, 2), frac(1, 2)}));
    CHECK(rho(build_root_system({Label::B, 2})) == vq({frac(1, 2), frac(3, 2)}));
    RootSystem a1 = build_root_system({Label::A, 1});
    a1.set_multiplicity_by_length({{Q(2), 2}});
    CHECK(rho(a1) == v({-1, 1}));
}

TEST_CASE("rho is half the multiplicity-weighted sum of positive roots") {
    for (Family f : {Family{Label::A, 4}, Family{Label::C, 4}, Family{Label::D, 5}, Family{Label::BC, 3}}) {
        RootSystem rs = build_root_system(f);
        rs.set_multiplicity_by_length({{Q(1), 3}, {Q(4), 2}});
        QVec s = zeros(static_cast<std::size_t>(rs.ambient_dim));
        for (std::size_t i = 0; i < rs.positive.size(); ++i) s = add(s, scale(rs.positive[i], rs.mult[i]));
        CHECK(rho(rs) == scale(s, frac(1, 2)));
    }
}

TEST_CASE("highest roots") {
    HighestRoot a2 = highest_root(build_root_system({Label::A, 2}));
    CHECK(a2.root == v({-1, 0, 1}));
    CHECK(a2.coefficients == v({1, 1}));
    HighestRoot c3 = highest_root(build_root_system({Label::C, 3}));
    CHECK(c3.root == v({0, 0, 2}));
    CHECK(c3.coefficients == v({1, 2, 2}));
    CHECK(highest_root(build_root_system({Label::D, 4})).root == v({0, 0, 1, 1}));
}

TEST_CASE("highest root dominates every positive root") {
    for (Family f : {Family{Label::A, 4}, Family{Label::B, 4}, Family{Label::C, 4}, Family{Label::D, 5}}) {
        RootSystem rs = build_root_system(f);
        HighestRoot h = highest_root(rs);
        for (const auto& a : rs.positive) {
            QVec diff = simple_coordinates(rs, sub(h.root, a));
            for (const auto& c : diff) CHECK(c >= 0);
        }
    }
}

TEST_CASE("class-one fundamental weights") {
    RootSystem a1 = build_root_system({Label::A, 1});
    // <xi, a> / <a, a> = 1 forces xi = a on A1.
    CHECK(class_one_fundamental_weights(a1) == std::vector<QVec>{v({-1, 1})});
    RootSystem b2 = build_root_system({Label::B, 2});
    CHECK(class_one_fundamental_weights(b2) == std::vector<QVec>{v({1, 1}), v({0, 2})});
}

TEST_CASE("class-one weights solve the defining linear system") {
    for (Family f : {Family{Label::A, 3}, Family{Label::B, 4}, Family{Label::C, 3}, Family{Label::D, 4}}) {
        RootSystem rs = build_root_system(f);
        auto xi = class_one_fundamental_weights(rs);
        REQUIRE(xi.size() == rs.simple.size());
        for (std::size_t i = 0; i < xi.size(); ++i)
            for (std::size_t j = 0; j < xi.size(); ++j)
                CHECK(dot(xi[i], rs.simple[j]) / norm2(rs.simple[j]) == Q(i == j ? 1 : 0));
        // They lie in the span of the simple roots.
        for (const auto& x : xi) CHECK_NOTHROW(simple_coordinates(rs, x));
    }
}

TEST_CASE("Lambda+ membership") {
    RootSystem b2 = build_root_system({Label::B, 2});
    auto xi = class_one_fundamental_weights(b2);
    CHECK(lambda_plus_member(zeros(2), b2));
    CHECK(lambda_plus_member(xi[0], b2));
    CHECK_FALSE(lambda_plus_member(scale(xi[0], frac(1, 2)), b2));
}

TEST_CASE("mu_of_index") {
    RootSystem b2 = build_root_system({Label::B, 2});
    CHECK(mu_of_index({0, 0}, b2).weight == zeros(2));
    CHECK(mu_of_index({1, 0}, b2).weight == v({1, 1}));
    CHECK(mu_of_index({2, 1}, b2).weight == v({2, 4}));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(lambda_plus_member(mu_of_index({a, b}, b2).weight, b2));
}

TEST_CASE("classification table rows") {
    SpaceDescriptor ai = space_descriptor(6, 3);
    CHECK(ai.rank == 2);
    CHECK(ai.dim == 5);
    SpaceDescriptor aiii = space_descriptor(5, 0, 1, 3);
    CHECK(aiii.rank == 1);
    CHECK(aiii.dim == 6);
    CHECK(aiii.system() == "BC1");
    SpaceDescriptor su2 = space_descriptor(1, 2);
    CHECK(su2.rank == 1);
    CHECK(su2.dim == 3);
    CHECK(su2.rs.mult == std::vector<int>{2});
    CHECK(su2.group_manifold);
}

TEST_CASE("table dimensions match closed forms") {
    for (int j = 2; j <= 6; ++j) {
        CHECK(space_descriptor(1, j).dim == j * j - 1);
        CHECK(space_descriptor(6, j).dim == (j - 1) * (j + 2) / 2);
    }
    for (int p = 1; p <= 4; ++p)
        for (int q = p; q <= 5; ++q) {
            SpaceDescriptor d = space_descriptor(5, 0, p, q);
            CHECK(d.dim == 2 * p * q);
            CHECK(d.rank == p);
        }
}

TEST_CASE("propagation") {
    RootSystem b2 = build_root_system({Label::B, 2});
    CHECK(propagate(b2, 2).identity());
    PropagationPair p = propagate(b2, 4);
    CHECK(p.restrict_vec(p.large.simple[0]) == b2.simple[0]);
    CHECK(p.restrict_vec(p.large.simple[1]) == b2.simple[1]);
    // The first new simple root f3 - f2 meets the small space; the next one does not.
    CHECK(p.restrict_vec(p.large.simple[2]) == v({0, -1}));
    CHECK(is_zero(p.restrict_vec(p.large.simple[3])));

    PropagationPair a = propagate(build_root_system({Label::A, 2}), 3);
    auto xs = class_one_fundamental_weights(a.small);
    auto xl = class_one_fundamental_weights(a.large);
    for (int j = 0; j < 2; ++j) CHECK(a.restrict_vec(xl[static_cast<std::size_t>(j)]) == xs[static_cast<std::size_t>(j)]);
}

TEST_CASE("restricted class-one weights at higher levels") {
    for (auto [l, n, k] : std::vector<std::tuple<Label, int, int>>{
             {Label::A, 2, 5}, {Label::B, 2, 5}, {Label::C, 3, 5}, {Label::D, 4, 6}, {Label::BC, 1, 4}}) {
        PropagationPair p = propagate(build_root_system({l, n}), k);
        auto xs = class_one_fundamental_weights(p.small);
        auto xl = class_one_fundamental_weights(p.large);
        for (int j = 0; j < n; ++j) CHECK(p.restrict_vec(xl[static_cast<std::size_t>(j)]) == xs[static_cast<std::size_t>(j)]);
        for (int j = n; j < k; ++j) CHECK(is_zero(p.restrict_vec(xl[static_cast<std::size_t>(j)])));
    }
}

TEST_CASE("builder rejects ranks below the numbering threshold") {
    CHECK_THROWS_AS(build_root_system({Label::D, 3}), DomainError);
    CHECK_THROWS_AS(build_root_system({Label::C, 2}), DomainError);
    CHECK_NOTHROW(build_root_system_any(Label::D, 3));
}

TEST_CASE("frac reduces and parse_rational accepts decimals") {
    CHECK(to_string(frac(4, 6)) == "2/3");
    CHECK(parse_rational("-0.25") == frac(-1, 4));
    CHECK(parse_rational("6/4") == frac(3, 2));
}

TEST_CASE("determinant of a random integer matrix matches cofactor expansion") {
    QMatrix m = QMatrix::from_rows({v({2, -1, 0}), v({1, 3, 4}), v({0, 5, -2})});
    Q cof = Q(2) * (Q(3) * -2 - Q(4) * 5) - Q(-1) * (Q(1) * -2 - Q(4) * 0) + Q(0);
    CHECK(determinant(m) == cof);
}
