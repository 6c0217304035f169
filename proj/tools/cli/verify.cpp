#include "context.hpp"

#include "pwl/errors.hpp"
#include "pwl/suites.hpp"

#include <memory>

namespace pwl::cli {

namespace {

struct Opts {
    std::string family;
    int rank = 0;
    int from = 0;
    int to = 0;
    std::string levels;
    int samples = 20;
    int degree = 6;
    int bound = 2;
    bool extended = false;
    double tol = 1e-12;
};

void family_pair(CLI::App* s, Opts& o) {
    s->add_option("--family", o.family, "A, B, C, D or BC")->required();
    s->add_option("--from", o.from, "Rank of the smaller system")->required();
    s->add_option("--to", o.to, "Rank of the larger system")->required();
}

void family_rank(CLI::App* s, Opts& o) {
    s->add_option("--family", o.family, "A, B, C, D or BC")->required();
    s->add_option("--rank", o.rank, "Rank")->required();
}

void tower_flags(CLI::App* s, Opts& o) {
    s->add_option("--family", o.family, "Tower family")->required();
    s->add_option("--levels", o.levels, "Comma-separated ranks")->required();
}

PropagationTower tower(const Opts& o) { return PropagationTower(family_of(o.family), parse_ints(o.levels)); }

}  // namespace

void add_verify(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("verify", "Named verification suites; a failed certificate exits with 3");
    v->fallthrough();
    v->require_subcommand(1);

    auto o = std::make_shared<Opts>();
    auto* rw = leaf(v, ctx, "restriction-weyl", "Restricted stabilizer of a_n equals W~_n", [o, &ctx]() -> json {
        SuiteReport r = restriction_weyl_suite(family_of(o->family), o->from, o->to, ctx.max_rank);
        return {{"order", r.detail.at("order")}, {"status", status(r.ok)}};
    });
    family_pair(rw, *o);

    auto o2 = std::make_shared<Opts>();
    auto* lr = leaf(v, ctx, "lift-roundtrip", "Random invariants lift and restrict back", [o2, &ctx]() -> json {
        return lift_roundtrip_suite(family_of(o2->family), o2->from, o2->to, o2->samples, o2->degree, ctx.seed).to_json();
    });
    family_pair(lr, *o2);
    lr->add_option("--samples", o2->samples, "Random invariants");
    lr->add_option("--max-degree", o2->degree, "Degree bound of the random invariants");

    auto o3 = std::make_shared<Opts>();
    auto* rs = leaf(v, ctx, "rais", "F = sum P_i Phi_i for random F", [o3, &ctx]() -> json {
        WeylGroup g(system_of(o3->family, o3->rank), o3->extended);
        return rais_suite(g, o3->samples, o3->degree, ctx.seed).to_json();
    });
    family_rank(rs, *o3);
    rs->add_flag("--extended", o3->extended, "Extended group");
    rs->add_option("--samples", o3->samples, "Random polynomials");
    rs->add_option("--max-degree", o3->degree, "Degree bound");

    auto o4 = std::make_shared<Opts>();
    auto* tc = leaf(v, ctx, "t-calculus", "T and T^{-1} are mutually inverse", [o4, &ctx]() -> json {
        return t_calculus_suite(system_of(o4->family, o4->rank), o4->samples, ctx.seed).to_json();
    });
    family_rank(tc, *o4);
    tc->add_option("--samples", o4->samples, "Random cases per direction");

    auto o5 = std::make_shared<Opts>();
    auto* rr = leaf(v, ctx, "rho-restriction", "Surjectivity of the rho-shifted restriction along a tower", [o5, &ctx]() -> json {
        return rho_restriction_suite(tower(*o5), o5->samples, ctx.seed).to_json();
    });
    tower_flags(rr, *o5);
    rr->add_option("--samples", o5->samples, "Random targets");

    leaf(v, ctx, "injectivity", "Injectivity radius table", []() -> json { return injectivity_suite().to_json(); });

    auto o6 = std::make_shared<Opts>();
    auto* os = leaf(v, ctx, "omega-star", "Closed forms, Omega* in Omega, inradius", [o6]() -> json {
        return omega_star_suite(build_root_system({family_of(o6->family), o6->rank})).to_json();
    });
    family_rank(os, *o6);

    auto o7 = std::make_shared<Opts>();
    auto* is = leaf(v, ctx, "intersection", "Omega*_n = Omega*_k restricted to a_n", [o7]() -> json {
        return intersection_suite(family_of(o7->family), o7->from, o7->to).to_json();
    });
    family_pair(is, *o7);

    auto o8 = std::make_shared<Opts>();
    auto* tb = leaf(v, ctx, "table", "Rank and dimension of every table row", [o8]() -> json {
        return table_suite(o8->rank > 0 ? o8->rank : 6, o8->bound > 2 ? o8->bound : 5).to_json();
    });
    tb->add_option("--max-j", o8->rank, "Largest j");
    tb->add_option("--max-pq", o8->bound, "Largest p and q");

    auto o9 = std::make_shared<Opts>();
    auto* si = leaf(v, ctx, "stronger-identity", "Random central data on U x U / U", [o9, &ctx]() -> json {
        return stronger_identity_suite(family_of(o9->family), o9->rank, o9->samples, ctx.seed).to_json();
    });
    family_rank(si, *o9);
    si->add_option("--samples", o9->samples, "Random coefficient sets");

    auto o10 = std::make_shared<Opts>();
    auto* br = leaf(v, ctx, "branching", "Group-case branching multiplicities for |I| <= bound", [o10]() -> json {
        return branching_suite(family_of(o10->family), o10->from, o10->to, o10->bound).to_json();
    });
    family_pair(br, *o10);
    br->add_option("--bound", o10->bound, "Largest |I|");

    auto o11 = std::make_shared<Opts>();
    auto* lm = leaf(v, ctx, "limits", "L composition, eta-nu commutation, ell2d preservation", [o11, &ctx]() -> json {
        return limits_suite(tower(*o11), o11->samples, ctx.seed).to_json();
    });
    tower_flags(lm, *o11);
    lm->add_option("--samples", o11->samples, "Random inputs per level pair");

    auto o12 = std::make_shared<Opts>();
    auto* orc = leaf(v, ctx, "oracle", "Projection oracle against the group-case provider", [o12]() -> json {
        return oracle_suite(o12->bound, o12->tol).to_json();
    });
    o12->bound = 4;
    orc->add_option("--max-sum", o12->bound, "Largest a + b");
    orc->add_option("--tol", o12->tol, "Absolute tolerance");

    auto o13 = std::make_shared<Opts>();
    auto* nv = leaf(v, ctx, "nonvanishing", "Coherent extension of nonzero base values", [o13, &ctx]() -> json {
        return nonvanishing_suite(tower(*o13), ctx.seed).to_json();
    });
    tower_flags(nv, *o13);
}

}  // namespace pwl::cli
