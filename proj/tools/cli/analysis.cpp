#include "context.hpp"

#include "pwl/errors.hpp"
#include "pwl/suites.hpp"

#include <cmath>
#include <memory>

namespace pwl::cli {

namespace {

struct Opts {
    std::string family;
    int rank = 0;
    int from = 0;
    int to = 0;
    std::string index;
    std::string point;
    std::string levels;
    std::string kind = "L";
    std::string group;
    int n = 0;
    int row = 0, j = 0, p = 0, q = 0;
    int bound = 2;
    int samples = 10;
    int a = 0, b = 0;
    bool star = true;
    bool use_omega = false;
    bool group_case = false;
};

void family_rank(CLI::App* s, Opts& o) {
    s->add_option("--family", o.family, "A, B, C, D or BC")->required();
    s->add_option("--rank", o.rank, "Rank")->required();
}

void family_pair(CLI::App* s, Opts& o) {
    s->add_option("--family", o.family, "A, B, C, D or BC")->required();
    s->add_option("--from", o.from, "Rank of the smaller system")->required();
    s->add_option("--to", o.to, "Rank of the larger system")->required();
}

QVec weight_of(const RootSystem& U, const std::vector<int>& I) {
    if (static_cast<int>(I.size()) != U.rank()) throw DomainError("index length does not match rank");
    auto om = fundamental_weights(U);
    QVec nu = zeros(static_cast<std::size_t>(U.ambient_dim));
    for (std::size_t j = 0; j < I.size(); ++j) nu = add(nu, scale(om[j], Q(I[j])));
    return nu;
}

FourierData input_fourier(Context& ctx) {
    const json& j = ctx.input();
    return fourier_from_json(j.contains("fourier") ? j.at("fourier") : j);
}

PropagationTower tower_of(Context& ctx, const Opts& o) {
    if (!o.family.empty()) {
        if (o.levels.empty()) throw UsageError("--family needs --levels");
        return PropagationTower(family_of(o.family), parse_ints(o.levels));
    }
    const json& j = ctx.input();
    return tower_from_json(j.contains("tower") ? j.at("tower") : j);
}

json radius_json(const Radius& r) {
    if (r.rational) return {{"S", to_json(r.value)}, {"units", "pi"}};
    return {{"S_squared", to_json(r.squared)}, {"units", "pi^2"}};
}

Label group_label(const std::string& g, int n) {
    if (g == "SU") return Label::A;
    if (g == "Sp") return Label::C;
    if (g == "SO") return n % 2 == 1 ? Label::B : Label::D;
    throw DomainError("unknown compact group " + g + " (use SU, SO or Sp)");
}

}  // namespace

void add_fourier(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("fourier", "Compact-side Fourier calculus");
    v->fallthrough();
    v->require_subcommand(1);

    auto o = std::make_shared<Opts>();
    auto* dim = leaf(v, ctx, "dim", "Dimension of V_nu, nu = sum I_j omega_j", [o]() -> json {
        RootSystem U = system_of(o->family, o->rank);
        QVec nu = weight_of(U, parse_ints(o->index));
        return {{"highest_weight", to_json(nu)}, {"dim", to_json(dim_polynomial(U).eval(nu))},
                {"freudenthal", freudenthal_dimension(U, nu)}};
    });
    family_rank(dim, *o);
    dim->add_option("--index", o->index, "Comma-separated I")->required();

    auto o2 = std::make_shared<Opts>();
    auto* wts = leaf(v, ctx, "weights", "Weight multiplicities of V_nu", [o2]() -> json {
        RootSystem U = system_of(o2->family, o2->rank);
        json a = json::array();
        for (const auto& [w, m] : weight_multiplicities(U, weight_of(U, parse_ints(o2->index))))
            a.push_back({{"weight", to_json(w)}, {"mult", m}});
        return {{"weights", a}};
    });
    family_rank(wts, *o2);
    wts->add_option("--index", o2->index, "Comma-separated I")->required();

    auto o3 = std::make_shared<Opts>();
    auto* si = leaf(v, ctx, "stronger-identity", "S_rho(Q f) = T(F f) for central data on U x U / U", [o3, &ctx]() -> json {
        GroupManifold gm = group_manifold(family_of(o3->family), o3->rank);
        if (ctx.inline_json.empty() && ctx.in_file.empty()) {
            SuiteReport r = stronger_identity_suite(gm.U.family().label, o3->rank, o3->samples, ctx.seed);
            return r.to_json();
        }
        StrongerIdentityReport rep = stronger_identity_check(input_fourier(ctx), gm);
        json out = {{"points", rep.points}, {"dropped", rep.dropped}, {"status", status(rep.ok)}};
        if (!rep.failures.empty()) out["failures"] = rep.failures;
        return out;
    });
    family_rank(si, *o3);
    si->add_option("--samples", o3->samples, "Random sets when no input is given");

    auto o4 = std::make_shared<Opts>();
    auto* qm = leaf(v, ctx, "q-map", "Central coefficients over U x U to spherical coefficients", [o4, &ctx]() -> json {
        GroupManifold gm = group_manifold(family_of(o4->family), o4->rank);
        return {{"fourier", to_json(q_map(input_fourier(ctx), gm))}};
    });
    family_rank(qm, *o4);

    auto o5 = std::make_shared<Opts>();
    auto* ckn = leaf(v, ctx, "ckn", "Coefficients Phi(iota(mu_I) - rho_k + iota(rho_n)) on an index box", [o5, &ctx]() -> json {
        PropagationPair pr = pair_of(o5->family, o5->from, o5->to);
        const json& j = ctx.input();
        Poly Phi = poly_from_json(j.contains("poly") ? j.at("poly") : j);
        CknResult res = c_k_n(Phi, pr, index_box(pr.rank_small(), o5->bound));
        return {{"fourier", to_json(res.data)}, {"extension", to_json(res.extension)}};
    });
    family_pair(ckn, *o5);
    ckn->add_option("--bound", o5->bound, "Largest index entry");

    auto o6 = std::make_shared<Opts>();
    auto* br = leaf(v, ctx, "branch", "Multiplicity of the restricted highest weight", [o6]() -> json {
        Label l = family_of(o6->family);
        std::vector<int> I = parse_ints(o6->index);
        if (o6->group_case) {
            GroupManifold gk = group_manifold(l, o6->to), gn = group_manifold(l, o6->from);
            return {{"multiplicity", group_branch_multiplicity(I, gk, gn)}, {"case", "group"}};
        }
        RootSystem Uk = build_root_system_any(l, o6->to), Un = build_root_system_any(l, o6->from);
        PropagationPair pr{Un, Uk};
        QVec nu = weight_of(Uk, I);
        return {{"restricted_weight", to_json(pr.restrict_vec(nu))},
                {"multiplicity", branch_multiplicity(nu, pr)}, {"case", "compact group"}};
    });
    family_pair(br, *o6);
    br->add_option("--index", o6->index, "Comma-separated I at the larger level")->required();
    br->add_flag("--group", o6->group_case, "Spherical representation of U x U");

    auto o7 = std::make_shared<Opts>();
    auto* ch = leaf(v, ctx, "character", "chi_nu(exp 2 pi i t), t in turns", [o7]() -> json {
        RootSystem U = system_of(o7->family, o7->rank);
        auto z = character_value(U, weight_of(U, parse_ints(o7->index)), parse_point(o7->point));
        return {{"re", z.real()}, {"im", z.imag()}};
    });
    family_rank(ch, *o7);
    ch->add_option("--index", o7->index, "Comma-separated I")->required();
    ch->add_option("--turns", o7->point, "Comma-separated torus point in turns")->required();
}

void add_omega(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("omega", "Polytopes Omega, Omega* and radii (lengths in units of pi)");
    v->fallthrough();
    v->require_subcommand(1);

    auto o = std::make_shared<Opts>();
    auto* poly = leaf(v, ctx, "polytope", "Inequalities of Omega* (or Omega with --omega)", [o]() -> json {
        RootSystem rs = system_of(o->family, o->rank);
        return to_json(o->use_omega ? omega(rs) : omega_star(rs));
    });
    family_rank(poly, *o);
    poly->add_flag("--omega", o->use_omega, "Omega instead of Omega*");

    auto o2 = std::make_shared<Opts>();
    auto* cont = leaf(v, ctx, "contains", "Strict membership of a point given in units of pi", [o2]() -> json {
        RootSystem rs = system_of(o2->family, o2->rank);
        Polytope p = o2->use_omega ? omega(rs) : omega_star(rs);
        return {{"contains", p.contains(parse_point(o2->point))}};
    });
    family_rank(cont, *o2);
    cont->add_option("--point", o2->point, "Comma-separated coordinates, e.g. 1/5,0")->required();
    cont->add_flag("--omega", o2->use_omega, "Omega instead of Omega*");

    auto o3 = std::make_shared<Opts>();
    auto* inr = leaf(v, ctx, "inradius", "Largest centred ball inside Omega*", [o3]() -> json {
        RootSystem rs = system_of(o3->family, o3->rank);
        return radius_json(inradius(o3->use_omega ? omega(rs) : omega_star(rs)));
    });
    family_rank(inr, *o3);
    inr->add_flag("--omega", o3->use_omega, "Omega instead of Omega*");

    auto o4 = std::make_shared<Opts>();
    auto* circ = leaf(v, ctx, "circumradius", "sup |X| over Omega", [o4]() -> json {
        return radius_json(omega_circumradius(system_of(o4->family, o4->rank)));
    });
    family_rank(circ, *o4);

    auto o5 = std::make_shared<Opts>();
    auto* inter = leaf(v, ctx, "intersection", "Omega*_n = Omega*_k restricted to a_n", [o5]() -> json {
        PropagationPair pr = make_pair(build_root_system({family_of(o5->family), o5->from}),
                                       build_root_system({family_of(o5->family), o5->to}));
        IntersectionCertificate c = check_intersection(pr);
        return {{"status", status(c.ok)},
                {"small_in_restricted", c.small_in_restricted},
                {"restricted_in_small", c.restricted_in_small},
                {"a_chain_ok", c.a_chain_ok},
                {"vertex_check_run", c.vertex_check_run},
                {"vertex_check_ok", c.vertex_check_ok}};
    });
    family_pair(inter, *o5);

    auto o6 = std::make_shared<Opts>();
    auto* inj = leaf(v, ctx, "injectivity", "Injectivity radius by compact group, table row or Sigma_2 type", [o6]() -> json {
        InjectivityRadius ir;
        if (!o6->group.empty()) {
            if (o6->n <= 0) throw UsageError("--group needs --n");
            ir = injectivity_radius_sigma2(group_label(o6->group, o6->n));
        } else if (o6->row > 0) {
            ir = injectivity_radius(space_descriptor(o6->row, o6->j, o6->p, o6->q));
        } else if (!o6->family.empty()) {
            ir = injectivity_radius_sigma2(family_of(o6->family));
        } else {
            throw UsageError("injectivity needs --group, --row or --family");
        }
        return {{"radius", ir.text}, {"squared", to_json(ir.squared)}, {"units", "pi^2"}};
    });
    inj->add_option("--group", o6->group, "SU, SO or Sp");
    inj->add_option("--n", o6->n, "Matrix size, e.g. 5 for SU(5) or 9 for SO(9)");
    inj->add_option("--row", o6->row, "Table row");
    inj->add_option("--j", o6->j, "Row parameter j");
    inj->add_option("--p", o6->p, "Row parameter p");
    inj->add_option("--q", o6->q, "Row parameter q");
    inj->add_option("--family", o6->family, "Type of Sigma_2");

    auto o7 = std::make_shared<Opts>();
    auto* disk = leaf(v, ctx, "disk", "Is Omega inside the disk of radius R/4?", [o7]() -> json {
        DiskRemark d = disk_remark(system_of(o7->family, o7->rank));
        return {{"circumradius_squared", to_json(d.circum2)}, {"quarter_radius_squared", to_json(d.quarter_injectivity2)},
                {"holds", d.holds}, {"units", "pi^2"}};
    });
    family_rank(disk, *o7);
}

void add_limits(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("limits", "Towers, coherent elements and the L-maps");
    v->fallthrough();
    v->require_subcommand(1);
    auto tower_flags = [](CLI::App* s, Opts& o) {
        s->add_option("--family", o.family, "Tower family (or give the tower as JSON input)");
        s->add_option("--levels", o.levels, "Comma-separated ranks");
    };

    auto o = std::make_shared<Opts>();
    auto* tw = leaf(v, ctx, "tower", "Systems at every level", [o, &ctx]() -> json { return tower_to_json(tower_of(ctx, *o)); });
    tower_flags(tw, *o);

    auto o2 = std::make_shared<Opts>();
    auto* pj = leaf(v, ctx, "project", "Materialize a coherent element at one level", [o2, &ctx]() -> json {
        const json& in = ctx.input();
        PropagationTower t = tower_from_json(in.at("tower"));
        CoherentElement e = element_from_json(in.at("element"));
        int level = in.at("level").get<int>();
        TowerValue val = project(e, t, level);
        return {{"level", level}, {"value", to_json(val)}, {"nonzero", !is_zero_value(val)}};
    });
    (void)pj;

    auto o3 = std::make_shared<Opts>();
    auto* cc = leaf(v, ctx, "compose", "One-step against two-step maps on every level triple", [o3, &ctx]() -> json {
        PropagationTower t = tower_of(ctx, *o3);
        MapKind k = parse_map_kind(o3->kind);
        ComposeCertificate c = compose_check(t, k, o3->samples, ctx.seed);
        json out = {{"kind", map_kind_name(k)}, {"checks", c.checks}, {"status", status(c.ok)}};
        if (!c.failures.empty()) out["failures"] = c.failures;
        return out;
    });
    tower_flags(cc, *o3);
    cc->add_option("--kind", o3->kind, "P_flat, P_rho, C_kn or L");
    cc->add_option("--samples", o3->samples, "Random inputs per triple");

    auto o4 = std::make_shared<Opts>();
    auto* lm = leaf(v, ctx, "L", "Apply L_{m,n} with the group-case provider", [o4, &ctx]() -> json {
        const json& in = ctx.input();
        PropagationTower t = tower_from_json(in.at("tower"));
        int n = in.at("from").get<int>(), m = in.at("to").get<int>();
        RadicalData d = RadicalData::from(fourier_from_json(in.at("data")));
        GroupCaseProvider prov(t.label());
        LevelDegree deg = group_case_degree(t.label());
        RadicalData img = L_map(d, t, n, m, prov, deg);
        return {{"data", to_json(img)}, {"ell2d_source", to_json(ell2d_norm(d, n, deg))},
                {"ell2d_image", to_json(ell2d_norm(img, m, deg))}};
    });
    (void)lm;

    auto o5 = std::make_shared<Opts>();
    auto* en = leaf(v, ctx, "eta-nu", "eta o nu = L o eta on random data", [o5, &ctx]() -> json {
        CommutationCertificate c = eta_nu_check(tower_of(ctx, *o5), o5->samples, ctx.seed);
        return {{"checks", c.checks}, {"status", status(c.ok)}};
    });
    tower_flags(en, *o5);
    en->add_option("--samples", o5->samples, "Random inputs per level pair");

    auto o6 = std::make_shared<Opts>();
    auto* orc = leaf(v, ctx, "oracle", "SU(2) in SU(3) projection oracle for c", [o6]() -> json {
        ProjectionOracle r = su2_su3_projection_oracle(o6->a, o6->b);
        return {{"a", r.a}, {"b", r.b}, {"dim_V", r.dim_V}, {"dim_W", r.dim_W}, {"c_oracle", r.c_oracle},
                {"c_provider", r.c_provider}, {"abs_error", std::abs(r.c_oracle - r.c_provider)}};
    });
    orc->add_option("--a", o6->a, "Degree in the dual variables")->required();
    orc->add_option("--b", o6->b, "Degree in the standard variables")->required();
}

}  // namespace pwl::cli
