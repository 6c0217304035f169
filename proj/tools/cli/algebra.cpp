#include "context.hpp"

#include "pwl/errors.hpp"

#include <algorithm>
#include <set>
#include <memory>

namespace pwl::cli {

namespace {

struct Opts {
    std::string family;
    int rank = 0;
    int from = 0;
    int to = 0;
    bool extended = false;
    bool constructive = false;
    bool full = false;
    int row = 0, j = 0, p = 0, q = 0;
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

Poly input_poly(Context& ctx) {
    const json& j = ctx.input();
    return poly_from_json(j.contains("poly") ? j.at("poly") : j);
}

ExpPoly input_exppoly(Context& ctx) {
    const json& j = ctx.input();
    return exppoly_from_json(j.contains("exppoly") ? j.at("exppoly") : j);
}

json polys(const std::vector<Poly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_json(p));
    return a;
}

}  // namespace

void add_describe(CLI::App& app, Context& ctx) {
    auto o = std::make_shared<Opts>();
    CLI::App* d = app.add_subcommand("describe", "Classical symmetric space by table row, or a root system");
    d->fallthrough();
    d->add_option("--row", o->row, "Table row 1-11");
    d->add_option("--j", o->j, "Size parameter for rows without (p, q)");
    d->add_option("--p", o->p, "p for rows 5, 8, 10");
    d->add_option("--q", o->q, "q for rows 5, 8, 10");
    d->add_option("--family", o->family, "Describe a bare root system instead");
    d->add_option("--rank", o->rank, "Rank of the bare root system");
    d->add_flag("--full", o->full, "Include class names, groups and roots");
    d->callback([&ctx, o] {
        ctx.action = [o]() -> json {
            if (!o->family.empty()) {
                if (o->rank <= 0) throw UsageError("--family needs --rank");
                RootSystem rs = system_of(o->family, o->rank);
                json out = to_json(rs);
                out["dim"] = manifold_dimension(rs);
                return out;
            }
            if (o->row == 0) throw UsageError("describe needs --row or --family");
            SpaceDescriptor sd = space_descriptor(o->row, o->j, o->p, o->q);
            json out = {{"rank", sd.rank}, {"dim", sd.dim}, {"system", sd.system()}};
            if (o->full) {
                out["cartan_class"] = sd.cartan_class;
                out["compact_group"] = sd.compact_group;
                out["isotropy"] = sd.isotropy;
                out["group_manifold"] = sd.group_manifold;
                out["root_system"] = to_json(sd.rs);
            }
            return out;
        };
    });
}

void add_weyl(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("weyl", "Weyl groups and stabilizers");
    v->fallthrough();
    v->require_subcommand(1);

    auto o = std::make_shared<Opts>();
    auto* order = leaf(v, ctx, "order", "Order of W or the extended group", [o]() -> json {
        WeylGroup g(system_of(o->family, o->rank), o->extended);
        return {{"group", g.name()}, {"order", g.order()}};
    });
    family_rank(order, *o);
    order->add_flag("--extended", o->extended, "Extended group (adds the diagram flip of type D)");

    auto o2 = std::make_shared<Opts>();
    auto* elems = leaf(v, ctx, "elements", "Enumerate all elements as signed permutations", [o2, &ctx]() -> json {
        WeylGroup g(system_of(o2->family, o2->rank), o2->extended);
        json a = json::array();
        g.for_each([&](const WeylElement& w) { a.push_back(to_json(w)); }, ctx.max_rank);
        return {{"group", g.name()}, {"order", g.order()}, {"elements", a}};
    });
    family_rank(elems, *o2);
    elems->add_flag("--extended", o2->extended, "Extended group");

    auto o3 = std::make_shared<Opts>();
    auto* gens = leaf(v, ctx, "generators", "Simple reflections (and the diagram flip)", [o3]() -> json {
        WeylGroup g(system_of(o3->family, o3->rank), o3->extended);
        json a = json::array();
        for (const auto& w : g.generators()) a.push_back(to_json(w));
        return {{"group", g.name()}, {"generators", a}};
    });
    family_rank(gens, *o3);
    gens->add_flag("--extended", o3->extended, "Extended group");

    auto o4 = std::make_shared<Opts>();
    auto* stab = leaf(v, ctx, "stabilizer", "Elements of W_k preserving a_n and their restrictions", [o4]() -> json {
        PropagationPair pr = pair_of(o4->family, o4->from, o4->to);
        WeylGroup g(pr.large, o4->extended);
        auto st = stabilizer(g, pr);
        std::set<WeylElement> restricted;
        for (const auto& w : st) restricted.insert(restrict_element(w, pr));
        return {{"group", g.name()},
                {"stabilizer_order", st.size()},
                {"restricted_order", restricted.size()},
                {"small_extended_order", WeylGroup(pr.small, true).order()}};
    });
    family_pair(stab, *o4);
    stab->add_flag("--extended", o4->extended, "Use the extended group of the larger system");
}

void add_invariants(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("invariants", "Invariant polynomials, lifts and the Rais decomposition");
    v->fallthrough();
    v->require_subcommand(1);

    auto o = std::make_shared<Opts>();
    auto* gens = leaf(v, ctx, "generators", "Basic invariants and their degrees", [o]() -> json {
        InvariantBasis b = invariant_generators(WeylGroup(system_of(o->family, o->rank), o->extended));
        return {{"group", b.group.name()},
                {"degrees", b.degrees},
                {"generators", polys(b.generators)},
                {"trace_degrees", b.extra_degrees},
                {"trace_generators", polys(b.extra)}};
    });
    family_rank(gens, *o);
    gens->add_flag("--extended", o->extended, "Extended group");

    auto o2 = std::make_shared<Opts>();
    auto* res = leaf(v, ctx, "restrict", "Restrict a polynomial on a_k to a_n", [o2, &ctx]() -> json {
        PropagationPair pr = pair_of(o2->family, o2->from, o2->to);
        return {{"poly", to_json(restrict_poly(input_poly(ctx), pr))}};
    });
    family_pair(res, *o2);

    auto o3 = std::make_shared<Opts>();
    auto* lift = leaf(v, ctx, "lift", "Lift a W~_n-invariant polynomial to a W~_k-invariant one", [o3, &ctx]() -> json {
        PropagationPair pr = pair_of(o3->family, o3->from, o3->to);
        Poly q = input_poly(ctx);
        Poly Q_ = o3->constructive ? constructive_pw_lift(q, pr) : lift_invariant(q, pr);
        bool round_trip = restrict_poly(Q_, pr) == q;
        bool inv = is_invariant(Q_, WeylGroup(pr.large, true));
        return {{"poly", to_json(Q_)}, {"round_trip", round_trip}, {"invariant", inv},
                {"method", o3->constructive ? "constructive" : "generators"}, {"status", status(round_trip && inv)}};
    });
    family_pair(lift, *o3);
    lift->add_flag("--constructive", o3->constructive, "Use the stabilizer-average and Rais construction");

    auto o4 = std::make_shared<Opts>();
    auto* expr = leaf(v, ctx, "express", "Write an invariant as a polynomial in the basic invariants", [o4, &ctx]() -> json {
        InvariantBasis b = invariant_generators(WeylGroup(system_of(o4->family, o4->rank), true));
        GeneratorExpression e = express_in_generators(input_poly(ctx), b, ctx.degree_bound);
        return {{"expression", to_json(e.poly)}, {"symbols", e.symbols}};
    });
    family_rank(expr, *o4);

    auto o5 = std::make_shared<Opts>();
    auto* rais = leaf(v, ctx, "rais", "F = sum P_i Phi_i over the coinvariant basis", [o5, &ctx]() -> json {
        WeylGroup g(system_of(o5->family, o5->rank), o5->extended);
        Poly F = input_poly(ctx);
        CoinvariantBasis cb(g, std::min(ctx.degree_bound, std::max(0, F.degree())));
        auto terms = rais_decompose(F, cb);
        json a = json::array();
        bool inv = true;
        for (const auto& t : terms) {
            inv = inv && is_invariant(t.Phi, g);
            a.push_back({{"P", to_json(t.P)}, {"Phi", to_json(t.Phi)}});
        }
        bool exact = rais_expand(terms, g.dim()) == F;
        return {{"group", g.name()}, {"terms", a}, {"expansion_exact", exact}, {"coefficients_invariant", inv},
                {"status", status(exact && inv)}};
    });
    family_rank(rais, *o5);
    rais->add_flag("--extended", o5->extended, "Extended group");

    auto o6 = std::make_shared<Opts>();
    auto* coinv = leaf(v, ctx, "coinvariants", "Harmonic monomial basis of the coinvariant algebra", [o6, &ctx]() -> json {
        WeylGroup g(system_of(o6->family, o6->rank), o6->extended);
        CoinvariantBasis cb(g, ctx.degree_bound);
        return {{"group", g.name()}, {"size", cb.elements().size()}, {"degrees", cb.degrees()},
                {"complete", cb.complete()}, {"order", g.order()}};
    });
    family_rank(coinv, *o6);
    coinv->add_flag("--extended", o6->extended, "Extended group");
}

void add_pw(CLI::App& app, Context& ctx) {
    CLI::App* v = app.add_subcommand("pw", "Paley-Wiener model: exp-polynomials and rho-shifted skew polynomials");
    v->fallthrough();
    v->require_subcommand(1);

    auto o = std::make_shared<Opts>();
    auto* rf = leaf(v, ctx, "restrict-flat", "Flat restriction of an exp-polynomial", [o, &ctx]() -> json {
        PropagationPair pr = pair_of(o->family, o->from, o->to);
        ExpPoly F = input_exppoly(ctx);
        ExpPoly r = restrict_flat(F, pr);
        return {{"exppoly", to_json(r)}, {"invariant", is_invariant(r, WeylGroup(pr.small, true))}};
    });
    family_pair(rf, *o);

    auto o2 = std::make_shared<Opts>();
    auto* sym = leaf(v, ctx, "symmetrize", "Average an exp-polynomial over W~", [o2, &ctx]() -> json {
        WeylGroup g(system_of(o2->family, o2->rank), true);
        return {{"exppoly", to_json(symmetrize(input_exppoly(ctx), g))}};
    });
    family_rank(sym, *o2);

    auto o3 = std::make_shared<Opts>();
    auto* t = leaf(v, ctx, "T", "T(Phi) = varpi(rho) Phi(lambda - rho) / varpi(lambda)", [o3, &ctx]() -> json {
        RootSystem rs = system_of(o3->family, o3->rank);
        return {{"poly", to_json(op_T_poly(input_poly(ctx), rs, rho(rs)))}};
    });
    family_rank(t, *o3);

    auto o4 = std::make_shared<Opts>();
    auto* ti = leaf(v, ctx, "T-inv", "Phi = varpi(lambda + rho) F(lambda + rho) / varpi(rho)", [o4, &ctx]() -> json {
        RootSystem rs = system_of(o4->family, o4->rank);
        WeylGroup g(rs, true);
        return {{"poly", to_json(op_T_inv(input_poly(ctx), g, rho(rs)).expanded())}};
    });
    family_rank(ti, *o4);

    auto o5 = std::make_shared<Opts>();
    auto* rr = leaf(v, ctx, "restrict-rho", "rho-shifted restriction; input Phi, output Phi_n and T(Phi_n)", [o5, &ctx]() -> json {
        PropagationPair pr = pair_of(o5->family, o5->from, o5->to);
        WeylGroup g(pr.large, true);
        auto Phi = RhoShiftedSkew::from_poly(input_poly(ctx), g, rho(pr.large));
        auto r = restrict_rho_shifted(Phi, pr);
        return {{"poly", to_json(r.expanded())}, {"t_image", to_json(r.t_image())}};
    });
    family_pair(rr, *o5);

    auto o6 = std::make_shared<Opts>();
    auto* lr = leaf(v, ctx, "lift-rho", "Preimage of a rho-shifted skew polynomial on a_n", [o6, &ctx]() -> json {
        PropagationPair pr = pair_of(o6->family, o6->from, o6->to);
        WeylGroup g(pr.small, true);
        auto Psi = RhoShiftedSkew::from_poly(input_poly(ctx), g, rho(pr.small));
        auto L = rho_shifted_lift(Psi, pr);
        bool ok = restrict_rho_shifted(L, pr).t_image() == Psi.t_image();
        return {{"poly", to_json(L.expanded())}, {"round_trip", ok}, {"status", status(ok)}};
    });
    family_pair(lr, *o6);
}

}  // namespace pwl::cli
