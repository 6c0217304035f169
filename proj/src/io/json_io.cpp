#include "pwl/json_io.hpp"

#include "pwl/errors.hpp"

#include <atomic>

namespace pwl {

namespace {
std::atomic<bool> g_float{false};

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::vector<int> int_list(const json& j) {
    if (!j.is_array()) throw DomainError("expected an integer array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw DomainError("expected an integer array");
        out.push_back(x.get<int>());
    }
    return out;
}
}  // namespace

void set_float_output(bool on) { g_float = on; }
bool float_output() { return g_float; }

json to_json(const Q& q) {
    if (g_float) return to_double(q);
    return to_string(q);
}

json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json ex = json::array();
        for (int i = 0; i < p.nvars(); ++i) ex.push_back(static_cast<int>(e[i]));
        terms.push_back({{"exp", ex}, {"coef", to_json(c)}});
    }
    return {{"nvars", p.nvars()}, {"terms", terms}, {"text", p.to_string()}};
}

json to_json(const ExpPoly& f) {
    json terms = json::array();
    for (const auto& [a, p] : f.terms()) terms.push_back({{"a", to_json(a)}, {"p", to_json(p)}});
    return {{"dim", f.dim()}, {"terms", terms}};
}

json to_json(const FourierData& d) {
    json cs = json::array();
    for (const auto& [I, c] : d.coeffs) cs.push_back({{"I", I}, {"coef", to_json(c)}});
    return {{"rank", d.rank}, {"entries", cs}};
}

json to_json(const RadicalData& d) {
    json cs = json::array();
    for (const auto& [I, v] : d.coeffs) cs.push_back({{"I", I}, {"a", to_json(v.a)}, {"sqrt_of", to_json(v.s)}});
    return {{"rank", d.rank}, {"coeffs", cs}};
}

json to_json(const WeylElement& w) {
    json perm = json::array();
    for (int p : w.perm) perm.push_back(p + 1);
    return {{"perm", perm}, {"signs", w.signs}};
}

json to_json(const RootSystem& rs) {
    json pos = json::array();
    for (std::size_t i = 0; i < rs.positive.size(); ++i)
        pos.push_back({{"root", to_json(rs.positive[i])}, {"mult", rs.mult[i]}});
    json simple = json::array();
    for (const auto& a : rs.simple) simple.push_back(to_json(a));
    json mult = json::object();
    for (std::size_t i = 0; i < rs.positive.size(); ++i) mult[key(rs.positive[i])] = rs.mult[i];
    json out = {{"system", rs.name()},
                {"rank", rs.rank()},
                {"mult", mult},
                {"ambient_dim", rs.ambient_dim},
                {"positive_roots", pos},
                {"simple_roots", simple},
                {"rho", to_json(rho(rs))},
                {"reduced", rs.reduced()}};
    if (rs.irreducible()) out["family"] = label_name(rs.factors[0].label);
    return out;
}

json to_json(const Polytope& p) {
    json ineqs = json::array();
    for (const auto& q : p.ineqs) ineqs.push_back({{"normal", to_json(q.normal)}, {"bound", to_json(q.bound)}});
    json eqs = json::array();
    for (const auto& e : p.equalities) eqs.push_back(to_json(e));
    json out = {{"dim", p.dim}, {"ineqs", ineqs}, {"units", "pi"}};
    if (!p.equalities.empty()) out["equalities"] = eqs;
    return out;
}

json to_json(const TowerValue& v) {
    if (const Poly* p = std::get_if<Poly>(&v)) return {{"poly", to_json(*p)}};
    if (const ExpPoly* e = std::get_if<ExpPoly>(&v)) return {{"exppoly", to_json(*e)}};
    return {{"fourier", to_json(std::get<FourierData>(v))}};
}

Q q_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw DomainError("expected a rational, got " + j.dump());
}

QVec qvec_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an array of rationals");
    QVec v;
    for (const auto& x : j) v.push_back(q_from_json(x));
    return v;
}

Poly poly_from_json(const json& j) {
    int n = field(j, "nvars").get<int>();
    if (n < 0 || n > kMaxVars) throw DomainError("nvars out of range");
    Poly p(n);
    for (const auto& t : field(j, "terms")) {
        auto e = int_list(field(t, "exp"));
        if (static_cast<int>(e.size()) != n) throw DomainError("exponent length does not match nvars");
        p.add_term(exponent_of(e), q_from_json(field(t, "coef")));
    }
    return p;
}

ExpPoly exppoly_from_json(const json& j) {
    int n = field(j, "dim").get<int>();
    ExpPoly f(n);
    for (const auto& t : field(j, "terms")) {
        QVec a = qvec_from_json(field(t, "a"));
        Poly p = poly_from_json(field(t, "p"));
        if (static_cast<int>(a.size()) != n || p.nvars() != n) throw DomainError("exp-poly term dimension mismatch");
        f.add(a, p);
    }
    return f;
}

FourierData fourier_from_json(const json& j) {
    FourierData d(field(j, "rank").get<int>());
    for (const auto& t : field(j, "entries")) d.set(int_list(field(t, "I")), q_from_json(field(t, "coef")));
    return d;
}

PropagationTower tower_from_json(const json& j) {
    Label l = parse_label(field(j, "family").get<std::string>());
    std::vector<int> levels = int_list(field(j, "levels"));
    std::map<Q, int> preset;
    if (j.contains("mult_preset") && !j.at("mult_preset").is_null())
        for (const auto& [k, v] : j.at("mult_preset").items()) preset[parse_rational(k)] = v.get<int>();
    return PropagationTower(l, levels, preset);
}

json tower_to_json(const PropagationTower& t) {
    json preset = json::object();
    for (const auto& [k, v] : t.mult_preset()) preset[to_string(k)] = v;
    json systems = json::array();
    for (int r : t.levels()) systems.push_back(t.system(r).name());
    return {{"family", label_name(t.label())}, {"levels", t.levels()}, {"mult_preset", preset}, {"systems", systems}};
}

CoherentElement element_from_json(const json& j) {
    CoherentElement e;
    e.base_level = field(j, "base_level").get<int>();
    e.rule = parse_lift_rule(j.value("rule", std::string("generator")));
    const json& v = field(j, "value");
    if (v.contains("poly")) e.base_value = poly_from_json(v.at("poly"));
    else if (v.contains("exppoly")) e.base_value = exppoly_from_json(v.at("exppoly"));
    else if (v.contains("fourier")) e.base_value = fourier_from_json(v.at("fourier"));
    else throw DomainError("value must hold one of poly, exppoly, fourier");
    return e;
}

}  // namespace pwl
