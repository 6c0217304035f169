#include "pwl/limits.hpp"

#include "pwl/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>

namespace pwl {

PropagationTower::PropagationTower(Label label, std::vector<int> levels, std::map<Q, int> mult_preset)
    : label_(label), levels_(std::move(levels)), preset_(std::move(mult_preset)) {
    if (levels_.empty()) throw DomainError("tower needs at least one level");
    for (std::size_t i = 1; i < levels_.size(); ++i)
        if (levels_[i] <= levels_[i - 1]) throw DomainError("tower levels must increase");
    RootSystem base = build_root_system_any(label_, levels_[0]);
    if (!preset_.empty()) base.set_multiplicity_by_length(preset_);
    if (!admissible(base.family())) throw DomainError("inadmissible tower base " + base.name());
    systems_.push_back(base);
    for (std::size_t i = 1; i < levels_.size(); ++i) systems_.push_back(propagate(base, levels_[i]).large);
}

std::size_t PropagationTower::index_of(int rank) const {
    auto it = std::find(levels_.begin(), levels_.end(), rank);
    if (it == levels_.end()) throw DomainError("rank " + std::to_string(rank) + " is not a tower level");
    return static_cast<std::size_t>(it - levels_.begin());
}

bool PropagationTower::has_level(int rank) const {
    return std::find(levels_.begin(), levels_.end(), rank) != levels_.end();
}

const RootSystem& PropagationTower::system(int rank) const { return systems_[index_of(rank)]; }

PropagationPair PropagationTower::pair(int n, int k) const {
    if (n > k) throw DomainError("pair needs n <= k");
    return make_pair(system(n), system(k));
}

std::vector<int> PropagationTower::path(int n, int k) const {
    std::size_t a = index_of(n), b = index_of(k);
    if (a > b) throw DomainError("path needs n <= k");
    return std::vector<int>(levels_.begin() + static_cast<long>(a) + 1, levels_.begin() + static_cast<long>(b) + 1);
}

std::string lift_rule_name(LiftRule r) { return r == LiftRule::Generator ? "generator" : "padding"; }

LiftRule parse_lift_rule(const std::string& s) {
    if (s == "generator") return LiftRule::Generator;
    if (s == "padding") return LiftRule::Padding;
    throw DomainError("unknown lift rule: " + s);
}

std::vector<int> pad_index(const std::vector<int>& I, int rank) {
    if (static_cast<int>(I.size()) > rank) throw DomainError("index longer than the target rank");
    std::vector<int> J = I;
    J.resize(static_cast<std::size_t>(rank), 0);
    return J;
}

namespace {

TowerValue step_up(const TowerValue& v, const PropagationPair& pair, LiftRule rule) {
    const int dk = pair.large.ambient_dim;
    if (const Poly* p = std::get_if<Poly>(&v)) {
        if (rule == LiftRule::Generator) return lift_invariant(*p, pair);
        return p->extend(dk);
    }
    if (rule == LiftRule::Generator) throw DomainError("generator lift applies to invariant polynomials only");
    if (const ExpPoly* e = std::get_if<ExpPoly>(&v)) {
        ExpPoly out(dk);
        for (const auto& [a, p] : e->terms()) out.add(pair.embed(a), p.extend(dk));
        return out;
    }
    const FourierData& d = std::get<FourierData>(v);
    FourierData out(pair.rank_large());
    for (const auto& [I, c] : d.coeffs) out.set(pad_index(I, pair.rank_large()), c);
    return out;
}

TowerValue step_down(const TowerValue& v, const PropagationPair& pair, LiftRule rule) {
    if (const Poly* p = std::get_if<Poly>(&v)) {
        if (rule == LiftRule::Generator) return restrict_poly(*p, pair);
        return p->truncate(pair.small.ambient_dim);
    }
    if (rule == LiftRule::Generator) throw DomainError("generator lift applies to invariant polynomials only");
    if (const ExpPoly* e = std::get_if<ExpPoly>(&v)) return restrict_flat(*e, pair);
    const FourierData& d = std::get<FourierData>(v);
    const int rn = pair.rank_small();
    FourierData out(rn);
    for (const auto& [I, c] : d.coeffs) {
        bool tail_zero = std::all_of(I.begin() + rn, I.end(), [](int x) { return x == 0; });
        if (tail_zero) out.set(std::vector<int>(I.begin(), I.begin() + rn), c);
    }
    return out;
}

}  // namespace

TowerValue project(const CoherentElement& e, const PropagationTower& tower, int level) {
    if (!tower.has_level(e.base_level)) throw DomainError("base level is not a tower level");
    TowerValue v = e.base_value;
    if (level >= e.base_level) {
        int cur = e.base_level;
        for (int next : tower.path(e.base_level, level)) {
            v = step_up(v, tower.pair(cur, next), e.rule);
            cur = next;
        }
        return v;
    }
    std::vector<int> down = tower.path(level, e.base_level);
    down.pop_back();
    std::reverse(down.begin(), down.end());
    down.push_back(level);
    int cur = e.base_level;
    for (int next : down) {
        v = step_down(v, tower.pair(next, cur), e.rule);
        cur = next;
    }
    return v;
}

bool is_zero_value(const TowerValue& v) {
    return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

bool values_equal(const TowerValue& a, const TowerValue& b) {
    if (a.index() != b.index()) return false;
    if (const Poly* p = std::get_if<Poly>(&a)) return *p == std::get<Poly>(b);
    if (const ExpPoly* p = std::get_if<ExpPoly>(&a)) return *p == std::get<ExpPoly>(b);
    return std::get<FourierData>(a) == std::get<FourierData>(b);
}

RadicalData RadicalData::from(const FourierData& d) {
    RadicalData r;
    r.rank = d.rank;
    for (const auto& [I, c] : d.coeffs) r.coeffs[I] = SqrtQ{c, 1};
    return r;
}

Q GroupCaseProvider::unitary_dim(int rank, const std::vector<int>& I) const {
    RootSystem U = build_root_system_any(label_, rank);
    auto om = fundamental_weights(U);
    QVec nu = zeros(static_cast<std::size_t>(U.ambient_dim));
    for (std::size_t j = 0; j < I.size(); ++j) nu = add(nu, scale(om.at(j), Q(I[j])));
    return dim_polynomial(U).eval(nu);
}

Q GroupCaseProvider::step_squared(int k, int n, const std::vector<int>& I_k) const {
    RootSystem Uk = build_root_system_any(label_, k), Un = build_root_system_any(label_, n);
    if (static_cast<int>(I_k.size()) != k) throw DomainError("provider index must have the level rank");
    auto om = fundamental_weights(Uk);
    QVec nu = zeros(static_cast<std::size_t>(Uk.ambient_dim));
    for (std::size_t j = 0; j < I_k.size(); ++j) nu = add(nu, scale(om[j], Q(I_k[j])));
    PropagationPair up{Un, Uk};
    QVec nu_n = up.restrict_vec(nu);
    for (const auto& a : Un.simple) {
        Q c = 2 * dot(nu_n, a) / norm2(a);
        if (sgn(c) < 0 || !is_integer(c)) throw DomainError("restricted weight is not dominant integral");
    }
    return dim_polynomial(Un).eval(nu_n) / dim_polynomial(Uk).eval(nu);
}

Q chain_squared(const PropagationTower& tower, const CProvider& p, int k, int n, const std::vector<int>& I_n) {
    Q acc = 1;
    int lo = n;
    for (int hi : tower.path(n, k)) {
        Q c2 = p.step_squared(hi, lo, pad_index(I_n, hi));
        if (sgn(c2) <= 0 || c2 > 1) throw DomainError("provider value outside (0,1]");
        acc *= c2;
        lo = hi;
    }
    return acc;
}

LevelDegree group_case_degree(Label label) {
    auto prov = std::make_shared<GroupCaseProvider>(label);
    return [prov](int rank, const std::vector<int>& I) -> Q { return prov->unitary_dim(rank, I); };
}

LevelDegree group_plancherel_degree(Label label) {
    auto prov = std::make_shared<GroupCaseProvider>(label);
    return [prov](int rank, const std::vector<int>& I) -> Q {
        Q d = prov->unitary_dim(rank, I);
        return d * d;
    };
}

RadicalData L_map(const RadicalData& d, const PropagationTower& tower, int n, int m, const CProvider& p,
                  const LevelDegree& deg) {
    if (d.rank != n) throw DomainError("data rank does not match the source level");
    RadicalData out;
    out.rank = m;
    for (const auto& [I, v] : d.coeffs) {
        auto Im = pad_index(I, m);
        Q f2 = chain_squared(tower, p, m, n, I) * deg(m, Im) / deg(n, I);
        out.coeffs[Im] = SqrtQ{v.a, v.s * f2};
    }
    return out;
}

RadicalData nu_map(const RadicalData& d, int m_rank) {
    RadicalData out;
    out.rank = m_rank;
    for (const auto& [I, v] : d.coeffs) out.coeffs[pad_index(I, m_rank)] = v;
    return out;
}

RadicalData eta_map(const RadicalData& d, const PropagationTower& tower, int n, const CProvider& p,
                    const LevelDegree& deg) {
    if (d.rank != n) throw DomainError("data rank does not match the level");
    const int base = tower.levels().front();
    RadicalData out;
    out.rank = n;
    for (const auto& [I, v] : d.coeffs) {
        for (int j = base; j < n; ++j)
            if (I[j] != 0) throw DomainError("eta needs indices supported on the base level");
        std::vector<int> Ib(I.begin(), I.begin() + base);
        Q f2 = chain_squared(tower, p, n, base, Ib) * deg(n, I);
        out.coeffs[I] = SqrtQ{v.a, v.s * f2};
    }
    return out;
}

Q ell2d_norm(const RadicalData& d, int rank, const LevelDegree& deg) {
    Q s = 0;
    for (const auto& [I, v] : d.coeffs) s += deg(rank, I) * v.a * v.a * v.s;
    return s;
}

std::string map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::PFlat: return "P_flat";
        case MapKind::PRho: return "P_rho";
        case MapKind::Ckn: return "C_kn";
        case MapKind::L: return "L";
    }
    return "?";
}

MapKind parse_map_kind(const std::string& s) {
    if (s == "P_flat" || s == "pflat") return MapKind::PFlat;
    if (s == "P_rho" || s == "prho") return MapKind::PRho;
    if (s == "C_kn" || s == "ckn") return MapKind::Ckn;
    if (s == "L" || s == "l") return MapKind::L;
    throw DomainError("unknown map kind: " + s);
}

namespace {

QVec random_exponent(const RootSystem& rs, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    QVec a(static_cast<std::size_t>(rs.ambient_dim));
    for (auto& x : a) x = d(rng);
    for (const auto& f : rs.factors) {
        if (f.label != Label::A) continue;
        Q mean = 0;
        for (int i = 0; i < f.dim; ++i) mean += a[f.offset + i];
        mean /= f.dim;
        for (int i = 0; i < f.dim; ++i) a[f.offset + i] -= mean;
    }
    return a;
}

FourierData random_data(int rank, int support_rank, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(0, 2), coef(-5, 5), count(1, 5);
    FourierData d(rank);
    int n = count(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> I(static_cast<std::size_t>(rank), 0);
        for (int j = 0; j < support_rank; ++j) I[j] = idx(rng);
        d.set(I, Q(coef(rng), 1 + idx(rng)));
    }
    return d;
}

}  // namespace

ComposeCertificate compose_check(const PropagationTower& tower, MapKind kind, int samples, std::uint64_t seed) {
    if (tower.size() < 3) throw DomainError("compose_check needs at least three levels");
    ComposeCertificate cert;
    cert.kind = kind;
    std::mt19937_64 rng(seed);
    const auto& lv = tower.levels();
    GroupCaseProvider provider(tower.label());
    LevelDegree deg = group_case_degree(tower.label());
    auto fail = [&](const std::string& msg) {
        cert.ok = false;
        cert.failures.push_back(msg);
    };
    for (std::size_t a = 0; a < lv.size(); ++a)
        for (std::size_t b = a + 1; b < lv.size(); ++b)
            for (std::size_t c = b + 1; c < lv.size(); ++c) {
                const int n = lv[a], k = lv[b], m = lv[c];
                const std::string tag = std::to_string(n) + "<" + std::to_string(k) + "<" + std::to_string(m);
                auto pnm = tower.pair(n, m), pkm = tower.pair(k, m), pnk = tower.pair(n, k);
                for (int s = 0; s < samples; ++s) {
                    ++cert.checks;
                    switch (kind) {
                        case MapKind::PFlat: {
                            const RootSystem& rm = tower.system(m);
                            WeylGroup g(rm, true);
                            std::uniform_int_distribution<int> cd(-3, 3);
                            Poly p = Poly::constant(rm.ambient_dim, Q(cd(rng)));
                            p += Poly::variable(rm.ambient_dim, 0) * Q(cd(rng));
                            ExpPoly F = symmetrize(ExpPoly::exponential(random_exponent(rm, rng), p), g);
                            ExpPoly direct = restrict_flat(F, pnm);
                            ExpPoly two = restrict_flat(restrict_flat(F, pkm), pnk);
                            if (direct != two) fail("P_flat " + tag);
                            if (!is_invariant(direct, WeylGroup(tower.system(n), true)))
                                fail("P_flat image not invariant " + tag);
                            break;
                        }
                        case MapKind::PRho: {
                            WeylGroup g(tower.system(m), true);
                            Poly F = random_invariant(invariant_generators(g), 6, rng);
                            auto Phi = RhoShiftedSkew::from_invariant(F, g, rho(tower.system(m)));
                            auto direct = restrict_rho_shifted(Phi, pnm);
                            auto two = restrict_rho_shifted(restrict_rho_shifted(Phi, pkm), pnk);
                            if (direct.t_image() != two.t_image()) fail("P_rho " + tag);
                            break;
                        }
                        case MapKind::Ckn: {
                            Poly Phi = random_poly(tower.system(m).ambient_dim, 3, 5, rng);
                            auto box_n = index_box(tower.system(n).rank(), 2);
                            auto box_k = index_box(tower.system(k).rank(), 1);
                            auto direct = c_k_n(Phi, pnm, box_n);
                            auto mid = c_k_n(Phi, pkm, box_k);
                            auto two = c_k_n(mid.extension, pnk, box_n);
                            if (!(direct.data == two.data)) fail("C_kn " + tag);
                            break;
                        }
                        case MapKind::L: {
                            RadicalData d = RadicalData::from(random_data(n, n, rng));
                            auto direct = L_map(d, tower, n, m, provider, deg);
                            auto two = L_map(L_map(d, tower, n, k, provider, deg), tower, k, m, provider, deg);
                            if (!(direct == two)) fail("L " + tag);
                            break;
                        }
                    }
                }
            }
    return cert;
}

CommutationCertificate eta_nu_check(const PropagationTower& tower, int samples, std::uint64_t seed) {
    CommutationCertificate cert;
    std::mt19937_64 rng(seed);
    GroupCaseProvider provider(tower.label());
    LevelDegree deg = group_case_degree(tower.label());
    const auto& lv = tower.levels();
    const int base = lv.front();
    for (std::size_t a = 0; a < lv.size(); ++a)
        for (std::size_t b = a; b < lv.size(); ++b) {
            const int n = lv[a], m = lv[b];
            for (int s = 0; s < samples; ++s) {
                ++cert.checks;
                RadicalData d = RadicalData::from(random_data(n, base, rng));
                auto left = eta_map(nu_map(d, m), tower, m, provider, deg);
                auto right = L_map(eta_map(d, tower, n, provider, deg), tower, n, m, provider, deg);
                if (!(left == right)) {
                    cert.ok = false;
                    cert.failures.push_back("eta nu " + std::to_string(n) + "->" + std::to_string(m));
                }
            }
        }
    return cert;
}

CommutationCertificate l_norm_check(const PropagationTower& tower, int samples, std::uint64_t seed,
                                    const LevelDegree& deg) {
    CommutationCertificate cert;
    std::mt19937_64 rng(seed);
    GroupCaseProvider provider(tower.label());
    const auto& lv = tower.levels();
    for (std::size_t a = 0; a < lv.size(); ++a)
        for (std::size_t b = a; b < lv.size(); ++b) {
            const int n = lv[a], m = lv[b];
            for (int s = 0; s < samples; ++s) {
                ++cert.checks;
                RadicalData d = RadicalData::from(random_data(n, n, rng));
                RadicalData img = L_map(d, tower, n, m, provider, deg);
                if (ell2d_norm(img, m, deg) != ell2d_norm(d, n, deg)) {
                    cert.ok = false;
                    cert.failures.push_back("norm " + std::to_string(n) + "->" + std::to_string(m));
                }
            }
        }
    return cert;
}

namespace {

using Mono = std::array<int, 6>;  // z1 z2 z3 w1 w2 w3

std::vector<Mono> monomial_basis(int a, int b) {
    std::vector<Mono> out;
    for (int z1 = 0; z1 <= b; ++z1)
        for (int z2 = 0; z1 + z2 <= b; ++z2)
            for (int w1 = 0; w1 <= a; ++w1)
                for (int w2 = 0; w1 + w2 <= a; ++w2) out.push_back({z1, z2, b - z1 - z2, w1, w2, a - w1 - w2});
    return out;
}

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// G-orthogonal projection onto the column span of B.
Eigen::MatrixXd projector(const Eigen::MatrixXd& B, const Eigen::MatrixXd& G) {
    Eigen::MatrixXd M = B.transpose() * G * B;
    return B * M.ldlt().solve(B.transpose() * G);
}

}  // namespace

ProjectionOracle su2_su3_projection_oracle(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("oracle degrees must be nonnegative");
    ProjectionOracle res;
    res.a = a;
    res.b = b;
    auto basis = monomial_basis(a, b);
    const int N = static_cast<int>(basis.size());
    std::map<Mono, int> index;
    for (int i = 0; i < N; ++i) index[basis[i]] = i;

    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        double g = 1;
        for (int e : basis[i]) g *= factorial(e);
        G(i, i) = g;
    }

    // Harmonic part: kernel of the contraction sum_i d/dz_i d/dw_i.
    Eigen::MatrixXd BV;
    if (a == 0 || b == 0) {
        BV = Eigen::MatrixXd::Identity(N, N);
    } else {
        auto lower = monomial_basis(a - 1, b - 1);
        std::map<Mono, int> lidx;
        for (int i = 0; i < static_cast<int>(lower.size()); ++i) lidx[lower[i]] = i;
        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(static_cast<int>(lower.size()), N);
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < 3; ++i) {
                Mono m = basis[j];
                if (m[i] == 0 || m[3 + i] == 0) continue;
                double c = m[i] * m[3 + i];
                --m[i];
                --m[3 + i];
                D(lidx.at(m), j) += c;
            }
        BV = Eigen::FullPivLU<Eigen::MatrixXd>(D).kernel();
    }

    // E_ij acts by z_i d/dz_j on C^3 and by -w_j d/dw_i on the dual.
    auto apply_E = [&](int i, int j, const Eigen::VectorXd& v) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(N);
        for (int t = 0; t < N; ++t) {
            if (v(t) == 0) continue;
            Mono m = basis[t];
            if (m[j] > 0) {
                Mono r = m;
                double c = r[j];
                --r[j];
                ++r[i];
                out(index.at(r)) += c * v(t);
            }
            if (m[3 + i] > 0) {
                Mono r = m;
                double c = r[3 + i];
                --r[3 + i];
                ++r[3 + j];
                out(index.at(r)) -= c * v(t);
            }
        }
        return out;
    };

    Mono top{0, 0, b, a, 0, 0};
    std::vector<Eigen::VectorXd> span;  // G-orthonormal
    std::vector<Eigen::VectorXd> queue;
    auto try_add = [&](Eigen::VectorXd v) {
        for (const auto& u : span) v -= (u.transpose() * G * v)(0) * u;
        double n2 = (v.transpose() * G * v)(0);
        if (n2 < 1e-18) return;
        v /= std::sqrt(n2);
        span.push_back(v);
        queue.push_back(v);
    };
    Eigen::VectorXd v0 = Eigen::VectorXd::Zero(N);
    v0(index.at(top)) = 1;
    try_add(v0);
    while (!queue.empty()) {
        Eigen::VectorXd v = queue.back();
        queue.pop_back();
        try_add(apply_E(0, 1, v));
        try_add(apply_E(1, 0, v));
    }
    Eigen::MatrixXd BW(N, static_cast<int>(span.size()));
    for (int j = 0; j < static_cast<int>(span.size()); ++j) BW.col(j) = span[j];

    Eigen::MatrixXd PV = projector(BV, G), PW = projector(BW, G);
    res.dim_V = PV.trace();
    res.dim_W = PW.trace();
    res.c_oracle = (PV * PW).trace() / std::sqrt(res.dim_V * res.dim_W);
    GroupCaseProvider prov(Label::A);
    res.c_provider = std::sqrt(to_double(prov.step_squared(2, 1, {a, b})));
    return res;
}

}  // namespace pwl
