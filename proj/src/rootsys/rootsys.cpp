#include "pwl/rootsys.hpp"

#include "pwl/errors.hpp"
#include "pwl/linalg.hpp"

#include <algorithm>

namespace pwl {

std::string label_name(Label l) {
    switch (l) {
        case Label::A: return "A";
        case Label::B: return "B";
        case Label::C: return "C";
        case Label::D: return "D";
        case Label::BC: return "BC";
    }
    return "?";
}

Label parse_label(const std::string& s) {
    if (s == "A") return Label::A;
    if (s == "B") return Label::B;
    if (s == "C") return Label::C;
    if (s == "D") return Label::D;
    if (s == "BC") return Label::BC;
    throw DomainError("unknown family label: " + s);
}

int minimum_rank(Label l) {
    switch (l) {
        case Label::A: return 1;
        case Label::B: return 2;
        case Label::C: return 3;
        case Label::D: return 4;
        case Label::BC: return 1;
    }
    return 1;
}

bool admissible(const Family& f) { return f.rank >= minimum_rank(f.label); }

bool RootSystem::reduced() const {
    for (const auto& f : factors)
        if (f.label == Label::BC) return false;
    return true;
}

Family RootSystem::family() const {
    if (factors.size() != 1) throw DomainError("root system is not irreducible");
    return {factors[0].label, factors[0].rank};
}

std::vector<QVec> RootSystem::roots() const {
    std::vector<QVec> out = positive;
    for (const auto& r : positive) out.push_back(neg(r));
    return out;
}

int RootSystem::positive_index(const QVec& v) const {
    for (std::size_t i = 0; i < positive.size(); ++i)
        if (positive[i] == v) return static_cast<int>(i);
    return -1;
}

bool RootSystem::is_root(const QVec& v) const {
    return positive_index(v) >= 0 || positive_index(neg(v)) >= 0;
}

int RootSystem::multiplicity(const QVec& root) const {
    int i = positive_index(root);
    if (i < 0) i = positive_index(neg(root));
    if (i < 0) throw DomainError("not a root: " + key(root));
    return mult[i];
}

std::string RootSystem::name() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += label_name(factors[i].label) + std::to_string(factors[i].rank);
    }
    return s;
}

void RootSystem::set_multiplicity_by_length(const std::map<Q, int>& m) {
    for (std::size_t i = 0; i < positive.size(); ++i) {
        auto it = m.find(norm2(positive[i]));
        if (it != m.end()) {
            if (it->second < 1) throw DomainError("multiplicities must be positive");
            mult[i] = it->second;
        }
    }
}

namespace {

QVec f(int dim, int i, long s = 1) { return unit(static_cast<std::size_t>(dim), static_cast<std::size_t>(i), Q(s)); }

RootSystem build_unchecked(Label l, int k) {
    RootSystem rs;
    const int dim = l == Label::A ? k + 1 : k;
    rs.ambient_dim = dim;
    rs.factors.push_back({l, k, 0, dim});
    auto& pos = rs.positive;
    if (l == Label::A) {
        for (int j = 1; j < dim; ++j)
            for (int i = 0; i < j; ++i) pos.push_back(sub(f(dim, j), f(dim, i)));
        for (int j = 0; j < k; ++j) rs.simple.push_back(sub(f(dim, j + 1), f(dim, j)));
    } else {
        if (l == Label::B || l == Label::BC)
            for (int i = 0; i < k; ++i) pos.push_back(f(dim, i));
        if (l == Label::C || l == Label::BC)
            for (int i = 0; i < k; ++i) pos.push_back(f(dim, i, 2));
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                pos.push_back(sub(f(dim, j), f(dim, i)));
                pos.push_back(add(f(dim, j), f(dim, i)));
            }
        if (l == Label::D) {
            rs.simple.push_back(add(f(dim, 0), f(dim, 1)));
            rs.simple.push_back(sub(f(dim, 1), f(dim, 0)));
            for (int j = 2; j < k; ++j) rs.simple.push_back(sub(f(dim, j), f(dim, j - 1)));
        } else {
            rs.simple.push_back(l == Label::C ? f(dim, 0, 2) : f(dim, 0));
            for (int j = 1; j < k; ++j) rs.simple.push_back(sub(f(dim, j), f(dim, j - 1)));
        }
    }
    rs.mult.assign(pos.size(), 1);
    return rs;
}

QMatrix simple_matrix(const RootSystem& rs) {
    QMatrix m(rs.ambient_dim, rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
        for (int i = 0; i < rs.ambient_dim; ++i) m(i, j) = rs.simple[j][i];
    return m;
}

QMatrix inverse(const QMatrix& g) {
    const int n = g.rows;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = g(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw TheoremViolation("singular Gram matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<QVec> dual_basis(const RootSystem& rs, const Q& factor) {
    const int r = rs.rank();
    QMatrix g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g(i, j) = dot(rs.simple[i], rs.simple[j]);
    QMatrix ginv = inverse(g);
    std::vector<QVec> out;
    for (int i = 0; i < r; ++i) {
        QVec xi = zeros(static_cast<std::size_t>(rs.ambient_dim));
        for (int l = 0; l < r; ++l) {
            Q c = factor * g(i, i) * ginv(i, l);
            if (sgn(c) != 0) xi = add(xi, scale(rs.simple[l], c));
        }
        out.push_back(std::move(xi));
    }
    return out;
}

}  // namespace

RootSystem build_root_system(const Family& fam) {
    if (!admissible(fam))
        throw DomainError("inadmissible rank " + std::to_string(fam.rank) + " for family " + label_name(fam.label));
    return build_unchecked(fam.label, fam.rank);
}

RootSystem build_root_system_any(Label l, int rank) {
    int lo = (l == Label::D) ? 2 : 1;
    if (rank < lo) throw DomainError("rank too small for family " + label_name(l));
    return build_unchecked(l, rank);
}

RootSystem product(const std::vector<RootSystem>& parts) {
    RootSystem out;
    for (const auto& p : parts) out.ambient_dim += p.ambient_dim;
    int offset = 0;
    for (const auto& p : parts) {
        auto shift = [&](const QVec& v) {
            QVec w = zeros(static_cast<std::size_t>(out.ambient_dim));
            for (int i = 0; i < p.ambient_dim; ++i) w[offset + i] = v[i];
            return w;
        };
        for (const auto& f : p.factors) out.factors.push_back({f.label, f.rank, f.offset + offset, f.dim});
        for (std::size_t i = 0; i < p.positive.size(); ++i) {
            out.positive.push_back(shift(p.positive[i]));
            out.mult.push_back(p.mult[i]);
        }
        for (const auto& s : p.simple) out.simple.push_back(shift(s));
        offset += p.ambient_dim;
    }
    return out;
}

std::pair<RootSystem, RootSystem> reduced_systems(const RootSystem& rs) {
    RootSystem half = rs, two = rs;
    half.positive.clear();
    half.mult.clear();
    two.positive.clear();
    two.mult.clear();
    for (std::size_t i = 0; i < rs.positive.size(); ++i) {
        const auto& a = rs.positive[i];
        if (!rs.is_root(scale(a, Q(1, 2)))) {
            half.positive.push_back(a);
            half.mult.push_back(rs.mult[i]);
        }
        if (!rs.is_root(scale(a, Q(2)))) {
            two.positive.push_back(a);
            two.mult.push_back(rs.mult[i]);
        }
    }
    for (std::size_t fi = 0; fi < rs.factors.size(); ++fi) {
        if (rs.factors[fi].label != Label::BC) continue;
        half.factors[fi].label = Label::B;
        two.factors[fi].label = Label::C;
        // The long simple root of C replaces f_1 with 2f_1.
        int first = 0;
        for (std::size_t g = 0; g < fi; ++g) first += rs.factors[g].rank;
        two.simple[first] = scale(rs.simple[first], Q(2));
    }
    return {half, two};
}

QVec rho(const RootSystem& rs) {
    QVec r = zeros(static_cast<std::size_t>(rs.ambient_dim));
    for (std::size_t i = 0; i < rs.positive.size(); ++i) r = add(r, scale(rs.positive[i], frac(rs.mult[i], 2)));
    return r;
}

QVec simple_coordinates(const RootSystem& rs, const QVec& v) {
    auto x = solve(simple_matrix(rs), v);
    if (!x) throw DomainError("vector not in the span of the simple roots: " + key(v));
    return *x;
}

HighestRoot highest_root(const RootSystem& rs) {
    if (!rs.irreducible()) throw DomainError("highest root needs an irreducible system");
    HighestRoot best;
    Q best_height = -1;
    for (const auto& a : rs.positive) {
        QVec c = simple_coordinates(rs, a);
        Q h = sum(c);
        if (h > best_height) {
            best_height = h;
            best = {a, c};
        }
    }
    for (const auto& a : rs.positive) {
        QVec c = simple_coordinates(rs, a);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] > best.coefficients[j]) throw TheoremViolation("highest root does not dominate " + key(a));
    }
    return best;
}

std::vector<QVec> class_one_fundamental_weights(const RootSystem& rs) {
    if (!rs.reduced()) return dual_basis(reduced_systems(rs).second, Q(1));
    return dual_basis(rs, Q(1));
}

std::vector<QVec> fundamental_weights(const RootSystem& rs) { return dual_basis(rs, Q(1, 2)); }

bool lambda_plus_member(const QVec& mu, const RootSystem& rs) {
    if (static_cast<int>(mu.size()) != rs.ambient_dim) throw DomainError("weight dimension mismatch");
    for (const auto& fac : rs.factors) {
        if (fac.label != Label::A) continue;
        Q s = 0;
        for (int i = 0; i < fac.dim; ++i) s += mu[fac.offset + i];
        if (sgn(s) != 0) return false;
    }
    for (const auto& a : rs.positive) {
        Q r = dot(mu, a) / norm2(a);
        if (sgn(r) < 0 || !is_integer(r)) return false;
    }
    return true;
}

SphericalLatticePoint mu_of_index(const std::vector<int>& I, const RootSystem& rs) {
    if (static_cast<int>(I.size()) != rs.rank()) throw DomainError("index length does not match rank");
    auto xi = class_one_fundamental_weights(rs);
    QVec w = zeros(static_cast<std::size_t>(rs.ambient_dim));
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (I[j] < 0) throw DomainError("index entries must be nonnegative");
        if (I[j]) w = add(w, scale(xi[j], Q(I[j])));
    }
    return {I, w};
}

int manifold_dimension(const RootSystem& rs) {
    int d = rs.rank();
    for (int m : rs.mult) d += m;
    return d;
}

SpaceDescriptor space_descriptor(int row, int j, int p, int q) {
    SpaceDescriptor d;
    d.row = row;
    auto need_j = [&](int lo) {
        if (j < lo) throw DomainError("row " + std::to_string(row) + " needs j >= " + std::to_string(lo));
        d.j = j;
    };
    auto need_pq = [&](int lo_sum) {
        if (p < 1 || q < 1 || p + q < lo_sum) throw DomainError("row " + std::to_string(row) + " needs p, q >= 1");
        d.p = std::min(p, q);
        d.q = std::max(p, q);
    };
    // Multiplicities keyed by squared length: 1 short (f_i), 2 middle (f_i +- f_j), 4 long (2 f_i).
    auto sys = [&](Label l, int rank, std::map<Q, int> m) {
        RootSystem rs = build_root_system_any(l, rank);
        rs.set_multiplicity_by_length(m);
        return rs;
    };
    switch (row) {
        case 1:
            need_j(2);
            d.cartan_class = "A";
            d.compact_group = "SU(" + std::to_string(j) + ")xSU(" + std::to_string(j) + ")";
            d.isotropy = "diag SU(" + std::to_string(j) + ")";
            d.rs = sys(Label::A, j - 1, {{2, 2}});
            d.group_manifold = true;
            break;
        case 2:
            need_j(1);
            d.cartan_class = "B";
            d.compact_group = "SO(" + std::to_string(2 * j + 1) + ")^2";
            d.isotropy = "diag SO(" + std::to_string(2 * j + 1) + ")";
            d.rs = sys(Label::B, j, {{1, 2}, {2, 2}});
            d.group_manifold = true;
            break;
        case 3:
            need_j(2);
            d.cartan_class = "D";
            d.compact_group = "SO(" + std::to_string(2 * j) + ")^2";
            d.isotropy = "diag SO(" + std::to_string(2 * j) + ")";
            d.rs = sys(Label::D, j, {{2, 2}});
            d.group_manifold = true;
            break;
        case 4:
            need_j(1);
            d.cartan_class = "C";
            d.compact_group = "Sp(" + std::to_string(j) + ")^2";
            d.isotropy = "diag Sp(" + std::to_string(j) + ")";
            d.rs = sys(Label::C, j, {{2, 2}, {4, 2}});
            d.group_manifold = true;
            break;
        case 5:
            need_pq(2);
            d.cartan_class = "AIII";
            d.compact_group = "SU(" + std::to_string(p + q) + ")";
            d.isotropy = "S(U(" + std::to_string(p) + ")xU(" + std::to_string(q) + "))";
            if (d.p < d.q)
                d.rs = sys(Label::BC, d.p, {{1, 2 * (d.q - d.p)}, {2, 2}, {4, 1}});
            else
                d.rs = sys(Label::C, d.p, {{2, 2}, {4, 1}});
            break;
        case 6:
            need_j(2);
            d.cartan_class = "AI";
            d.compact_group = "SU(" + std::to_string(j) + ")";
            d.isotropy = "SO(" + std::to_string(j) + ")";
            d.rs = sys(Label::A, j - 1, {{2, 1}});
            break;
        case 7:
            need_j(2);
            d.cartan_class = "AII";
            d.compact_group = "SU(" + std::to_string(2 * j) + ")";
            d.isotropy = "Sp(" + std::to_string(j) + ")";
            d.rs = sys(Label::A, j - 1, {{2, 4}});
            break;
        case 8:
            need_pq(3);
            d.cartan_class = "BDI";
            d.compact_group = "SO(" + std::to_string(p + q) + ")";
            d.isotropy = "SO(" + std::to_string(p) + ")xSO(" + std::to_string(q) + ")";
            if (d.p < d.q)
                d.rs = sys(Label::B, d.p, {{1, d.q - d.p}, {2, 1}});
            else
                d.rs = sys(Label::D, d.p, {{2, 1}});
            break;
        case 9: {
            need_j(2);
            d.cartan_class = "DIII";
            d.compact_group = "SO(" + std::to_string(2 * j) + ")";
            d.isotropy = "U(" + std::to_string(j) + ")";
            int r = j / 2;
            if (j % 2 == 0)
                d.rs = sys(Label::C, r, {{2, 4}, {4, 1}});
            else
                d.rs = sys(Label::BC, r, {{1, 4}, {2, 4}, {4, 1}});
            break;
        }
        case 10:
            need_pq(2);
            d.cartan_class = "CII";
            d.compact_group = "Sp(" + std::to_string(p + q) + ")";
            d.isotropy = "Sp(" + std::to_string(p) + ")xSp(" + std::to_string(q) + ")";
            if (d.p < d.q)
                d.rs = sys(Label::BC, d.p, {{1, 4 * (d.q - d.p)}, {2, 4}, {4, 3}});
            else
                d.rs = sys(Label::C, d.p, {{2, 4}, {4, 3}});
            break;
        case 11:
            need_j(1);
            d.cartan_class = "CI";
            d.compact_group = "Sp(" + std::to_string(j) + ")";
            d.isotropy = "U(" + std::to_string(j) + ")";
            d.rs = sys(Label::C, j, {{2, 1}, {4, 1}});
            break;
        default:
            throw DomainError("table row must be in 1..11");
    }
    d.rank = d.rs.rank();
    d.dim = manifold_dimension(d.rs);
    return d;
}

QVec PropagationPair::embed(const QVec& x) const {
    if (static_cast<int>(x.size()) != small.ambient_dim) throw DomainError("embed: dimension mismatch");
    QVec y = zeros(static_cast<std::size_t>(large.ambient_dim));
    std::copy(x.begin(), x.end(), y.begin());
    return y;
}

QVec PropagationPair::restrict_vec(const QVec& y) const {
    if (static_cast<int>(y.size()) != large.ambient_dim) throw DomainError("restrict: dimension mismatch");
    QVec x(y.begin(), y.begin() + small.ambient_dim);
    if (label() == Label::A) {
        Q mean = sum(x) / Q(static_cast<long>(x.size()));
        for (auto& c : x) c -= mean;
    }
    return x;
}

PropagationPair make_pair(const RootSystem& small, const RootSystem& large) {
    if (!small.irreducible() || !large.irreducible()) throw DomainError("propagation pairs need irreducible systems");
    Family fs = small.family(), fl = large.family();
    if (fs.label != fl.label) throw DomainError("propagation needs one family");
    if (fl.rank < fs.rank) throw DomainError("propagation cannot decrease rank");
    if (!admissible(fs)) throw DomainError("inadmissible rank for propagation base " + small.name());
    PropagationPair pair{small, large};
    for (int j = 0; j < fs.rank; ++j)
        if (pair.restrict_vec(large.simple[j]) != small.simple[j])
            throw TheoremViolation("simple root does not restrict to its counterpart");
    return pair;
}

PropagationPair propagate(const RootSystem& rs_n, int target_rank) {
    Family fam = rs_n.family();
    if (target_rank < fam.rank) throw DomainError("propagation cannot decrease rank");
    std::map<Q, int> by_length;
    for (std::size_t i = 0; i < rs_n.positive.size(); ++i) {
        Q len = norm2(rs_n.positive[i]);
        auto [it, fresh] = by_length.emplace(len, rs_n.mult[i]);
        if (!fresh && it->second != rs_n.mult[i])
            throw DomainError("multiplicities are not constant on root lengths");
    }
    RootSystem large = build_unchecked(fam.label, target_rank);
    large.set_multiplicity_by_length(by_length);
    return make_pair(rs_n, large);
}

}  // namespace pwl
