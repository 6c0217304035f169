#include "pwl/invariants.hpp"

#include "pwl/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pwl {

Poly act_poly(const WeylElement& w, const Poly& p) { return p.signed_permute(w.perm, w.signs); }

Poly compose_poly(const Poly& p, const WeylElement& w) { return act_poly(w.inverse(), p); }

bool is_invariant(const Poly& p, const WeylGroup& g) {
    if (p.nvars() != g.dim()) throw DomainError("polynomial and group act on different spaces");
    for (const auto& s : g.generators())
        if (act_poly(s, p) != p) return false;
    return true;
}

Poly average(const Poly& p, const std::vector<WeylElement>& elems) {
    if (elems.empty()) throw DomainError("average over an empty set");
    Poly acc(p.nvars());
    for (const auto& w : elems) acc += act_poly(w, p);
    return acc * Q(1, static_cast<long>(elems.size()));
}

Poly reynolds(const Poly& p, const WeylGroup& g) {
    if (p.nvars() != g.dim()) throw DomainError("polynomial and group act on different spaces");
    Poly acc(p.nvars());
    g.for_each([&](const WeylElement& w) { acc += act_poly(w, p); });
    Q n(static_cast<unsigned long>(g.order()));
    return acc * (1 / n);
}

Poly power_sum(int nvars, int offset, int len, int d) {
    Poly p(nvars);
    for (int i = offset; i < offset + len; ++i) {
        Exponent e;
        e[i] = static_cast<std::uint8_t>(d);
        p.add_term(e, 1);
    }
    return p;
}

std::vector<Poly> InvariantBasis::all() const {
    std::vector<Poly> v = generators;
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
}

std::vector<int> InvariantBasis::all_degrees() const {
    std::vector<int> v = degrees;
    v.insert(v.end(), extra_degrees.begin(), extra_degrees.end());
    return v;
}

InvariantBasis invariant_generators(const WeylGroup& g) {
    InvariantBasis b{g, {}, {}, {}, {}};
    const int n = g.dim();
    for (const auto& f : g.root_system().factors) {
        auto push = [&](Poly p, int d) {
            b.generators.push_back(std::move(p));
            b.degrees.push_back(d);
        };
        switch (f.label) {
            case Label::A:
                for (int d = 2; d <= f.rank + 1; ++d) push(power_sum(n, f.offset, f.dim, d), d);
                b.extra.push_back(power_sum(n, f.offset, f.dim, 1));
                b.extra_degrees.push_back(1);
                break;
            case Label::D:
                if (!g.extended()) {
                    for (int d = 1; d < f.rank; ++d) push(power_sum(n, f.offset, f.dim, 2 * d), 2 * d);
                    std::vector<int> e(static_cast<std::size_t>(n), 0);
                    for (int i = f.offset; i < f.offset + f.dim; ++i) e[i] = 1;
                    push(Poly::monomial(n, e), f.rank);
                    break;
                }
                [[fallthrough]];
            default:
                for (int d = 1; d <= f.rank; ++d) push(power_sum(n, f.offset, f.dim, 2 * d), 2 * d);
                break;
        }
    }
    return b;
}

Poly restrict_poly(const Poly& p, const PropagationPair& pair) {
    if (p.nvars() != pair.large.ambient_dim) throw DomainError("restrict_poly: polynomial is not over the large space");
    return p.truncate(pair.small.ambient_dim);
}

Poly GeneratorExpression::on_subspace() const {
    const int n = poly.nvars();
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) images.push_back(i < generator_count ? Poly::variable(n, i) : Poly(n));
    return poly.substitute(images);
}

std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& weights, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(weights.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == weights.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int k = left / weights[i]; k >= 0; --k) {
            cur[i] = k;
            rec(i + 1, left - k * weights[i]);
        }
        cur[i] = 0;
    };
    if (d >= 0) rec(0, d);
    return out;
}

std::vector<Exponent> monomials_of_degree(int n, int d) {
    std::vector<Exponent> out;
    Exponent cur;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            cur[i] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur[i] = static_cast<std::uint8_t>(a);
            rec(i + 1, left - a);
        }
        cur[i] = 0;
    };
    if (n == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    rec(0, d);
    return out;
}

namespace {

/// Products g^beta cached by exponent.
class GeneratorPowers {
public:
    explicit GeneratorPowers(std::vector<Poly> gens) : gens_(std::move(gens)) {}

    const Poly& get(const std::vector<int>& beta) {
        auto it = cache_.find(beta);
        if (it != cache_.end()) return it->second;
        std::size_t i = 0;
        while (i < beta.size() && beta[i] == 0) ++i;
        int nv = gens_.empty() ? 0 : gens_[0].nvars();
        Poly value = Poly::constant(nv, 1);
        if (i < beta.size()) {
            std::vector<int> prev = beta;
            --prev[i];
            value = get(prev) * gens_[i];
        }
        return cache_.emplace(beta, std::move(value)).first->second;
    }

private:
    std::vector<Poly> gens_;
    std::map<std::vector<int>, Poly> cache_;
};

}  // namespace

GeneratorExpression express_in_generators(const Poly& q, const InvariantBasis& basis, int degree_bound) {
    if (!is_invariant(q, basis.group)) throw DomainError("express_in_generators: input is not invariant");
    if (q.degree() > degree_bound) throw ResourceError("express_in_generators: degree bound exceeded");
    GeneratorExpression out;
    auto gens = basis.all();
    auto weights = basis.all_degrees();
    const int ns = static_cast<int>(gens.size());
    out.poly = Poly(ns);
    out.generator_count = static_cast<int>(basis.generators.size());
    for (int i = 0; i < ns; ++i)
        out.symbols.push_back(i < out.generator_count ? "g" + std::to_string(i + 1)
                                                      : "t" + std::to_string(i - out.generator_count + 1));
    GeneratorPowers powers(gens);
    for (int d : q.degrees_present()) {
        Poly qd = q.homogeneous_part(d);
        auto betas = weighted_exponents(weights, d);
        std::map<Exponent, int> row_of;
        for (const auto& [e, c] : qd.terms()) row_of.emplace(e, 0);
        for (const auto& b : betas)
            for (const auto& [e, c] : powers.get(b).terms()) row_of.emplace(e, 0);
        int r = 0;
        for (auto& [e, idx] : row_of) idx = r++;
        QMatrix A(r, static_cast<int>(betas.size()));
        QVec rhs(static_cast<std::size_t>(r), Q(0));
        for (std::size_t j = 0; j < betas.size(); ++j)
            for (const auto& [e, c] : powers.get(betas[j]).terms()) A(row_of[e], static_cast<int>(j)) = c;
        for (const auto& [e, c] : qd.terms()) rhs[row_of[e]] = c;
        auto x = solve(A, rhs);
        if (!x) throw TheoremViolation("invariant of degree " + std::to_string(d) + " not in the generated algebra");
        for (std::size_t j = 0; j < betas.size(); ++j)
            if (sgn((*x)[j]) != 0) out.poly.add_term(exponent_of(betas[j]), (*x)[j]);
    }
    if (expand_expression(out.poly, basis) != q) throw TheoremViolation("generator expression does not expand back");
    return out;
}

Poly expand_expression(const Poly& e, const InvariantBasis& basis) { return e.substitute(basis.all()); }

Poly lift_invariant(const Poly& q, const PropagationPair& pair) {
    WeylGroup gn(pair.small, true), gk(pair.large, true);
    if (q.nvars() != pair.small.ambient_dim) throw DomainError("lift_invariant: polynomial is not over the small space");
    auto bn = invariant_generators(gn);
    auto bk = invariant_generators(gk);
    auto expr = express_in_generators(q, bn);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < bn.generators.size(); ++i) {
        if (bk.degrees[i] != bn.degrees[i]) throw TheoremViolation("generator degrees do not line up under propagation");
        images.push_back(bk.generators[i]);
    }
    for (std::size_t i = 0; i < bn.extra.size(); ++i) images.push_back(bk.extra[i]);
    Poly lifted = expr.poly.substitute(images);
    if (restrict_poly(lifted, pair) != q) throw TheoremViolation("lifted invariant does not restrict to its source");
    return lifted;
}

// ---------------------------------------------------------------------------
// Coinvariant basis

namespace {

using SparseRow = std::vector<std::pair<int, Q>>;

SparseRow axpy(const SparseRow& a, const Q& s, const SparseRow& b) {
    // a - s*b
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -s * b[j].second);
            ++j;
        } else {
            Q v = a[i].second - s * b[j].second;
            if (sgn(v) != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

struct CoinvariantBasis::Block {
    std::vector<std::pair<int, std::vector<int>>> cols;  // (basis element, beta)
    std::map<Exponent, int> row_of;
    std::unique_ptr<LUSolver> lu;
};

CoinvariantBasis::CoinvariantBasis(const WeylGroup& g, int degree_bound)
    : basis_(invariant_generators(g)), bound_(degree_bound) {
    if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
    if (degree_bound > 40) throw ResourceError("coinvariant degree bound above 40");
    const int n = g.dim();
    for (const auto& f : g.root_system().factors) {
        bool all_signs = f.label == Label::B || f.label == Label::C || f.label == Label::BC ||
                         (f.label == Label::D && g.extended());
        if (!all_signs) continue;
        std::vector<int> coords;
        for (int i = f.offset; i < f.offset + f.dim; ++i) coords.push_back(i);
        sign_blocks_.push_back(coords);
    }
    auto gens = basis_.all();
    auto wts = basis_.all_degrees();
    for (int d = 0; d <= degree_bound; ++d) {
        auto mons = monomials_of_degree(n, d);
        std::map<Exponent, int> col;
        for (std::size_t i = 0; i < mons.size(); ++i) col.emplace(mons[i], static_cast<int>(i));
        std::map<int, SparseRow> pivots;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int e = wts[gi];
            if (e > d || e == 0) continue;
            for (const auto& m : monomials_of_degree(n, d - e)) {
                SparseRow row;
                for (const auto& [ge, gc] : gens[gi].terms()) {
                    Exponent prod;
                    for (int v = 0; v < kMaxVars; ++v) prod.e[v] = static_cast<std::uint8_t>(ge.e[v] + m.e[v]);
                    row.emplace_back(col.at(prod), gc);
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                while (!row.empty()) {
                    auto it = pivots.find(row.front().first);
                    if (it == pivots.end()) {
                        Q inv = 1 / row.front().second;
                        for (auto& [c, v] : row) v *= inv;
                        pivots.emplace(row.front().first, std::move(row));
                        break;
                    }
                    Q s = row.front().second;
                    row = axpy(row, s, it->second);
                }
            }
        }
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (pivots.count(static_cast<int>(i))) continue;
            elements_.push_back(Poly(n));
            elements_.back().add_term(mons[i], 1);
            monomials_.push_back(mons[i]);
            degrees_.push_back(d);
        }
    }
}

bool CoinvariantBasis::complete() const {
    int top = 0;
    for (int d : basis_.all_degrees()) top += d - 1;
    return bound_ >= top;
}

const CoinvariantBasis::Block& CoinvariantBasis::block(int d, const std::vector<int>& parity) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(d, parity);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;

    auto parity_of = [&](const Exponent& e) {
        std::vector<int> p;
        for (const auto& blk : sign_blocks_)
            for (int c : blk) p.push_back(e[c] & 1);
        return p;
    };
    auto blk = std::make_shared<Block>();
    const int n = basis_.group.dim();
    for (const auto& m : monomials_of_degree(n, d))
        if (parity_of(m) == parity) blk->row_of.emplace(m, 0);
    int r = 0;
    for (auto& [e, idx] : blk->row_of) idx = r++;
    auto wts = basis_.all_degrees();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (degrees_[i] > d || parity_of(monomials_[i]) != parity) continue;
        for (auto& beta : weighted_exponents(wts, d - degrees_[i])) blk->cols.emplace_back(static_cast<int>(i), beta);
    }
    if (static_cast<int>(blk->cols.size()) != r)
        throw TheoremViolation("coinvariant system is not square: freeness over the invariants failed");
    GeneratorPowers powers(basis_.all());
    QMatrix A(r, r);
    for (int j = 0; j < r; ++j) {
        const auto& [i, beta] = blk->cols[j];
        Poly col = elements_[i] * powers.get(beta);
        for (const auto& [e, c] : col.terms()) A(blk->row_of.at(e), j) = c;
    }
    blk->lu = std::make_unique<LUSolver>(std::move(A));
    cache_.emplace(key, blk);
    return *blk;
}

std::vector<Poly> CoinvariantBasis::decompose_homogeneous(const Poly& fd, int d) const {
    if (d > bound_) throw ResourceError("rais_decompose: degree above the coinvariant bound");
    const int n = basis_.group.dim();
    std::map<std::vector<int>, Poly> by_parity;
    for (const auto& [e, c] : fd.terms()) {
        if (e.degree() != d) throw DomainError("decompose_homogeneous: input is not homogeneous");
        std::vector<int> p;
        for (const auto& blk : sign_blocks_)
            for (int v : blk) p.push_back(e[v] & 1);
        auto it = by_parity.try_emplace(p, Poly(n)).first;
        it->second.add_term(e, c);
    }
    std::vector<Poly> phis(elements_.size(), Poly(n));
    GeneratorPowers powers(basis_.all());
    for (const auto& [parity, part] : by_parity) {
        const Block& blk = block(d, parity);
        QVec rhs(blk.row_of.size(), Q(0));
        for (const auto& [e, c] : part.terms()) rhs[blk.row_of.at(e)] = c;
        QVec x = blk.lu->solve(rhs);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sgn(x[j]) == 0) continue;
            const auto& [i, beta] = blk.cols[j];
            phis[i] += powers.get(beta) * x[j];
        }
    }
    return phis;
}

std::vector<RaisTerm> rais_decompose(const Poly& F, const CoinvariantBasis& basis) {
    if (F.nvars() != basis.group().dim()) throw DomainError("rais_decompose: dimension mismatch");
    if (F.degree() > basis.degree_bound()) throw ResourceError("rais_decompose: degree above the coinvariant bound");
    const int n = F.nvars();
    std::vector<Poly> phis(basis.elements().size(), Poly(n));
    for (int d : F.degrees_present()) {
        auto part = basis.decompose_homogeneous(F.homogeneous_part(d), d);
        for (std::size_t i = 0; i < part.size(); ++i) phis[i] += part[i];
    }
    const int top = std::max(F.degree(), 0);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < basis.elements().size(); ++i)
        if (basis.degrees()[i] <= top) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return basis.degrees()[a] > basis.degrees()[b]; });
    std::vector<RaisTerm> out;
    for (auto i : order) out.push_back({basis.elements()[i], phis[i]});
    return out;
}

Poly rais_expand(const std::vector<RaisTerm>& terms, int nvars) {
    Poly acc(nvars);
    for (const auto& t : terms) acc += t.P * t.Phi;
    return acc;
}

Poly constructive_pw_lift(const Poly& G, const PropagationPair& pair) {
    WeylGroup gn(pair.small, true), gk(pair.large, true);
    if (!is_invariant(G, gn)) throw DomainError("constructive_pw_lift: input is not W~_n-invariant");
    const int nk = pair.large.ambient_dim;
    auto stab = stabilizer(gk, pair);
    Poly naive = average(G.extend(nk), stab);
    CoinvariantBasis cb(gk, std::max(G.degree(), 0));
    auto terms = rais_decompose(naive, cb);
    Poly phi(nk);
    for (const auto& t : terms) {
        if (t.Phi.is_zero()) continue;
        Poly pj = restrict_poly(average(t.P, stab), pair);
        phi += lift_invariant(pj, pair) * t.Phi;
    }
    if (restrict_poly(phi, pair) != G) throw TheoremViolation("constructive lift does not restrict to its source");
    if (!is_invariant(phi, gk)) throw TheoremViolation("constructive lift is not W~_k-invariant");
    return phi;
}

Poly random_invariant(const InvariantBasis& basis, int max_degree, std::mt19937_64& rng, int coef_range) {
    auto gens = basis.all();
    auto wts = basis.all_degrees();
    const int n = basis.group.dim();
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-coef_range, coef_range), count(1, 4);
    Poly out(n);
    GeneratorPowers powers(gens);
    int target = count(rng);
    for (int attempt = 0; attempt < 50 && static_cast<int>(out.size()) < 1000 && target > 0; ++attempt) {
        auto betas = weighted_exponents(wts, deg(rng));
        if (betas.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, betas.size() - 1);
        int c = coef(rng);
        if (c == 0) c = 1;
        out += powers.get(betas[pick(rng)]) * Q(c);
        --target;
    }
    return out;
}

Poly random_poly(int nvars, int max_degree, int terms, std::mt19937_64& rng, int coef_range) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-coef_range, coef_range);
    std::uniform_int_distribution<int> var(0, std::max(nvars - 1, 0));
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e;
        int d = deg(rng);
        for (int k = 0; k < d && nvars > 0; ++k) ++e.e[var(rng)];
        int c = coef(rng);
        p.add_term(e, Q(c == 0 ? 1 : c));
    }
    return p;
}

}  // namespace pwl
