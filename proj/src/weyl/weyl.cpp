#include "pwl/weyl.hpp"

#include "pwl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pwl {

WeylElement WeylElement::identity(int n) {
    WeylElement w;
    w.perm.resize(static_cast<std::size_t>(n));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.signs.assign(static_cast<std::size_t>(n), 1);
    return w;
}

QVec WeylElement::apply(const QVec& v) const {
    if (static_cast<int>(v.size()) != dim()) throw DomainError("Weyl action: dimension mismatch");
    QVec out(v.size());
    for (int i = 0; i < dim(); ++i) out[perm[i]] = signs[i] < 0 ? Q(-v[i]) : v[i];
    return out;
}

WeylElement WeylElement::compose(const WeylElement& o) const {
    if (o.dim() != dim()) throw DomainError("Weyl composition: dimension mismatch");
    WeylElement r;
    r.perm.resize(perm.size());
    r.signs.resize(perm.size());
    for (int i = 0; i < dim(); ++i) {
        r.perm[i] = perm[o.perm[i]];
        r.signs[i] = o.signs[i] * signs[o.perm[i]];
    }
    return r;
}

WeylElement WeylElement::inverse() const {
    WeylElement r;
    r.perm.resize(perm.size());
    r.signs.resize(perm.size());
    for (int i = 0; i < dim(); ++i) {
        r.perm[perm[i]] = i;
        r.signs[perm[i]] = signs[i];
    }
    return r;
}

int WeylElement::perm_sign() const {
    std::vector<bool> seen(perm.size(), false);
    int s = 1;
    for (int i = 0; i < dim(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

int WeylElement::det() const { return perm_sign() * (negative_count() % 2 ? -1 : 1); }

int WeylElement::negative_count() const {
    return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

bool WeylElement::is_identity() const { return *this == identity(dim()); }

WeylElement reflection(const QVec& alpha) {
    Q n2 = norm2(alpha);
    if (sgn(n2) == 0) throw DomainError("reflection in the zero vector");
    const int n = static_cast<int>(alpha.size());
    WeylElement w = WeylElement::identity(n);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        // s(e_i) = e_i - 2 alpha_i alpha / |alpha|^2
        QVec img = scale(alpha, -2 * alpha[i] / n2);
        img[i] += 1;
        int target = -1;
        for (int l = 0; l < n; ++l) {
            if (sgn(img[l]) == 0) continue;
            if (target >= 0 || abs(img[l]) != 1) throw DomainError("reflection is not a signed permutation");
            target = l;
        }
        if (target < 0 || hit[target]) throw DomainError("reflection is not a signed permutation");
        hit[target] = true;
        w.perm[i] = target;
        w.signs[i] = sgn(img[target]);
    }
    return w;
}

QVec act(const WeylElement& w, const QVec& v) { return w.apply(v); }

WeylElement diagram_involution(const RootSystem& rs) {
    WeylElement s = WeylElement::identity(rs.ambient_dim);
    for (const auto& f : rs.factors)
        if (f.label == Label::D) s.signs[f.offset] = -1;
    return s;
}

WeylGroup::WeylGroup(RootSystem rs, bool extended) : rs_(std::move(rs)), extended_(extended) {}

static std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t WeylGroup::order() const {
    std::uint64_t o = 1;
    for (const auto& f : rs_.factors) {
        switch (f.label) {
            case Label::A: o *= factorial(f.rank + 1); break;
            case Label::D: o *= (std::uint64_t{1} << (f.rank - (extended_ ? 0 : 1))) * factorial(f.rank); break;
            default: o *= (std::uint64_t{1} << f.rank) * factorial(f.rank); break;
        }
    }
    return o;
}

bool WeylGroup::contains(const WeylElement& w) const {
    if (w.dim() != dim()) return false;
    for (const auto& f : rs_.factors) {
        int neg = 0;
        for (int i = f.offset; i < f.offset + f.dim; ++i) {
            if (w.perm[i] < f.offset || w.perm[i] >= f.offset + f.dim) return false;
            if (w.signs[i] < 0) ++neg;
        }
        if (f.label == Label::A && neg != 0) return false;
        if (f.label == Label::D && !extended_ && neg % 2 != 0) return false;
    }
    return true;
}

std::vector<WeylElement> WeylGroup::generators() const {
    std::vector<WeylElement> g;
    for (const auto& a : rs_.simple) g.push_back(reflection(a));
    if (extended_)
        for (const auto& f : rs_.factors)
            if (f.label == Label::D) {
                WeylElement s = WeylElement::identity(dim());
                s.signs[f.offset] = -1;
                g.push_back(s);
            }
    return g;
}

void WeylGroup::for_each(const std::function<void(const WeylElement&)>& fn, int max_rank) const {
    if (rs_.rank() > max_rank)
        throw ResourceError("Weyl group enumeration above rank " + std::to_string(max_rank));
    const auto& fs = rs_.factors;
    std::vector<std::vector<std::vector<int>>> sign_sets(fs.size()), perm_sets(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const int d = fs[k].dim;
        if (fs[k].label == Label::A) {
            sign_sets[k].push_back(std::vector<int>(static_cast<std::size_t>(d), 1));
        } else {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
                std::vector<int> s(static_cast<std::size_t>(d));
                int neg = 0;
                for (int i = 0; i < d; ++i) {
                    bool plus = (m >> (d - 1 - i)) & 1;
                    s[i] = plus ? 1 : -1;
                    neg += !plus;
                }
                if (fs[k].label == Label::D && !extended_ && neg % 2) continue;
                sign_sets[k].push_back(std::move(s));
            }
        }
        std::vector<int> p(static_cast<std::size_t>(d));
        std::iota(p.begin(), p.end(), fs[k].offset);
        do perm_sets[k].push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    WeylElement w = WeylElement::identity(dim());
    const std::size_t nf = fs.size();
    // Odometer over (signs of each factor, then perms of each factor), first factor most significant.
    std::vector<std::size_t> idx(2 * nf, 0);
    auto limit = [&](std::size_t slot) {
        return slot < nf ? sign_sets[slot].size() : perm_sets[slot - nf].size();
    };
    for (;;) {
        for (std::size_t k = 0; k < nf; ++k) {
            const auto& s = sign_sets[k][idx[k]];
            const auto& p = perm_sets[k][idx[nf + k]];
            for (int i = 0; i < fs[k].dim; ++i) {
                w.signs[fs[k].offset + i] = s[i];
                w.perm[fs[k].offset + i] = p[i];
            }
        }
        fn(w);
        std::size_t slot = 2 * nf;
        while (slot > 0) {
            --slot;
            if (++idx[slot] < limit(slot)) break;
            idx[slot] = 0;
            if (slot == 0) return;
        }
        if (nf == 0) return;
    }
}

std::vector<WeylElement> WeylGroup::enumerate(int max_rank) const {
    std::vector<WeylElement> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(order(), 1u << 24)));
    for_each([&](const WeylElement& w) { out.push_back(w); }, max_rank);
    return out;
}

int WeylGroup::skew_character(const WeylElement& w) const {
    int chi = w.perm_sign();
    for (const auto& f : rs_.factors) {
        if (f.label == Label::D && extended_) continue;
        for (int i = f.offset; i < f.offset + f.dim; ++i) chi *= w.signs[i];
    }
    return chi;
}

std::string WeylGroup::name() const { return std::string(extended_ ? "W~(" : "W(") + rs_.name() + ")"; }

static int block_size(const PropagationPair& pair) { return pair.small.ambient_dim; }

static bool preserves_block(const WeylElement& w, int b) {
    for (int i = 0; i < b; ++i)
        if (w.perm[i] >= b) return false;
    return true;
}

std::vector<WeylElement> stabilizer(const WeylGroup& g, const PropagationPair& pair) {
    if (g.dim() != pair.large.ambient_dim) throw DomainError("stabilizer: group does not act on the large space");
    const int b = block_size(pair);
    std::vector<WeylElement> out;
    g.for_each([&](const WeylElement& w) {
        if (preserves_block(w, b)) out.push_back(w);
    });
    return out;
}

WeylElement restrict_element(const WeylElement& w, const PropagationPair& pair) {
    const int b = block_size(pair);
    if (!preserves_block(w, b)) throw DomainError("element does not stabilize the subspace");
    WeylElement r;
    r.perm.assign(w.perm.begin(), w.perm.begin() + b);
    r.signs.assign(w.signs.begin(), w.signs.begin() + b);
    return r;
}

WeylElement extend_element(const WeylElement& w, const PropagationPair& pair) {
    if (w.dim() != block_size(pair)) throw DomainError("extend_element: dimension mismatch");
    WeylElement r = WeylElement::identity(pair.large.ambient_dim);
    for (int i = 0; i < w.dim(); ++i) {
        r.perm[i] = w.perm[i];
        r.signs[i] = w.signs[i];
    }
    return r;
}

RestrictionCertificate verify_restriction_theorem(const PropagationPair& pair, int max_rank) {
    RestrictionCertificate cert;
    WeylGroup target(pair.small, true);
    auto target_elems = target.enumerate(max_rank);
    std::set<WeylElement> target_set(target_elems.begin(), target_elems.end());
    cert.target_order = target_set.size();

    auto restricted_set = [&](bool extended) {
        WeylGroup gk(pair.large, extended);
        std::set<WeylElement> out;
        const int b = block_size(pair);
        gk.for_each(
            [&](const WeylElement& w) {
                if (preserves_block(w, b)) out.insert(restrict_element(w, pair));
            },
            max_rank);
        return out;
    };
    auto rw = restricted_set(false);
    auto rwt = restricted_set(true);
    cert.w_restricted_order = rw.size();
    cert.wtilde_restricted_order = rwt.size();
    cert.w_version_equal = rw == target_set;
    cert.wtilde_version_equal = rwt == target_set;

    const bool type_d = pair.label() == Label::D;
    if (type_d && pair.identity()) {
        WeylGroup plain(pair.small, false);
        auto pe = plain.enumerate(max_rank);
        cert.equal_rank_d_exception = rw == std::set<WeylElement>(pe.begin(), pe.end());
        cert.note = "equal rank type D: W_k restricted is W(D_n), index 2 in W~(D_n); sigma is not inner";
    }

    // Canonical preimages: s_{a_{n,j}} -> s_{a_{k,j}}, sigma_n -> a sign change in W_k.
    WeylGroup wk(pair.large, false);
    cert.preimages_ok = true;
    for (int j = 0; j < pair.rank_small(); ++j) {
        WeylElement gen = reflection(pair.small.simple[j]);
        WeylElement pre = reflection(pair.large.simple[j]);
        cert.preimages.emplace_back(gen, pre);
        if (!wk.contains(pre) || !preserves_block(pre, block_size(pair)) || restrict_element(pre, pair) != gen)
            cert.preimages_ok = false;
    }
    if (type_d) {
        WeylElement sigma_n = diagram_involution(pair.small);
        WeylElement pre = diagram_involution(pair.large);
        if (!pair.identity()) pre.signs[pair.large.ambient_dim - 1] = -1;
        cert.preimages.emplace_back(sigma_n, pre);
        bool in_group = pair.identity() ? WeylGroup(pair.large, true).contains(pre) : wk.contains(pre);
        if (!in_group || restrict_element(pre, pair) != sigma_n) cert.preimages_ok = false;
    }

    bool w_ok = cert.w_version_equal || cert.equal_rank_d_exception;
    cert.ok = cert.wtilde_version_equal && w_ok && cert.preimages_ok;
    return cert;
}

}  // namespace pwl
