#pragma once

#include "pwl/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pwl {

/// Signed permutation: w(e_i) = signs[i] * e_{perm[i]} (0-based).
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;

    static WeylElement identity(int n);

    int dim() const { return static_cast<int>(perm.size()); }
    QVec apply(const QVec& v) const;
    /// (*this) o other
    WeylElement compose(const WeylElement& other) const;
    WeylElement inverse() const;
    int perm_sign() const;
    /// Determinant as an orthogonal map.
    int det() const;
    int negative_count() const;
    bool is_identity() const;

    bool operator==(const WeylElement& o) const { return signs == o.signs && perm == o.perm; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    /// Canonical order: signs first, then the one-line form of perm.
    bool operator<(const WeylElement& o) const {
        if (signs != o.signs) return signs < o.signs;
        return perm < o.perm;
    }
};

/// Reflection in alpha; throws if it is not a signed permutation.
WeylElement reflection(const QVec& alpha);
QVec act(const WeylElement& w, const QVec& v);

/// Identity except on type-D factors, where it flips the sign of the factor's first coordinate.
WeylElement diagram_involution(const RootSystem& rs);

constexpr int kDefaultMaxRank = 8;

class WeylGroup {
public:
    WeylGroup(RootSystem rs, bool extended);

    const RootSystem& root_system() const { return rs_; }
    bool extended() const { return extended_; }
    int dim() const { return rs_.ambient_dim; }

    std::uint64_t order() const;
    bool contains(const WeylElement& w) const;
    /// Simple reflections, then sigma for each type-D factor when extended.
    std::vector<WeylElement> generators() const;

    /// Visit every element once, in canonical order.
    void for_each(const std::function<void(const WeylElement&)>& fn, int max_rank = kDefaultMaxRank) const;
    std::vector<WeylElement> enumerate(int max_rank = kDefaultMaxRank) const;

    /// Sign character used for skew symmetry: det(w), except that on extended
    /// type-D factors sigma counts as +1 (it fixes the product of positive roots).
    int skew_character(const WeylElement& w) const;

    std::string name() const;

private:
    RootSystem rs_;
    bool extended_;
};

/// Elements of g (acting on a_k) that map the embedded a_n onto itself.
std::vector<WeylElement> stabilizer(const WeylGroup& g, const PropagationPair& pair);
/// Restriction of a stabilizing element to a_n, as a signed permutation of the small coordinates.
WeylElement restrict_element(const WeylElement& w, const PropagationPair& pair);
/// Canonical inclusion: first block acts as w, the rest is fixed.
WeylElement extend_element(const WeylElement& w, const PropagationPair& pair);

struct RestrictionCertificate {
    bool ok = false;
    std::uint64_t target_order = 0;            // |W~_n|
    std::uint64_t w_restricted_order = 0;      // |W_{k,a_n} restricted|
    std::uint64_t wtilde_restricted_order = 0; // |W~_{k,a_n} restricted|
    bool w_version_equal = false;
    bool wtilde_version_equal = false;
    /// Equal-rank type D: W_k restricted is W(D_n), index 2 in W~_n.
    bool equal_rank_d_exception = false;
    bool preimages_ok = false;
    std::vector<std::pair<WeylElement, WeylElement>> preimages; // (generator of W~_n, element of W_k)
    std::string note;
};

RestrictionCertificate verify_restriction_theorem(const PropagationPair& pair, int max_rank = kDefaultMaxRank);

}  // namespace pwl
