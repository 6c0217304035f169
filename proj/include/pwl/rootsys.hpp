#pragma once

#include "pwl/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace pwl {

enum class Label { A, B, C, D, BC };

std::string label_name(Label l);
Label parse_label(const std::string& s);

struct Family {
    Label label;
    int rank;
};

/// Smallest rank for which the simple-root numbering is defined: A1, B2, C3, D4, BC1.
int minimum_rank(Label l);
bool admissible(const Family& f);

/// One irreducible factor, living on coordinates [offset, offset + dim).
struct Factor {
    Label label;
    int rank;
    int offset;
    int dim;
};

/// Classical root system in f-coordinates. Only positive roots are stored;
/// the negative ones and their multiplicities follow by symmetry.
struct RootSystem {
    int ambient_dim = 0;
    std::vector<Factor> factors;
    std::vector<QVec> positive;
    std::vector<int> mult;
    std::vector<QVec> simple;

    int rank() const { return static_cast<int>(simple.size()); }
    bool irreducible() const { return factors.size() == 1; }
    bool reduced() const;
    /// Label and rank of the single factor; throws for products.
    Family family() const;

    std::vector<QVec> roots() const;
    int positive_index(const QVec& v) const;
    bool is_root(const QVec& v) const;
    int multiplicity(const QVec& root) const;
    std::string name() const;

    /// Overlay multiplicities by squared root length within each factor.
    void set_multiplicity_by_length(const std::map<Q, int>& m);
};

/// Strict builder: rank must satisfy the numbering side conditions.
RootSystem build_root_system(const Family& f);
/// Also allows the small-rank coincidences B1, C1, C2, D2, D3.
RootSystem build_root_system_any(Label l, int rank);
RootSystem product(const std::vector<RootSystem>& parts);

/// (Sigma_{1/2}, Sigma_2): indivisible and unmultipliable roots.
std::pair<RootSystem, RootSystem> reduced_systems(const RootSystem& rs);

QVec rho(const RootSystem& rs);

/// Coordinates of v in the basis of simple roots; throws if v is outside their span.
QVec simple_coordinates(const RootSystem& rs, const QVec& v);

struct HighestRoot {
    QVec root;
    QVec coefficients;
};
HighestRoot highest_root(const RootSystem& rs);

/// Dual basis for <xi_i, a_j>/<a_j, a_j> = delta_ij in the span of the simple roots.
/// Non-reduced input is replaced by its Sigma_2.
std::vector<QVec> class_one_fundamental_weights(const RootSystem& rs);
/// Ordinary fundamental weights, 2<w_i, a_j>/<a_j, a_j> = delta_ij.
std::vector<QVec> fundamental_weights(const RootSystem& rs);

/// (mu, a)/(a, a) is a nonnegative integer for every positive root a.
bool lambda_plus_member(const QVec& mu, const RootSystem& rs);

struct SphericalLatticePoint {
    std::vector<int> I;
    QVec weight;
};
SphericalLatticePoint mu_of_index(const std::vector<int>& I, const RootSystem& rs);

/// dim M = rank + sum of multiplicities over positive roots.
int manifold_dimension(const RootSystem& rs);

struct SpaceDescriptor {
    int row = 0;
    std::string cartan_class;
    std::string compact_group;
    std::string isotropy;
    int j = 0, p = 0, q = 0;
    RootSystem rs;
    int rank = 0;
    int dim = 0;
    bool group_manifold = false;
    std::string system() const { return rs.name(); }
};

/// Rows 1-11 of the classification table of irreducible classical symmetric spaces.
/// Rows 5, 8, 10 take (p, q); the others take j.
SpaceDescriptor space_descriptor(int row, int j, int p = 0, int q = 0);

/// Inclusion a_n -> a_k of a propagation (simple roots added at the high-index end).
struct PropagationPair {
    RootSystem small;
    RootSystem large;

    Label label() const { return small.factors[0].label; }
    int rank_small() const { return small.rank(); }
    int rank_large() const { return large.rank(); }
    bool identity() const { return rank_small() == rank_large(); }

    QVec embed(const QVec& x) const;
    /// Orthogonal projection of a vector of a_k onto the image of a_n, in small coordinates.
    QVec restrict_vec(const QVec& y) const;
};

/// Extend rs_n to rank `target_rank`; multiplicities copied by root length, 1 where unknown.
PropagationPair propagate(const RootSystem& rs_n, int target_rank);
/// Pair two explicitly built systems, checking the propagation relation.
PropagationPair make_pair(const RootSystem& small, const RootSystem& large);

}  // namespace pwl
