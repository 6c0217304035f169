#pragma once

#include "pwl/linalg.hpp"
#include "pwl/rootsys.hpp"

#include <string>
#include <vector>

namespace pwl {

/// <normal, x> < bound * pi
struct Inequality {
    QVec normal;
    Q bound;
};

/// Open polytope in a, all lengths in units of pi. `equalities` cut out a (trace zero for type A).
struct Polytope {
    int dim = 0;
    std::vector<Inequality> ineqs;
    std::vector<QVec> equalities;

    bool contains(const QVec& x) const;
    /// max <c, x> over the closure; throws if unbounded.
    Q support(const QVec& c) const;
};

/// |alpha(X)| < pi/2 for every root.
Polytope omega(const RootSystem& rs);
/// Omega* per factor: Omega for Sigma_2 of type A or C, the W-orbit of sigma = 2 sum alpha_j otherwise.
Polytope omega_star(const RootSystem& rs);
/// Explicit descriptions: A, C and BC as Omega, B as |x_j| < pi/4, D as |x_i +- x_j| < pi/4.
Polytope omega_star_closed(const RootSystem& rs);

/// Closure of inner lies in closure of outer (one LP per inequality of outer).
bool polytope_contains(const Polytope& outer, const Polytope& inner);
bool polytope_equal(const Polytope& a, const Polytope& b);
/// Inequalities rescaled to bound 1/2 and deduplicated.
std::vector<QVec> normalized_normals(const Polytope& p);
/// Pull back along the embedding a_n -> a_k.
Polytope restrict_polytope(const Polytope& pk, const PropagationPair& pair);

/// Vertices of the closure by brute force over subsets of inequalities (small polytopes only).
std::vector<QVec> vertices(const Polytope& p);

struct IntersectionCertificate {
    bool ok = false;
    bool small_in_restricted = false;
    bool restricted_in_small = false;
    /// Type A: max x_i over the closure of Omega*_n is r_n / (2 (r_n + 1)) < 1/2.
    bool a_chain_ok = true;
    /// Type A at small rank: the same extremes found by vertex enumeration.
    bool vertex_check_ok = true;
    bool vertex_check_run = false;
    std::string note;
};

IntersectionCertificate check_intersection(const PropagationPair& pair);

/// A length known through its square; value is set when the square root is rational.
struct Radius {
    Q squared;
    bool rational = false;
    Q value;
};

/// Largest ball around 0 inside the polytope, min of bound / |normal|.
Radius inradius(const Polytope& p);
/// sup |X| over Omega, from the vertices omega_j^vee / (2 c_j) of the fundamental simplex.
Radius omega_circumradius(const RootSystem& rs);

struct InjectivityRadius {
    Q squared;  ///< in units of pi^2
    std::string text;
};

/// sqrt(2) pi when Sigma_2 is of type A or C, 2 pi when it is of type B or D.
InjectivityRadius injectivity_radius_sigma2(Label sigma2);
InjectivityRadius injectivity_radius(const SpaceDescriptor& d);
/// Type of Sigma_2 of an irreducible system (BC gives C).
Label sigma2_type(const RootSystem& rs);

struct DiskRemark {
    Q circum2;
    Q quarter_injectivity2;
    bool holds = false;
};

/// Is Omega inside the open disk of radius R/4, R the injectivity radius?
DiskRemark disk_remark(const RootSystem& rs);

}  // namespace pwl
