#pragma once

#include "pwl/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pwl {

/// Outcome of a named verification suite.
struct SuiteReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> failures;
    json detail = json::object();

    void expect(bool cond, const std::string& what);
    void merge(const SuiteReport& o);
    json to_json() const;
};

SuiteReport restriction_weyl_suite(Label l, int from, int to, int max_rank = kDefaultMaxRank);

/// Random W~_n-invariants, lifted by generators and by the constructive route.
SuiteReport lift_roundtrip_suite(Label l, int from, int to, int samples, int max_degree, std::uint64_t seed);

/// Random polynomials expanded through the coinvariant basis of g.
SuiteReport rais_suite(const WeylGroup& g, int samples, int max_degree, std::uint64_t seed);

/// T o T^{-1} and T^{-1} o T on random data, with the shifted vanishing (divisibility) check.
SuiteReport t_calculus_suite(const RootSystem& rs, int samples, std::uint64_t seed);

/// Lift random rho-shifted targets from the base to the top of the tower, restrict back, compare.
SuiteReport rho_restriction_suite(const PropagationTower& tower, int samples, std::uint64_t seed);

/// Injectivity radii for the compact groups and by Sigma_2 type.
SuiteReport injectivity_suite();

/// Closed forms of Omega*, Omega* inside Omega, inradius.
SuiteReport omega_star_suite(const RootSystem& rs);
SuiteReport intersection_suite(Label l, int from, int to);

/// Rank and dimension of every table row against the closed-form columns.
SuiteReport table_suite(int max_j, int max_pq);

/// Random central coefficient sets on U x U / U.
SuiteReport stronger_identity_suite(Label l, int rank, int samples, std::uint64_t seed);

/// Group-manifold branching from level k to level n for every I_k with |I_k| <= bound.
SuiteReport branching_suite(Label l, int n, int k, int bound);

/// Composition of L, eta o nu = L o eta, and ell2d preservation with the group-case provider.
SuiteReport limits_suite(const PropagationTower& tower, int samples, std::uint64_t seed);

/// SU(2) in SU(3) projection oracle against the provider for a + b <= max_sum.
SuiteReport oracle_suite(int max_sum, double tol);

/// Coherent extension of nonzero base values through every level, all three value kinds.
SuiteReport nonvanishing_suite(const PropagationTower& tower, std::uint64_t seed);

}  // namespace pwl
