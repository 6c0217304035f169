#pragma once

#include "pwl/pwmodel.hpp"

#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace pwl {

/// Finitely supported coefficients on the spherical lattice, keyed by index tuples I.
struct FourierData {
    int rank = 0;
    std::map<std::vector<int>, Q> coeffs;

    FourierData() = default;
    explicit FourierData(int r) : rank(r) {}
    void set(const std::vector<int>& I, const Q& v);
    Q at(const std::vector<int>& I) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const FourierData& o) const { return rank == o.rank && coeffs == o.coeffs; }
};

/// deg(mu) = varpi(mu + rho) / varpi(rho) over the positive roots of a full system (multiplicities ignored).
struct DimPolynomial {
    RootSystem full;
    QVec rho_full;
    Q varpi_rho;

    Q eval(const QVec& mu) const;
    Poly poly() const;
};

DimPolynomial dim_polynomial(const RootSystem& full);

using DegreeFunction = std::function<Q(const std::vector<int>&)>;

/// I -> dim V_nu of the compact group, nu = sum I_j omega_j.
DegreeFunction unitary_degree(const RootSystem& U);
/// I -> (dim V_nu)^2, the dimension of the spherical representation V_nu (x) V_nu^* of U x U.
DegreeFunction group_degree(const RootSystem& U);

/// sum_I deg(I) |a_I|^2
Q ell2d_norm(const FourierData& data, const DegreeFunction& deg);

/// Points mu_I + rho -> values.
std::map<QVec, Q> shift_S_rho(const FourierData& data, const RootSystem& rs, const QVec& rho);
FourierData unshift_S_rho(const std::map<QVec, Q>& shifted, const RootSystem& rs, const QVec& rho);
/// Index of a spherical weight; throws if mu is not in the lattice.
std::vector<int> index_of_weight(const QVec& mu, const RootSystem& rs);

/// Weights of V_highest with multiplicities (Freudenthal).
std::map<QVec, long> weight_multiplicities(const RootSystem& rs, const QVec& highest,
                                           std::size_t max_weights = 400000);
long freudenthal_dimension(const RootSystem& rs, const QVec& highest);
QVec dominant_conjugate(const RootSystem& rs, const QVec& v);

/// U x U / diag U in doubled coordinates R^{2d}: a = {(H, -H)}.
struct GroupManifold {
    RootSystem U;
    RootSystem full;        ///< positive roots (alpha, 0) and (0, -alpha)
    RootSystem restricted;  ///< (alpha/2, -alpha/2) with multiplicity 2
    std::vector<QVec> full_fundamental;
    std::vector<QVec> xi;   ///< (omega_j, -omega_j)
    QVec rho;               ///< full and restricted rho coincide
};

GroupManifold group_manifold(Label l, int rank);
bool is_spherical(const QVec& mu, const GroupManifold& gm);
QVec full_weight(const std::vector<int>& I, const GroupManifold& gm);

/// Central coefficients keyed by 2r-tuples over the fundamental weights of U x U
/// -> spherical coefficients keyed by r-tuples; non-spherical weights vanish.
FourierData q_map(const FourierData& central, const GroupManifold& gm);

struct StrongerIdentityReport {
    bool ok = true;
    std::size_t points = 0;
    std::size_t dropped = 0;
    std::vector<std::string> failures;
};

/// S_rho(Q f^vee)(mu + rho) = T(F f)(mu + rho) on the spherical lattice:
/// left side from q_map and Freudenthal dimensions, right side from varpi.
StrongerIdentityReport stronger_identity_check(const FourierData& central, const GroupManifold& gm);

struct CknResult {
    FourierData data;
    std::map<std::vector<int>, Q> deg;
    /// Level-n extension nu -> Phi(iota(nu) - rho_k + iota(rho_n)); composes exactly along towers.
    Poly extension;
};

/// Coefficient at I: Phi(iota(mu_{I,n}) - rho_k + iota(rho_n)), restricted rho's with multiplicities.
CknResult c_k_n(const Poly& Phi, const PropagationPair& pair, const std::vector<std::vector<int>>& truncation,
                const DegreeFunction& deg_n = nullptr);

/// All index tuples with entries in [0, bound].
std::vector<std::vector<int>> index_box(int rank, int bound);

/// sum_I data(I) chi_{nu_I}(exp 2 pi i t), t in turns, nu_I = sum I_j omega_j of U.
std::complex<double> evaluate_central(const FourierData& data, const RootSystem& U, const QVec& turns);
/// Weyl character formula with exact singularity detection and a derivative fallback.
std::complex<double> character_value(const RootSystem& U, const QVec& highest, const QVec& turns);

/// Multiplicity of V_{mu_k restricted} in V_{mu_k} restricted to the smaller group.
long branch_multiplicity(const QVec& mu_k, const PropagationPair& full_pair);
/// Same for the spherical representation of U_k x U_k with index I_k, restricted to U_n x U_n.
/// Computed as the square of the multiplicity for U_k restricted to U_n.
long group_branch_multiplicity(const std::vector<int>& I_k, const GroupManifold& large, const GroupManifold& small);
/// The same by restricting the full character of U_k x U_k on the doubled system (slow).
long group_branch_multiplicity_doubled(const std::vector<int>& I_k, const GroupManifold& large,
                                       const GroupManifold& small);

}  // namespace pwl
