#pragma once

#include "pwl/compact_fourier.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace pwl {

/// One family at increasing ranks, each level a propagation of the previous one.
class PropagationTower {
public:
    /// Multiplicities are overlaid on the base by squared root length and copied upward.
    PropagationTower(Label label, std::vector<int> levels, std::map<Q, int> mult_preset = {});

    Label label() const { return label_; }
    const std::vector<int>& levels() const { return levels_; }
    const std::map<Q, int>& mult_preset() const { return preset_; }
    std::size_t size() const { return levels_.size(); }
    bool has_level(int rank) const;
    const RootSystem& system(int rank) const;
    /// Pair for tower levels n <= k.
    PropagationPair pair(int n, int k) const;
    /// Tower levels strictly between n and k, followed by k.
    std::vector<int> path(int n, int k) const;

private:
    std::size_t index_of(int rank) const;
    Label label_;
    std::vector<int> levels_;
    std::map<Q, int> preset_;
    std::vector<RootSystem> systems_;
};

enum class LiftRule { Generator, Padding };

std::string lift_rule_name(LiftRule r);
LiftRule parse_lift_rule(const std::string& s);

using TowerValue = std::variant<Poly, ExpPoly, FourierData>;

/// A value at one level, extended to all levels by a named rule.
/// Generator: invariant polynomials, lifted through the generators and restricted to a_n.
/// Padding: coordinates or indices padded with zeros, then truncated.
struct CoherentElement {
    int base_level = 0;
    TowerValue base_value;
    LiftRule rule = LiftRule::Generator;
};

TowerValue project(const CoherentElement& e, const PropagationTower& tower, int level);
bool is_zero_value(const TowerValue& v);
bool values_equal(const TowerValue& a, const TowerValue& b);

/// a * sqrt(s) with s > 0; compared through signed squares.
struct SqrtQ {
    Q a;
    Q s = 1;
    Q signed_square() const { return sgn(a) * a * a * s; }
    bool operator==(const SqrtQ& o) const { return signed_square() == o.signed_square(); }
};

struct RadicalData {
    int rank = 0;
    std::map<std::vector<int>, SqrtQ> coeffs;

    static RadicalData from(const FourierData& d);
    bool operator==(const RadicalData& o) const { return rank == o.rank && coeffs == o.coeffs; }
};

/// c_{m,n,mu} between consecutive tower levels; longer steps are products of these.
class CProvider {
public:
    virtual ~CProvider() = default;
    /// c^2 for the step n -> k (consecutive tower levels), index I at level k.
    virtual Q step_squared(int k, int n, const std::vector<int>& I_k) const = 0;
};

/// Group manifolds U x U / U: c^2 = dim V_{nu restricted} / dim V_nu, the squared length of
/// the projection of the K_k-fixed unit vector onto the cyclic G_n-module of the highest weight vector.
class GroupCaseProvider : public CProvider {
public:
    explicit GroupCaseProvider(Label label) : label_(label) {}
    Q step_squared(int k, int n, const std::vector<int>& I_k) const override;
    Q unitary_dim(int rank, const std::vector<int>& I) const;

private:
    Label label_;
};

/// c^2_{k,n} for tower levels n <= k and an index at level n (padded), as the product of steps.
Q chain_squared(const PropagationTower& tower, const CProvider& p, int k, int n, const std::vector<int>& I_n);

/// deg(pi_mu) at a level.
using LevelDegree = std::function<Q(int rank, const std::vector<int>& I)>;
/// dim V_nu of U_rank. With this degree the group-case L scaling is 1.
LevelDegree group_case_degree(Label label);
/// (dim V_nu)^2, the Plancherel degree of V_nu (x) V_nu^* as a U x U module.
LevelDegree group_plancherel_degree(Label label);

std::vector<int> pad_index(const std::vector<int>& I, int rank);

/// I_n -> (I_n, 0) with factor c_{m,n} sqrt(deg_m / deg_n).
RadicalData L_map(const RadicalData& d, const PropagationTower& tower, int n, int m, const CProvider& p,
                  const LevelDegree& deg);
/// Pure reindexing I_n -> (I_n, 0).
RadicalData nu_map(const RadicalData& d, int m_rank);
/// Factor c_{n,base} sqrt(deg_n); indices must live on the base level.
RadicalData eta_map(const RadicalData& d, const PropagationTower& tower, int n, const CProvider& p,
                    const LevelDegree& deg);
/// sum deg(I) a^2 s
Q ell2d_norm(const RadicalData& d, int rank, const LevelDegree& deg);

enum class MapKind { PFlat, PRho, Ckn, L };
std::string map_kind_name(MapKind k);
MapKind parse_map_kind(const std::string& s);

struct ComposeCertificate {
    bool ok = true;
    MapKind kind = MapKind::PFlat;
    int checks = 0;
    std::vector<std::string> failures;
};

/// Two-step versus one-step maps on every triple of tower levels, random inputs.
ComposeCertificate compose_check(const PropagationTower& tower, MapKind kind, int samples, std::uint64_t seed);

struct CommutationCertificate {
    bool ok = true;
    int checks = 0;
    std::vector<std::string> failures;
};

/// eta_m o nu_{m,n} = L_{m,n} o eta_n on random data supported on the base level, all level pairs.
CommutationCertificate eta_nu_check(const PropagationTower& tower, int samples, std::uint64_t seed);

/// ell2d norm of L_{m,n}(d) against that of d, all level pairs, with the group-case provider and degree.
CommutationCertificate l_norm_check(const PropagationTower& tower, int samples, std::uint64_t seed,
                                    const LevelDegree& deg);

struct ProjectionOracle {
    int a = 0, b = 0;
    double dim_V = 0, dim_W = 0;
    double c_oracle = 0;
    double c_provider = 0;
};

/// SU(2) in SU(3): V = harmonic part of Sym^a(C^3*) (x) Sym^b(C^3) with the Fock inner product,
/// W = SU(2)-module generated by the highest weight vector w_1^a z_3^b,
/// c = tr(P_V P_W) / sqrt(dim V dim W).
ProjectionOracle su2_su3_projection_oracle(int a, int b);

}  // namespace pwl
