#pragma once

#include "pwl/linalg.hpp"
#include "pwl/poly.hpp"
#include "pwl/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

namespace pwl {

/// p o w^{-1}
Poly act_poly(const WeylElement& w, const Poly& p);
/// p o w
Poly compose_poly(const Poly& p, const WeylElement& w);
bool is_invariant(const Poly& p, const WeylGroup& g);

Poly reynolds(const Poly& p, const WeylGroup& g);
/// Average over an explicit list of elements (a subgroup).
Poly average(const Poly& p, const std::vector<WeylElement>& elems);

/// Power sum of degree d over coordinates [offset, offset + len) of an nvars ring.
Poly power_sum(int nvars, int offset, int len, int d);

struct InvariantBasis {
    WeylGroup group;
    std::vector<Poly> generators;
    std::vector<int> degrees;
    /// Type A only: p_1 on each factor. Together with `generators` it generates the
    /// invariants of the permutation action on the ambient R^{k+1}.
    std::vector<Poly> extra;
    std::vector<int> extra_degrees;

    std::vector<Poly> all() const;
    std::vector<int> all_degrees() const;
};

InvariantBasis invariant_generators(const WeylGroup& g);

/// Set the padding coordinates to zero.
Poly restrict_poly(const Poly& p, const PropagationPair& pair);

/// q = E(g_1, ..., g_r, t_1, ...) where t are the type-A trace generators.
struct GeneratorExpression {
    Poly poly;
    std::vector<std::string> symbols;
    int generator_count = 0;
    /// The trace symbols set to zero: the identity on the trace-zero hyperplane.
    Poly on_subspace() const;
};

constexpr int kDefaultDegreeBound = 24;

GeneratorExpression express_in_generators(const Poly& q, const InvariantBasis& basis,
                                          int degree_bound = kDefaultDegreeBound);
/// Expand a polynomial in generator symbols back to coordinates.
Poly expand_expression(const Poly& e, const InvariantBasis& basis);

/// Q invariant under W~_k (hence W_k) with Q restricted to a_n equal to q.
Poly lift_invariant(const Poly& q, const PropagationPair& pair);

/// Monomial basis of S / (invariants of positive degree), degree by degree.
class CoinvariantBasis {
public:
    CoinvariantBasis(const WeylGroup& g, int degree_bound);

    const WeylGroup& group() const { return basis_.group; }
    const InvariantBasis& invariants() const { return basis_; }
    int degree_bound() const { return bound_; }
    const std::vector<Poly>& elements() const { return elements_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Exponent>& monomials() const { return monomials_; }
    /// True when the bound reaches the top degree, so the basis has |W| elements.
    bool complete() const;

    /// Solve F_d = sum_i P_i Phi_i for the degree-d part; returns Phi_i per basis element.
    std::vector<Poly> decompose_homogeneous(const Poly& fd, int d) const;

private:
    struct Block;
    const Block& block(int d, const std::vector<int>& parity) const;

    InvariantBasis basis_;
    int bound_;
    std::vector<Poly> elements_;
    std::vector<int> degrees_;
    std::vector<Exponent> monomials_;
    std::vector<std::vector<int>> sign_blocks_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, std::vector<int>>, std::shared_ptr<Block>> cache_;
};

struct RaisTerm {
    Poly P;
    Poly Phi;
};

/// F = sum P_i Phi_i with Phi_i invariant; listed by decreasing degree of P_i, lex within degree.
std::vector<RaisTerm> rais_decompose(const Poly& F, const CoinvariantBasis& basis);
Poly rais_expand(const std::vector<RaisTerm>& terms, int nvars);

/// The lift following the surjectivity proof: naive extension, stabilizer average,
/// Rais decomposition over W~_k and lifting of the averaged coefficients.
Poly constructive_pw_lift(const Poly& G, const PropagationPair& pair);

/// Random polynomial in the generators (and trace generators) of weighted degree <= max_degree.
Poly random_invariant(const InvariantBasis& basis, int max_degree, std::mt19937_64& rng, int coef_range = 3);
Poly random_poly(int nvars, int max_degree, int terms, std::mt19937_64& rng, int coef_range = 5);

/// Exponent vectors beta with sum beta_i w_i = d.
std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& weights, int d);
/// All monomials of total degree d in n variables, in decreasing lex order.
std::vector<Exponent> monomials_of_degree(int n, int d);

}  // namespace pwl
