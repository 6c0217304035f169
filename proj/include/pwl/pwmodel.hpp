#pragma once

#include "pwl/invariants.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace pwl {

struct ExpTerm {
    QVec a;
    Poly p;
};

/// Finite sum of p_j(lambda) * exp<a_j, lambda>, with distinct a_j and nonzero p_j.
class ExpPoly {
public:
    ExpPoly() = default;
    explicit ExpPoly(int dim) : dim_(dim) {}
    static ExpPoly from_poly(const Poly& p);
    static ExpPoly exponential(const QVec& a, const Poly& p);

    int dim() const { return dim_; }
    const std::map<QVec, Poly>& terms() const { return terms_; }
    std::vector<ExpTerm> term_list() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;
    /// The a = 0 coefficient.
    Poly polynomial_part() const;

    void add(const QVec& a, const Poly& p);
    /// max |a_j|^2, the square of the support radius.
    Q radius2() const;

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly operator*(const Q& s) const;
    /// Product with a polynomial.
    ExpPoly times(const Poly& q) const;
    bool operator==(const ExpPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int dim_ = 0;
    std::map<QVec, Poly> terms_;
};

/// (F o w^{-1})(lambda): exponents move to w a, polynomials to p o w^{-1}.
ExpPoly act_exp(const WeylElement& w, const ExpPoly& F);
ExpPoly symmetrize(const ExpPoly& F, const WeylGroup& g);
bool is_invariant(const ExpPoly& F, const WeylGroup& g);

/// Flat restriction to a_n: polynomials restricted, exponents projected orthogonally.
ExpPoly restrict_flat(const ExpPoly& F, const PropagationPair& pair);

/// lambda -> p(lambda + v)
Poly shift(const Poly& p, const QVec& v);
/// Product of <lambda, alpha> over the positive roots, one root per line (alpha with 2 alpha not a root).
Poly varpi(const RootSystem& rs);
/// Phi(w(lambda + rho) - rho) = chi(w) Phi(lambda) for the group generators.
bool is_rho_skew(const Poly& Phi, const WeylGroup& g, const QVec& rho);
/// Every <lambda, alpha> divides Phi(lambda - rho).
bool shifted_vanishing_check(const Poly& Phi, const RootSystem& rs, const QVec& rho);

/// rho-shifted skew polynomial, stored through its image F = T(Phi), which is invariant.
/// Phi itself is materialized on demand.
class RhoShiftedSkew {
public:
    /// Phi = varpi(lambda + rho) F(lambda + rho) / varpi(rho).
    static RhoShiftedSkew from_invariant(const Poly& F, const WeylGroup& g, const QVec& rho);
    /// Checks the skew condition and divides the shifted numerator by varpi.
    static RhoShiftedSkew from_poly(const Poly& Phi, const WeylGroup& g, const QVec& rho);

    const Poly& t_image() const { return F_; }
    const WeylGroup& group() const { return *group_; }
    const QVec& rho() const { return rho_; }
    const Poly& expanded() const;
    Q eval(const QVec& lambda) const;

private:
    RhoShiftedSkew(Poly F, std::shared_ptr<const WeylGroup> g, QVec rho);
    struct Lazy {
        std::once_flag once;
        Poly value;
    };
    Poly F_;
    std::shared_ptr<const WeylGroup> group_;
    QVec rho_;
    std::shared_ptr<Lazy> lazy_;
};

/// Raw (1/|g|) sum_w chi(w) F(w(lambda + rho) - rho).
Poly rho_skew_symmetrize_raw(const Poly& F, const WeylGroup& g, const QVec& rho);
RhoShiftedSkew rho_skew_symmetrize(const Poly& F, const WeylGroup& g, const QVec& rho);

/// T(Phi) = (varpi(rho)/varpi(lambda)) Phi(lambda - rho), by exact division.
Poly op_T(const RhoShiftedSkew& Phi);
Poly op_T_poly(const Poly& Phi, const RootSystem& rs, const QVec& rho);
RhoShiftedSkew op_T_inv(const Poly& F, const WeylGroup& g, const QVec& rho);

/// T_n^{-1}(T_k(Phi) restricted to a_n), with the level-n group W~_n and rho of pair.small.
RhoShiftedSkew restrict_rho_shifted(const RhoShiftedSkew& Phi, const PropagationPair& pair);

/// Preimage of Psi under restrict_rho_shifted, built with constructive_pw_lift.
RhoShiftedSkew rho_shifted_lift(const RhoShiftedSkew& Psi, const PropagationPair& pair);

}  // namespace pwl
