#pragma once

#include "pwl/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pwl {

constexpr int kMaxVars = 16;
constexpr int kMaxExponent = 255;

/// Exponent vector; lexicographic order with x0 most significant.
struct Exponent {
    std::array<std::uint8_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    std::uint8_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    std::uint8_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    bool operator<(const Exponent& o) const { return e < o.e; }
    bool operator==(const Exponent& o) const { return e == o.e; }
    bool operator!=(const Exponent& o) const { return e != o.e; }
    bool divides(const Exponent& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
};

Exponent exponent_of(const std::vector<int>& exps);

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using Terms = std::map<Exponent, Q>;

    Poly() = default;
    explicit Poly(int nvars);

    static Poly constant(int nvars, const Q& c);
    static Poly variable(int nvars, int i);
    static Poly monomial(int nvars, const std::vector<int>& exps, const Q& c = 1);
    /// c_0 + sum_i coeffs[i] x_i
    static Poly linear(const QVec& coeffs, const Q& c0 = 0);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Q coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Q& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Q& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Q& s) { return a *= s; }
    friend Poly operator*(const Q& s, Poly a) { return a *= s; }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int k) const;
    Q eval(const QVec& x) const;

    /// Replace x_i by images[i]; all images must share one variable count.
    Poly substitute(const std::vector<Poly>& images) const;
    /// x_i -> signs[i] * x_{targets[i]} for a permutation `targets`.
    Poly signed_permute(const std::vector<int>& targets, const std::vector<int>& signs) const;

    Poly homogeneous_part(int d) const;
    std::vector<int> degrees_present() const;

    /// Same terms in a ring with more variables.
    Poly extend(int nvars) const;
    /// Set variables with index >= nvars to zero and drop them.
    Poly truncate(int nvars) const;

    /// Multivariate division by lex order: *this = q*g + r.
    std::pair<Poly, Poly> divmod(const Poly& g) const;
    /// Exact division; throws TheoremViolation on nonzero remainder.
    Poly exact_div(const Poly& g) const;

    std::string to_string() const;

private:
    int nvars_ = 0;
    Terms terms_;
};

}  // namespace pwl
