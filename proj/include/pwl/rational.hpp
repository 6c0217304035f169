#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pwl {

using Q = mpq_class;
using QVec = std::vector<Q>;

/// n/d in lowest terms. The two-argument mpq_class constructor does not reduce.
Q frac(long n, long d);

/// Canonical text form: "p/q" or "p".
std::string to_string(const Q& q);

/// Accepts "p/q", "p" and finite decimals such as "-0.25".
Q parse_rational(const std::string& s);

QVec qvec(std::initializer_list<long> xs);
QVec zeros(std::size_t n);
QVec unit(std::size_t n, std::size_t i, const Q& scale = 1);

Q dot(const QVec& a, const QVec& b);
Q norm2(const QVec& a);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Q& s);
QVec neg(const QVec& a);
bool is_zero(const QVec& a);
bool is_integer(const Q& q);
Q sum(const QVec& a);

/// "(a,b,c)" with canonical rationals; used as map keys in JSON.
std::string key(const QVec& v);

/// If q is the square of a rational, return true and write the root.
bool rational_sqrt(const Q& q, Q& root);

double to_double(const Q& q);

}  // namespace pwl
