#include "pwl/rational.hpp"

#include "pwl/errors.hpp"

#include <cassert>

namespace pwl {

Q frac(long n, long d) {
    if (d == 0) throw DomainError("zero denominator");
    Q q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw DomainError("empty rational literal");
    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
        if (s.find('/') != std::string::npos) throw DomainError("bad rational literal: " + raw);
        bool negative = s[0] == '-';
        std::string digits = s.substr(negative || s[0] == '+' ? 1 : 0);
        dot_pos = digits.find('.');
        std::string whole = digits.substr(0, dot_pos);
        std::string frac = digits.substr(dot_pos + 1);
        if (whole.empty()) whole = "0";
        for (char c : whole + frac)
            if (c < '0' || c > '9') throw DomainError("bad rational literal: " + raw);
        mpz_class num(whole + frac, 10), den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Q out(num, den);
        out.canonicalize();
        return negative ? Q(-out) : out;
    }
    Q out;
    if (out.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw DomainError("bad rational literal: " + raw);
    if (out.get_den() == 0) throw DomainError("zero denominator: " + raw);
    out.canonicalize();
    return out;
}

QVec qvec(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

QVec zeros(std::size_t n) { return QVec(n, Q(0)); }

QVec unit(std::size_t n, std::size_t i, const Q& s) {
    QVec v(n, Q(0));
    v[i] = s;
    return v;
}

Q dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch in dot");
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

Q norm2(const QVec& a) { return dot(a, a); }

QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch in add");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch in sub");
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

QVec scale(const QVec& a, const Q& s) {
    QVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
    return c;
}

QVec neg(const QVec& a) { return scale(a, Q(-1)); }

bool is_zero(const QVec& a) {
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

Q sum(const QVec& a) {
    Q s = 0;
    for (const auto& x : a) s += x;
    return s;
}

std::string key(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

bool rational_sqrt(const Q& q, Q& root) {
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Q(rn, rd);
    root.canonicalize();
    return true;
}

double to_double(const Q& q) { return q.get_d(); }

}  // namespace pwl
