#pragma once

// Exact arithmetic in R = C x Z.
//
// An element mu = (b + ci, v) has rational b, c and integer v. Addition is
// componentwise and the product is
//
//     mu1 mu2 = (b1 b2 + i (b1 c2 + c1 v2), v1 v2),
//
// which is associative but not commutative. Under mu -> [b 0; c v] the product
// reverses the order of matrix multiplication: M(mu1 mu2) = M(mu2) M(mu1).
// Numerically (g^mu1)^mu2 = g^(mu1 mu2) for every g != 0.

#include <complex>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ttk {

using Rational = mpq_class;
using Integer = mpz_class;

struct RingElem {
    Rational b;
    Rational c;
    Integer v;

    RingElem() = default;
    RingElem(Rational b_, Rational c_, Integer v_)
        : b(std::move(b_)), c(std::move(c_)), v(std::move(v_)) {
        b.canonicalize();
        c.canonicalize();
    }

    static RingElem zero() { return {}; }
    static RingElem one() { return {1, 0, 1}; }
    // (v + 0i, v): the image of Z under the diagonal embedding.
    static RingElem diag(long v) { return {v, 0, v}; }

    bool is_zero() const { return sgn(b) == 0 && sgn(c) == 0 && sgn(v) == 0; }

    RingElem operator-() const { return {-b, -c, -v}; }
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);

    friend RingElem operator+(RingElem a, const RingElem& o) { return a += o; }
    friend RingElem operator-(RingElem a, const RingElem& o) { return a -= o; }
    friend RingElem operator*(const RingElem& x, const RingElem& y);

    friend bool operator==(const RingElem& x, const RingElem& y) {
        return x.b == y.b && x.c == y.c && x.v == y.v;
    }
};

// Lexicographic order on (b, c, v). Only used to sort weights deterministically;
// unrelated to the partial orders below.
bool lex_less(const RingElem& x, const RingElem& y);

struct LexLess {
    bool operator()(const RingElem& x, const RingElem& y) const { return lex_less(x, y); }
};

// mu >=_c 0  iff  b > 0, or b = c = v = 0.
bool geq_c_zero(const RingElem& mu);
// mu >=_s 0  iff  c = 0, b in N, and b + v, b - v in 2N.
bool geq_s_zero(const RingElem& mu);

inline bool geq_c(const RingElem& x, const RingElem& y) { return geq_c_zero(x - y); }
inline bool geq_s(const RingElem& x, const RingElem& y) { return geq_s_zero(x - y); }

enum class Flavor { continuous, smooth };

inline bool geq(Flavor f, const RingElem& x, const RingElem& y) {
    return f == Flavor::continuous ? geq_c(x, y) : geq_s(x, y);
}

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

// g^mu = |g|^(b + ci) (g/|g|)^v with the principal modulus and argument.
std::complex<double> power_eval(std::complex<double> g, const RingElem& mu);

std::string to_string(const RingElem& mu);
std::ostream& operator<<(std::ostream& os, const RingElem& mu);

// ---------------------------------------------------------------------------
// R^n

using RVector = std::vector<RingElem>;

RVector zero_vector(std::size_t n);
RVector operator+(const RVector& x, const RVector& y);
RVector operator-(const RVector& x, const RVector& y);
RVector operator-(const RVector& x);
// (lambda alpha)^k = lambda * alpha^k
RVector scale_left(const RingElem& lambda, const RVector& alpha);
bool is_zero(const RVector& x);

// <alpha, beta> = sum_k alpha^k beta^k. Throws DimensionError on length mismatch.
RingElem bracket(const RVector& alpha, const RVector& beta);

std::string to_string(const RVector& x);

// Exact rational parsing: '-'? digits ('/' digits)?; a leading U+2212 minus
// sign is accepted as well. Throws InputError.
Rational parse_rational(const std::string& text);
// Canonical "p/q" or "p" form.
std::string format_rational(const Rational& q);

}  // namespace ttk
