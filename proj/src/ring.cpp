#include "ttk/ring.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "ttk/error.hpp"

namespace ttk {

RingElem& RingElem::operator+=(const RingElem& o) {
    b += o.b;
    c += o.c;
    v += o.v;
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    b -= o.b;
    c -= o.c;
    v -= o.v;
    return *this;
}

RingElem operator*(const RingElem& x, const RingElem& y) {
    RingElem r;
    r.b = x.b * y.b;
    r.c = x.b * y.c + x.c * y.v;
    r.v = x.v * y.v;
    return r;
}

bool lex_less(const RingElem& x, const RingElem& y) {
    if (int s = cmp(x.b, y.b); s != 0) return s < 0;
    if (int s = cmp(x.c, y.c); s != 0) return s < 0;
    return cmp(x.v, y.v) < 0;
}

bool geq_c_zero(const RingElem& mu) {
    return sgn(mu.b) > 0 || mu.is_zero();
}

bool geq_s_zero(const RingElem& mu) {
    if (sgn(mu.c) != 0) return false;
    if (mu.b.get_den() != 1 || sgn(mu.b) < 0) return false;
    const Integer b = mu.b.get_num();
    const Integer plus = b + mu.v;
    const Integer minus = b - mu.v;
    return sgn(plus) >= 0 && sgn(minus) >= 0 && mpz_even_p(plus.get_mpz_t()) &&
           mpz_even_p(minus.get_mpz_t());
}

std::string to_string(Flavor f) {
    return f == Flavor::continuous ? "continuous" : "smooth";
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "continuous") return Flavor::continuous;
    if (s == "smooth") return Flavor::smooth;
    throw InputError("unknown order flavor '" + s + "' (expected continuous|smooth)");
}

std::complex<double> power_eval(std::complex<double> g, const RingElem& mu) {
    const double r = std::abs(g);
    if (r == 0.0) throw DomainError("power_eval: g must be nonzero");
    const double log_r = std::log(r);
    const double theta = std::arg(g);
    const double b = mu.b.get_d();
    const double c = mu.c.get_d();
    const double v = mu.v.get_d();
    // |g|^(b+ci) = exp(b log r) * exp(i c log r); (g/|g|)^v = exp(i v theta)
    return std::polar(std::exp(b * log_r), c * log_r + v * theta);
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    static const std::string unicode_minus = "\xE2\x88\x92";
    if (s.rfind(unicode_minus, 0) == 0) {
        negative = true;
        s = s.substr(unicode_minus.size());
    } else if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char ch : t)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("malformed rational '" + text + "'");
    Integer d(den);
    if (sgn(d) == 0) throw InputError("zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const RingElem& mu) {
    std::ostringstream os;
    os << mu;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& mu) {
    os << '(' << mu.b.get_str();
    if (sgn(mu.c) >= 0)
        os << '+' << mu.c.get_str();
    else
        os << mu.c.get_str();
    return os << "i," << mu.v.get_str() << ')';
}

RVector zero_vector(std::size_t n) { return RVector(n); }

namespace {
void require_same_length(const RVector& x, const RVector& y, const char* what) {
    if (x.size() != y.size())
        throw DimensionError(std::string(what) + ": length mismatch (" +
                             std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
}
}  // namespace

RVector operator+(const RVector& x, const RVector& y) {
    require_same_length(x, y, "RVector +");
    RVector r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] + y[k];
    return r;
}

RVector operator-(const RVector& x, const RVector& y) {
    require_same_length(x, y, "RVector -");
    RVector r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - y[k];
    return r;
}

RVector operator-(const RVector& x) {
    RVector r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = -x[k];
    return r;
}

RVector scale_left(const RingElem& lambda, const RVector& alpha) {
    RVector r(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k) r[k] = lambda * alpha[k];
    return r;
}

bool is_zero(const RVector& x) {
    for (const auto& e : x)
        if (!e.is_zero()) return false;
    return true;
}

RingElem bracket(const RVector& alpha, const RVector& beta) {
    require_same_length(alpha, beta, "bracket");
    RingElem s;
    for (std::size_t k = 0; k < alpha.size(); ++k) s += alpha[k] * beta[k];
    return s;
}

std::string to_string(const RVector& x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < x.size(); ++k) os << (k ? ", " : "") << x[k];
    os << ']';
    return os.str();
}

}  // namespace ttk
