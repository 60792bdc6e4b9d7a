#include "ttk/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace ttk {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (ch != ' ' && ch != '\t') out.push_back(ch);
    return out;
}

// Position where the imaginary part starts in "a+bi" / "a-bi", or npos.
// Skips a leading sign and the UTF-8 minus sign so "-3-2i" splits at index 2.
std::size_t split_point(const std::string& s) {
    for (std::size_t k = s.size() - 1; k > 0; --k) {
        if (s[k] == '+' || s[k] == '-') return k;
        // U+2212 is E2 88 92.
        if (k + 2 < s.size() && static_cast<unsigned char>(s[k]) == 0xE2 &&
            static_cast<unsigned char>(s[k + 1]) == 0x88 && static_cast<unsigned char>(s[k + 2]) == 0x92)
            return k;
    }
    return std::string::npos;
}

}  // namespace

Gauss parse_gauss(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw InputError("empty Gaussian rational");
    if (s.back() != 'i') return Gauss(parse_rational(s));
    const std::string body = s.substr(0, s.size() - 1);
    if (body.empty()) throw InputError("malformed Gaussian rational '" + text + "'");
    const std::size_t k = split_point(body);
    if (k == std::string::npos) return {0, parse_rational(body)};
    const std::string re = body.substr(0, k);
    std::string im = body.substr(k);
    if (im.front() == '+') im.erase(0, 1);
    if (im.empty() || im == "-" || im == "\xE2\x88\x92")
        throw InputError("malformed Gaussian rational '" + text + "'");
    return {parse_rational(re), parse_rational(im)};
}

std::string format_gauss(const Gauss& z) {
    if (sgn(z.im) == 0) return format_rational(z.re);
    if (sgn(z.re) == 0) return format_rational(z.im) + "i";
    const std::string im = format_rational(abs(z.im));
    return format_rational(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im + "i";
}

std::vector<Rational> realify(const std::vector<Gauss>& z) {
    const std::size_t r = z.size();
    std::vector<Rational> out(2 * r);
    for (std::size_t k = 0; k < r; ++k) {
        out[k] = z[k].re;
        out[r + k] = z[k].im;
    }
    return out;
}

QSubspace realify(const GSubspace& s) {
    // Over R, the complex span of {w} is the real span of {w, i w}.
    std::vector<std::vector<Rational>> vs;
    for (const auto& w : s.basis_vectors()) {
        vs.push_back(realify(w));
        std::vector<Gauss> iw(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) iw[k] = Gauss::i() * w[k];
        vs.push_back(realify(iw));
    }
    return QSubspace::span(vs, 2 * s.ambient_dim());
}

QMatrix realify(const GMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    QMatrix out(2 * R, 2 * C);
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c) {
            out(r, c) = m(r, c).re;
            out(r, C + c) = -m(r, c).im;
            out(R + r, c) = m(r, c).im;
            out(R + r, C + c) = m(r, c).re;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form by repeated pivoting on the entry of least absolute value.

std::vector<Integer> smith_invariants(IMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Integer> d;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (sgn(a[r][c]) != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool clean = true;
        for (std::size_t r = t + 1; r < rows; ++r) {
            const Integer q = a[r][t] / a[t][t];
            if (sgn(q) != 0)
                for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
            if (sgn(a[r][t]) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            const Integer q = a[t][c] / a[t][t];
            if (sgn(q) != 0)
                for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
            if (sgn(a[t][c]) != 0) clean = false;
        }
        if (!clean) continue;

        // The pivot must divide the rest of the block; otherwise fold a
        // offending row into row t and go around again.
        bool divides = true;
        for (std::size_t r = t + 1; r < rows && divides; ++r)
            for (std::size_t c = t + 1; c < cols; ++c)
                if (sgn(a[r][c] % a[t][t]) != 0) {
                    for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        d.push_back(abs(a[t][t]));
        ++t;
    }
    return d;
}

Integer smith_gcd_minors(const IMatrix& m, std::size_t k) {
    if (k == 0) return 1;
    const auto d = smith_invariants(m);
    if (d.size() < k) return 0;
    Integer p = 1;
    for (std::size_t j = 0; j < k; ++j) p *= d[j];
    return p;
}

// Unimodular column reduction: bring m to column echelon form while applying
// the same column operations to the identity. Columns of the transform that
// end up over zero columns span the integer kernel.
std::vector<std::vector<Integer>> integer_kernel(const IMatrix& m, std::size_t n) {
    IMatrix a = m;
    for (const auto& row : a)
        if (row.size() != n) throw DimensionError("integer_kernel: ragged matrix");
    IMatrix u(n, std::vector<Integer>(n));
    for (std::size_t k = 0; k < n; ++k) u[k][k] = 1;

    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (auto& row : a) row[dst] -= q * row[src];
        for (auto& row : u) row[dst] -= q * row[src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
        for (auto& row : u) std::swap(row[x], row[y]);
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < a.size() && lead < n; ++r) {
        // Euclid across columns lead..n-1 of row r.
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = lead; c < n; ++c)
                if (sgn(a[r][c]) != 0 && (best == n || abs(a[r][c]) < abs(a[r][best]))) best = c;
            if (best == n) break;
            col_swap(lead, best);
            bool done = true;
            for (std::size_t c = lead + 1; c < n; ++c) {
                if (sgn(a[r][c]) == 0) continue;
                const Integer q = a[r][c] / a[r][lead];
                col_axpy(c, lead, q);
                if (sgn(a[r][c]) != 0) done = false;
            }
            if (done) {
                ++lead;
                break;
            }
        }
    }
    std::vector<std::vector<Integer>> basis;
    for (std::size_t c = lead; c < n; ++c) {
        std::vector<Integer> x(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = u[k][c];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace ttk
