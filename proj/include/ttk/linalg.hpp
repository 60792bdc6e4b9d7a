#pragma once

// Exact linear algebra over Q and over the Gaussian rationals Q(i).
//
// Subspaces are stored as reduced row-echelon bases, so equal subspaces have
// identical representations and equality is a plain comparison.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttk/error.hpp"
#include "ttk/ring.hpp"

namespace ttk {

// ---------------------------------------------------------------------------
// Gaussian rationals

struct Gauss {
    Rational re;
    Rational im;

    Gauss() = default;
    Gauss(Rational r) : re(std::move(r)) { re.canonicalize(); }  // NOLINT: implicit real embedding
    Gauss(int r) : re(r) {}                                      // NOLINT
    Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static Gauss i() { return {0, 1}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Gauss conj() const { return {re, -im}; }

    Gauss operator-() const { return {-re, -im}; }
    Gauss& operator+=(const Gauss& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gauss& operator-=(const Gauss& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw DomainError("Gaussian rational division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
};

// GAUSS ::= RAT | RAT ('+'|'-') RAT 'i' | RAT 'i'
Gauss parse_gauss(const std::string& text);
std::string format_gauss(const Gauss& z);

// Uniform field helpers so the algorithms below are written once.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gauss& z) { return z.is_zero(); }

// ---------------------------------------------------------------------------
// Dense matrices

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = F(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw DimensionError("Matrix::from_rows: ragged rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    std::vector<F> col(std::size_t c) const {
        std::vector<F> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Matrix product: inner dimensions differ");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(r, k))) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += a(r, k) * b(k, c);
            }
        return p;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        if (x.size() != cols_) throw DimensionError("Matrix::apply: vector length mismatch");
        std::vector<F> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!is_zero(x[c])) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gauss>;

// Row-reduce in place to reduced row-echelon form; returns pivot columns.
// Zero rows are dropped.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        const F inv = F(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) = m(lead_row, k) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || is_zero(m(r, c))) continue;
            const F f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    Matrix<F> trimmed(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k) trimmed(r, k) = m(r, k);
    m = std::move(trimmed);
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

// Basis of {x : m x = 0}, one vector per free column, in canonical form.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    const std::size_t n = m.cols();
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> x(n);
        x[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class F>
struct SolutionSet {
    std::vector<F> particular;
    std::vector<std::vector<F>> homogeneous;
};

// All x with m x = rhs, or nullopt when the system is inconsistent.
template <class F>
std::optional<SolutionSet<F>> solve(const Matrix<F>& m, const std::vector<F>& rhs) {
    if (rhs.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    SolutionSet<F> s;
    s.particular.assign(m.cols(), F());
    for (std::size_t r = 0; r < pivots.size(); ++r) s.particular[pivots[r]] = aug(r, m.cols());
    s.homogeneous = nullspace(m);
    return s;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = F(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

// ---------------------------------------------------------------------------
// Subspaces

template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        s.basis_ = Matrix<F>::identity(ambient_dim);
        s.pivots_.resize(ambient_dim);
        for (std::size_t k = 0; k < ambient_dim; ++k) s.pivots_[k] = k;
        return s;
    }
    static Subspace span(const std::vector<std::vector<F>>& vectors, std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        Matrix<F> m(vectors.size(), ambient_dim);
        for (std::size_t r = 0; r < vectors.size(); ++r) {
            if (vectors[r].size() != ambient_dim)
                throw DimensionError("Subspace::span: vector length differs from ambient dimension");
            for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
        }
        s.pivots_ = rref(m);
        s.basis_ = std::move(m);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::vector<F>> basis_vectors() const {
        std::vector<std::vector<F>> out;
        for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
        return out;
    }

    bool contains(const std::vector<F>& x) const {
        if (x.size() != ambient_) throw DimensionError("Subspace::contains: length mismatch");
        // Reduce x against the echelon basis; x is inside iff the residue vanishes.
        std::vector<F> r = x;
        for (std::size_t k = 0; k < dim(); ++k) {
            const F f = r[pivots_[k]];
            if (ttk::is_zero(f)) continue;
            for (std::size_t c = 0; c < ambient_; ++c) r[c] -= f * basis_(k, c);
        }
        for (const auto& e : r)
            if (!ttk::is_zero(e)) return false;
        return true;
    }
    bool contains(const Subspace& other) const {
        require_same_ambient(other);
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    void require_same_ambient(const Subspace& other) const {
        if (ambient_ != other.ambient_)
            throw DimensionError("subspaces live in different ambient spaces (" +
                                 std::to_string(ambient_) + " vs " + std::to_string(other.ambient_) + ")");
    }

private:
    std::size_t ambient_ = 0;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

using QSubspace = Subspace<Rational>;
using GSubspace = Subspace<Gauss>;

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
    a.require_same_ambient(b);
    auto vs = a.basis_vectors();
    for (auto& v : b.basis_vectors()) vs.push_back(std::move(v));
    return Subspace<F>::span(vs, a.ambient_dim());
}

// Annihilator under the bilinear pairing x.y = sum x_k y_k (no conjugation);
// ann(ann(S)) = S.
template <class F>
Subspace<F> annihilator(const Subspace<F>& s) {
    if (s.dim() == 0) return Subspace<F>::full(s.ambient_dim());
    return Subspace<F>::span(nullspace(s.basis()), s.ambient_dim());
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    a.require_same_ambient(b);
    return annihilator(sum(annihilator(a), annihilator(b)));
}

// Canonical complement of A inside B: express A in B's echelon coordinates,
// row-reduce, and keep the B basis vectors at non-pivot positions.
template <class F>
Subspace<F> complement_in(const Subspace<F>& a, const Subspace<F>& b) {
    a.require_same_ambient(b);
    if (!b.contains(a)) throw PreconditionError("complement_in: A is not contained in B");
    const std::size_t k = b.dim();
    Matrix<F> coords(a.dim(), k);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t j = 0; j < k; ++j) coords(r, j) = a.basis()(r, b.pivots()[j]);
    const auto pivots = rref(coords);
    std::vector<bool> used(k, false);
    for (auto p : pivots) used[p] = true;
    std::vector<std::vector<F>> keep;
    for (std::size_t j = 0; j < k; ++j)
        if (!used[j]) keep.push_back(b.basis().row(j));
    return Subspace<F>::span(keep, a.ambient_dim());
}

template <class F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("image: matrix/subspace mismatch");
    std::vector<std::vector<F>> vs;
    for (std::size_t r = 0; r < s.dim(); ++r) vs.push_back(m.apply(s.basis().row(r)));
    return Subspace<F>::span(vs, m.rows());
}

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    return Subspace<F>::span(nullspace(m), m.cols());
}

// ---------------------------------------------------------------------------
// Realification: z in Q(i)^r  ->  (Re z_1..Re z_r, Im z_1..Im z_r) in Q^{2r}.

std::vector<Rational> realify(const std::vector<Gauss>& z);
QSubspace realify(const GSubspace& s);
// [[Re M, -Im M], [Im M, Re M]]
QMatrix realify(const GMatrix& m);

// ---------------------------------------------------------------------------
// Integer lattice helpers

using IMatrix = std::vector<std::vector<Integer>>;

// gcd of all k x k minors of m (0 when rank < k), read off the Smith normal form.
Integer smith_gcd_minors(const IMatrix& m, std::size_t k);
// Smith invariant factors d_1 | d_2 | ... (nonzero ones only).
std::vector<Integer> smith_invariants(IMatrix m);
// Z-basis of {x in Z^n : m x = 0}.
std::vector<std::vector<Integer>> integer_kernel(const IMatrix& m, std::size_t n);

}  // namespace ttk
