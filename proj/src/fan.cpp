#include "ttk/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ttk/fourier_motzkin.hpp"

namespace ttk {

std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

Simplex normalize_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    return s;
}

Simplex intersect(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int position(const Simplex& s, int i) {
    auto it = std::lower_bound(s.begin(), s.end(), i);
    return (it != s.end() && *it == i) ? static_cast<int>(it - s.begin()) : -1;
}

TopologicalFan::TopologicalFan(std::size_t n, std::vector<RVector> rays, std::vector<Simplex> maximal)
    : n_(n), rays_(std::move(rays)) {
    if (n_ == 0) throw InputError("fan dimension must be positive");
    if (rays_.empty()) throw InputError("fan has no rays");
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i].size() != n_)
            throw InputError("ray " + std::to_string(i + 1) + " has length " + std::to_string(rays_[i].size()) +
                             ", expected " + std::to_string(n_));

    std::set<Simplex> closure;
    for (auto s : maximal) {
        for (int i : s)
            if (i < 1 || static_cast<std::size_t>(i) > rays_.size())
                throw InputError("simplex " + to_string(s) + " refers to ray " + std::to_string(i) +
                                 " outside 1.." + std::to_string(rays_.size()));
        s = normalize_simplex(std::move(s));
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("simplex " + to_string(s) + " repeats a ray");
        if (s.size() > n_) throw InputError("simplex " + to_string(s) + " has more than n rays");
        for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
            Simplex face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (mask & (1u << k)) face.push_back(s[k]);
            closure.insert(face);
        }
        maximal_.push_back(std::move(s));
    }
    closure.insert(Simplex{});

    // Drop listed simplices that are faces of other listed ones.
    std::vector<Simplex> kept;
    for (const auto& s : maximal_) {
        bool dominated = false;
        for (const auto& t : maximal_)
            if (t.size() > s.size() && is_subset(s, t)) dominated = true;
        if (!dominated && std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
    }
    maximal_ = std::move(kept);

    all_.assign(closure.begin(), closure.end());
    std::stable_sort(all_.begin(), all_.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (const auto& s : maximal_)
        if (s.size() == n_) top_.push_back(s);
    std::sort(top_.begin(), top_.end());
    if (top_.empty()) throw InputError("fan has no simplex with n rays");
}

const RVector& TopologicalFan::ray(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > rays_.size())
        throw InvalidSimplexError("ray index " + std::to_string(i) + " out of range");
    return rays_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> TopologicalFan::used_rays() const {
    std::set<int> used;
    for (const auto& s : maximal_) used.insert(s.begin(), s.end());
    return {used.begin(), used.end()};
}

bool TopologicalFan::contains(const Simplex& s) const {
    const Simplex t = normalize_simplex(s);
    return std::any_of(maximal_.begin(), maximal_.end(), [&](const Simplex& m) { return is_subset(t, m); }) ||
           t.empty();
}

void TopologicalFan::require(const Simplex& s) const {
    if (!contains(s)) throw InvalidSimplexError("simplex " + to_string(s) + " is not in the fan");
}

void TopologicalFan::require_top(const Simplex& s) const {
    require(s);
    if (s.size() != n_)
        throw InvalidSimplexError("simplex " + to_string(s) + " is not maximal (needs " + std::to_string(n_) +
                                  " rays)");
}

// ---------------------------------------------------------------------------
// Validation

namespace {

QMatrix b_matrix(const TopologicalFan& fan, const Simplex& s) {
    // rows are b-vectors
    QMatrix m(s.size(), fan.n());
    for (std::size_t r = 0; r < s.size(); ++r)
        for (std::size_t k = 0; k < fan.n(); ++k) m(r, k) = fan.ray(s[r])[k].b;
    return m;
}

IMatrix v_rows(const TopologicalFan& fan, const Simplex& s) {
    IMatrix m;
    for (int i : s) {
        std::vector<Integer> row;
        for (const auto& e : fan.ray(i)) row.push_back(e.v);
        m.push_back(std::move(row));
    }
    return m;
}

// sum_{i in I} lambda_i b_i = sum_{j in J} mu_j b_j with all coefficients >= 1.
bool interiors_meet(const TopologicalFan& fan, const Simplex& I, const Simplex& J) {
    LinearSystem sys;
    sys.vars = I.size() + J.size();
    for (std::size_t k = 0; k < fan.n(); ++k) {
        std::vector<Rational> row(sys.vars);
        for (std::size_t p = 0; p < I.size(); ++p) row[p] = fan.ray(I[p])[k].b;
        for (std::size_t q = 0; q < J.size(); ++q) row[I.size() + q] = -fan.ray(J[q])[k].b;
        sys.eq.push_back(std::move(row));
        sys.eq_rhs.emplace_back(0);
    }
    for (std::size_t p = 0; p < sys.vars; ++p) {
        std::vector<Rational> row(sys.vars);
        row[p] = 1;
        sys.ge.push_back(std::move(row));
        sys.ge_rhs.emplace_back(1);
    }
    return feasible(std::move(sys));
}

bool direction_in_cone(const TopologicalFan& fan, const Simplex& I, const std::vector<Rational>& d) {
    LinearSystem sys;
    sys.vars = I.size();
    for (std::size_t k = 0; k < fan.n(); ++k) {
        std::vector<Rational> row(sys.vars);
        for (std::size_t p = 0; p < I.size(); ++p) row[p] = fan.ray(I[p])[k].b;
        sys.eq.push_back(std::move(row));
        sys.eq_rhs.push_back(d[k]);
    }
    for (std::size_t p = 0; p < sys.vars; ++p) {
        std::vector<Rational> row(sys.vars);
        row[p] = 1;
        sys.ge.push_back(std::move(row));
        sys.ge_rhs.emplace_back(0);
    }
    return feasible(std::move(sys));
}

}  // namespace

ValidationReport validate_fan(const TopologicalFan& fan) {
    ValidationReport rep;
    auto note = [&](std::string where, std::string what) { rep.diagnostics.emplace_back(std::move(where), std::move(what)); };

    std::vector<Simplex> nonempty;
    for (const auto& s : fan.simplices())
        if (!s.empty()) nonempty.push_back(s);

    for (const auto& s : nonempty)
        if (rank(b_matrix(fan, s)) != s.size()) {
            rep.condition1_ok = false;
            note(to_string(s), "b-vectors are linearly dependent");
        }
    if (rep.condition1_ok)
        for (std::size_t x = 0; x < nonempty.size(); ++x)
            for (std::size_t y = x + 1; y < nonempty.size(); ++y)
                if (interiors_meet(fan, nonempty[x], nonempty[y])) {
                    rep.condition1_ok = false;
                    note(to_string(nonempty[x]) + " " + to_string(nonempty[y]), "cone interiors intersect");
                }

    for (int i = 1; i <= static_cast<int>(fan.m()); ++i) {
        Integer g = 0;
        for (const auto& e : fan.ray(i)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.v.get_mpz_t());
        if (g != 1) {
            rep.condition2_ok = false;
            note("ray " + std::to_string(i), "v is not primitive");
        }
    }
    for (const auto& s : nonempty) {
        const auto d = smith_invariants(v_rows(fan, s));
        if (d.size() != s.size()) {
            rep.condition2_ok = false;
            note(to_string(s), "v-vectors are linearly dependent");
            rep.nonsingular = false;
            continue;
        }
        if (smith_gcd_minors(v_rows(fan, s), s.size()) != 1) {
            rep.nonsingular = false;
            note(to_string(s), "v-vectors are not part of a Z-basis");
        }
    }

    const std::size_t n = fan.n();
    for (const auto& s : fan.maximal_simplices())
        if (s.size() < n) {
            rep.complete = false;
            note(to_string(s), "maximal simplex of dimension below n");
        }
    std::map<Simplex, int> facet_count;
    for (const auto& s : fan.top_simplices())
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(drop));
            ++facet_count[f];
        }
    for (const auto& [f, c] : facet_count)
        if (c != 2) {
            rep.complete = false;
            note(to_string(f), "facet lies in " + std::to_string(c) + " maximal cones");
        }
    if (rep.complete) {
        std::mt19937 rng(20240601u);
        std::uniform_int_distribution<int> coord(-7, 7);
        for (int sample = 0; sample < 64; ++sample) {
            std::vector<Rational> d(n);
            bool nonzero = false;
            while (!nonzero) {
                for (auto& e : d) {
                    e = coord(rng);
                    if (sgn(e) != 0) nonzero = true;
                }
            }
            const bool covered = std::any_of(fan.top_simplices().begin(), fan.top_simplices().end(),
                                             [&](const Simplex& s) { return direction_in_cone(fan, s, d); });
            if (!covered) {
                rep.complete = false;
                std::string dir;
                for (std::size_t k = 0; k < n; ++k) dir += (k ? "," : "") + format_rational(d[k]);
                note("(" + dir + ")", "direction not covered by any cone");
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Dual data

std::vector<RVector> dual_basis(const TopologicalFan& fan, const Simplex& I) {
    fan.require_top(I);
    const std::size_t n = fan.n();
    QMatrix P(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const RingElem& e = fan.ray(I[j])[k];
            P(2 * j, 2 * k) = e.b;
            P(2 * j + 1, 2 * k) = e.c;
            P(2 * j + 1, 2 * k + 1) = e.v;
        }
    const auto Q = inverse(P);
    if (!Q) throw NoDualError("rays of " + to_string(I) + " admit no dual set (block matrix is singular)");
    std::vector<RVector> alpha(n, RVector(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& v = (*Q)(2 * k + 1, 2 * i + 1);
            if (sgn((*Q)(2 * k, 2 * i + 1)) != 0 || v.get_den() != 1)
                throw NotRingElementError("dual of " + to_string(I) + " component " + std::to_string(k + 1) +
                                          " of ray " + std::to_string(I[i]) + " is not in R");
            alpha[i][k] = RingElem((*Q)(2 * k, 2 * i), (*Q)(2 * k + 1, 2 * i), v.get_num());
        }
    return alpha;
}

std::vector<std::vector<RingElem>> bracket_table(const TopologicalFan& fan, const Simplex& I) {
    const auto alpha = dual_basis(fan, I);
    std::vector<std::vector<RingElem>> a(I.size(), std::vector<RingElem>(fan.m()));
    for (std::size_t p = 0; p < I.size(); ++p)
        for (std::size_t k = 0; k < fan.m(); ++k) a[p][k] = bracket(alpha[p], fan.rays()[k]);
    return a;
}

bool BetaPerp::contains(const RVector& alpha) const {
    if (alpha.size() != n) throw DimensionError("BetaPerp::contains: length mismatch");
    std::vector<Rational> bc(2 * n), v(n);
    for (std::size_t k = 0; k < n; ++k) {
        bc[k] = alpha[k].b;
        bc[n + k] = alpha[k].c;
        v[k] = alpha[k].v;
    }
    return complex_part.contains(bc) && lattice_span.contains(v);
}

RVector BetaPerp::element(const std::vector<Rational>& bc, const std::vector<Integer>& coeffs) const {
    if (bc.size() != 2 * n || coeffs.size() != lattice.size())
        throw DimensionError("BetaPerp::element: coordinate count mismatch");
    RVector alpha(n);
    for (std::size_t k = 0; k < n; ++k) {
        Integer v = 0;
        for (std::size_t j = 0; j < lattice.size(); ++j) v += coeffs[j] * lattice[j][k];
        alpha[k] = RingElem(bc[k], bc[n + k], v);
    }
    return alpha;
}

BetaPerp beta_perp(const TopologicalFan& fan, const Simplex& I) {
    fan.require(I);
    const std::size_t n = fan.n();
    BetaPerp out;
    out.n = n;
    QMatrix eq(2 * I.size(), 2 * n);
    IMatrix veq;
    for (std::size_t p = 0; p < I.size(); ++p) {
        const RVector& beta = fan.ray(I[p]);
        std::vector<Integer> vrow(n);
        for (std::size_t k = 0; k < n; ++k) {
            eq(2 * p, k) = beta[k].b;
            eq(2 * p + 1, k) = beta[k].c;
            eq(2 * p + 1, n + k) = beta[k].v;
            vrow[k] = beta[k].v;
        }
        veq.push_back(std::move(vrow));
    }
    out.complex_part = kernel(eq);
    out.lattice = integer_kernel(veq, n);
    std::vector<std::vector<Rational>> span;
    for (const auto& x : out.lattice) span.emplace_back(x.begin(), x.end());
    out.lattice_span = QSubspace::span(span, n);
    return out;
}

std::vector<RingElem> decompose_in_dual(const TopologicalFan& fan, const RVector& alpha, const Simplex& I) {
    const auto duals = dual_basis(fan, I);
    if (alpha.size() != fan.n()) throw DimensionError("decompose_in_dual: length mismatch");
    std::vector<RingElem> lambda;
    RVector back = zero_vector(fan.n());
    for (std::size_t p = 0; p < I.size(); ++p) {
        lambda.push_back(bracket(alpha, fan.ray(I[p])));
        back = back + scale_left(lambda.back(), duals[p]);
    }
    if (!(back == alpha))
        throw InternalError("dual decomposition over " + to_string(I) + " does not reconstruct " + to_string(alpha));
    return lambda;
}

QSubspace kernel_lie_basis(const TopologicalFan& fan, const Simplex& I) {
    const auto a = bracket_table(fan, I);
    const std::size_t m = fan.m(), n = fan.n();
    QMatrix eq(2 * n, 2 * m);
    for (std::size_t p = 0; p < n; ++p) {
        const auto i = static_cast<std::size_t>(I[p] - 1);
        eq(p, i) = 1;
        eq(n + p, m + i) = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (position(I, static_cast<int>(k + 1)) >= 0) continue;
            eq(p, k) = a[p][k].b;
            eq(n + p, k) = a[p][k].c;
            eq(n + p, m + k) = Rational(a[p][k].v);
        }
    }
    return kernel(eq);
}

}  // namespace ttk
