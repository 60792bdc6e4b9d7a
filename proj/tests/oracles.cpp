#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Rational random_rational(std::mt19937& rng, int num, int den) {
    std::uniform_int_distribution<int> p(-num, num), q(1, den);
    Rational x(p(rng), q(rng));
    x.canonicalize();
    return x;
}

RingElem random_ring(std::mt19937& rng) {
    std::uniform_int_distribution<int> v(-5, 5);
    return {random_rational(rng), random_rational(rng), v(rng)};
}

RingElem random_diag(std::mt19937& rng) {
    std::uniform_int_distribution<int> v(-6, 6);
    return RingElem::diag(v(rng));
}

RingElem random_order_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> b(-2, 3), v(-3, 3), pick(0, 9);
    Rational bb = b(rng);
    Rational cc = 0;
    const int kind = pick(rng);
    if (kind == 0) bb += Rational(1, 2);
    if (kind == 1) cc = Rational(b(rng), 2);
    return {bb, cc, v(rng)};
}

RVector random_rvector(std::mt19937& rng, std::size_t n) {
    RVector x;
    for (std::size_t k = 0; k < n; ++k) x.push_back(random_ring(rng));
    return x;
}

Gauss random_gauss(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    if (pick(rng) == 0) return {random_rational(rng, 3, 2), 0};
    return {random_rational(rng, 3, 2), random_rational(rng, 3, 2)};
}

std::vector<Gauss> random_gauss_vector(std::mt19937& rng, std::size_t r) {
    std::vector<Gauss> v;
    for (std::size_t k = 0; k < r; ++k) v.push_back(random_gauss(rng));
    return v;
}

GMatrix random_invertible(std::mt19937& rng, std::size_t r) {
    for (;;) {
        GMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = random_gauss(rng);
        if (rank(m) == r) return m;
    }
}

std::complex<double> random_torus_coord(std::mt19937& rng) {
    std::uniform_real_distribution<double> modulus(0.5, 2.0), angle(-3.14159265358979, 3.14159265358979);
    return std::polar(modulus(rng), angle(rng));
}

TorusPoint random_torus_point(std::mt19937& rng, std::size_t n) {
    TorusPoint t;
    for (std::size_t k = 0; k < n; ++k) t.push_back(random_torus_coord(rng));
    return t;
}

// ---------------------------------------------------------------------------

Rational det_cofactor(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m[0][c]) == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        const Rational term = m[0][c] * det_cofactor(minor);
        if (c % 2 == 0)
            d += term;
        else
            d -= term;
    }
    return d;
}

namespace {

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) {
            visit(idx);
            return;
        }
        for (std::size_t x = from; x < n; ++x) {
            idx[pos] = x;
            rec(pos + 1, x + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::size_t rank_by_minors(const QMatrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        bool found = false;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (found) return;
                std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = m(rows[a], cols[b]);
                if (sgn(det_cofactor(sub)) != 0) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

Integer gcd_of_minors(const IMatrix& m, std::size_t k) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Integer g = 0;
    subsets(rows, k, [&](const std::vector<std::size_t>& rs) {
        subsets(cols, k, [&](const std::vector<std::size_t>& cs) {
            std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub[a][b] = Rational(m[rs[a]][cs[b]]);
            const Integer d = det_cofactor(sub).get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Gauss> column(const GMatrix& m, std::size_t c) { return m.col(c); }

RingElem random_weight(std::mt19937& rng, Flavor flavor) {
    if (flavor == Flavor::smooth) {
        // Mostly diag-like elements so that >=_s relates many pairs.
        std::uniform_int_distribution<int> b(-1, 3), shift(-1, 1), pick(0, 3);
        const int bb = b(rng);
        const int vv = pick(rng) == 0 ? bb + 2 * shift(rng) : bb;
        return {bb, 0, vv};
    }
    return random_order_elem(rng);
}

}  // namespace

GSubspace SplitData::expected(int ray, const RingElem& mu) const {
    std::vector<std::vector<Gauss>> vs;
    for (std::size_t j = 0; j < weights.size(); ++j)
        if (geq(data.flavor, weights[j][static_cast<std::size_t>(ray - 1)], mu)) vs.push_back(column(basis, j));
    return GSubspace::span(vs, data.rank);
}

SplitData random_split_data(std::mt19937& rng, const TopologicalFan& fan, std::size_t rank, Flavor flavor,
                            std::size_t max_weights) {
    SplitData s;
    s.data.rank = rank;
    s.data.flavor = flavor;
    s.basis = random_invertible(rng, rank);
    s.weights.assign(rank, std::vector<RingElem>(fan.m()));
    std::uniform_int_distribution<std::size_t> pool_size(1, max_weights);
    for (std::size_t k = 0; k < fan.m(); ++k) {
        std::vector<RingElem> pool;
        const std::size_t want = pool_size(rng);
        while (pool.size() < want) {
            const RingElem w = random_weight(rng, flavor);
            if (std::find(pool.begin(), pool.end(), w) == pool.end()) pool.push_back(w);
        }
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (std::size_t j = 0; j < rank; ++j) s.weights[j][k] = pool[pick(rng)];

        const int ray = static_cast<int>(k + 1);
        auto& pieces = s.data.rays[ray];
        for (const auto& w : pool) {
            std::vector<std::vector<Gauss>> vs;
            for (std::size_t j = 0; j < rank; ++j)
                if (s.weights[j][k] == w) vs.push_back(column(s.basis, j));
            if (!vs.empty()) pieces.push_back({w, GSubspace::span(vs, rank)});
        }
    }
    validate_data(s.data);
    return s;
}

KlyachkoData random_unconstrained_data(std::mt19937& rng, const TopologicalFan& fan, std::size_t rank) {
    KlyachkoData d;
    d.rank = rank;
    d.flavor = Flavor::continuous;
    std::uniform_int_distribution<std::size_t> groups(1, rank);
    std::uniform_int_distribution<int> w(-1, 2);
    for (int i = 1; i <= static_cast<int>(fan.m()); ++i) {
        const GMatrix basis = random_invertible(rng, rank);
        const std::size_t g = groups(rng);
        std::vector<std::vector<std::vector<Gauss>>> parts(g);
        for (std::size_t c = 0; c < rank; ++c) parts[c < g ? c : std::uniform_int_distribution<std::size_t>(0, g - 1)(rng)].push_back(basis.col(c));
        std::vector<RingElem> used;
        for (auto& p : parts) {
            RingElem mu;
            do mu = RingElem(w(rng), 0, w(rng));
            while (std::find(used.begin(), used.end(), mu) != used.end());
            used.push_back(mu);
            d.rays[i].push_back({mu, GSubspace::span(p, rank)});
        }
    }
    validate_data(d);
    return d;
}

// ---------------------------------------------------------------------------

namespace {

// sum of the pieces of ray i with weight >= mu, straight from the definition
GSubspace level(const KlyachkoData& d, int i, const RingElem& mu) {
    std::vector<std::vector<Gauss>> vs;
    for (const auto& p : d.rays.at(i))
        if (geq(d.flavor, p.weight, mu))
            for (auto& v : p.piece.basis_vectors()) vs.push_back(std::move(v));
    return GSubspace::span(vs, d.rank);
}

}  // namespace

bool brute_force_compatible(const KlyachkoData& data, const Simplex& I) {
    const std::size_t r = data.rank;
    if (r == 0) return true;
    const std::size_t p = I.size();
    std::vector<std::vector<RingElem>> weights(p);
    std::vector<std::vector<GSubspace>> levels(p);
    for (std::size_t q = 0; q < p; ++q)
        for (const auto& piece : data.rays.at(I[q])) {
            weights[q].push_back(piece.weight);
            levels[q].push_back(level(data, I[q], piece.weight));
        }

    std::vector<std::vector<Gauss>> pool;
    std::function<void(std::size_t, GSubspace)> walk = [&](std::size_t q, GSubspace v) {
        if (q == p) {
            for (auto& x : v.basis_vectors())
                if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(std::move(x));
            return;
        }
        for (const auto& lv : levels[q]) walk(q + 1, intersect(v, lv));
    };
    walk(0, GSubspace::full(r));

    // Forced tuple of each pool vector: at every ray the largest weight whose
    // level contains it. Vectors without such a largest weight cannot sit in
    // any graded piece.
    std::vector<std::vector<Gauss>> usable;
    std::vector<std::vector<RingElem>> forced;
    for (const auto& x : pool) {
        std::vector<RingElem> t;
        bool ok = true;
        for (std::size_t q = 0; q < p && ok; ++q) {
            std::vector<std::size_t> in;
            for (std::size_t w = 0; w < weights[q].size(); ++w)
                if (levels[q][w].contains(x)) in.push_back(w);
            std::optional<std::size_t> top;
            for (auto a : in)
                if (std::all_of(in.begin(), in.end(),
                                [&](std::size_t b) { return geq(data.flavor, weights[q][a], weights[q][b]); }))
                    top = a;
            if (!top)
                ok = false;
            else
                t.push_back(weights[q][*top]);
        }
        if (ok) {
            usable.push_back(x);
            forced.push_back(std::move(t));
        }
    }

    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, const GSubspace&)> search = [&](std::size_t from, const GSubspace& span) {
        if (chosen.size() == r) {
            for (std::size_t q = 0; q < p; ++q)
                for (std::size_t w = 0; w < weights[q].size(); ++w) {
                    std::vector<std::vector<Gauss>> vs;
                    for (auto c : chosen)
                        if (geq(data.flavor, forced[c][q], weights[q][w])) vs.push_back(usable[c]);
                    if (!(GSubspace::span(vs, r) == levels[q][w])) return false;
                }
            return true;
        }
        for (std::size_t x = from; x < usable.size(); ++x) {
            if (span.contains(usable[x])) continue;
            chosen.push_back(x);
            const bool found = search(x + 1, sum(span, GSubspace::span({usable[x]}, r)));
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    return search(0, GSubspace::zero(r));
}

std::size_t hom_dimension_by_constraints(const KlyachkoData& E, const KlyachkoData& F, const Simplex& I) {
    const std::size_t re = E.rank, rf = F.rank;
    const std::size_t unknowns = re * rf;  // phi(a, b) at a * re + b
    std::vector<std::vector<Gauss>> rows;
    for (int i : I) {
        std::vector<RingElem> mus;
        for (const auto& p : E.rays.at(i)) mus.push_back(p.weight);
        for (const auto& p : F.rays.at(i)) mus.push_back(p.weight);
        for (const auto& mu : mus) {
            const GSubspace X = level(E, i, mu);
            const GSubspace Y = level(F, i, mu);
            // u . (phi x) = 0 for u spanning the annihilator of Y
            const auto ann = Y.dim() == 0 ? GSubspace::full(rf).basis_vectors() : nullspace(Y.basis());
            for (const auto& x : X.basis_vectors())
                for (const auto& u : ann) {
                    std::vector<Gauss> row(unknowns);
                    for (std::size_t a = 0; a < rf; ++a)
                        for (std::size_t b = 0; b < re; ++b) row[a * re + b] = u[a] * x[b];
                    rows.push_back(std::move(row));
                }
        }
    }
    if (rows.empty()) return unknowns;
    return unknowns - rank(GMatrix::from_rows(rows, unknowns));
}

// ---------------------------------------------------------------------------

namespace {

std::complex<double> own_power(std::complex<double> z, const RingElem& a) {
    const double logr = std::log(std::abs(z));
    const double theta = std::arg(z);
    const std::complex<double> e(a.b.get_d() * logr, a.c.get_d() * logr + a.v.get_d() * theta);
    return std::exp(e);
}

}  // namespace

std::vector<std::vector<double>> finite_difference_jacobian(const TopologicalFan& fan, const Simplex& I,
                                                            const TorusPoint& z, double h) {
    const std::size_t n = fan.n(), m = fan.m();
    const auto a = bracket_table(fan, I);
    auto q = [&](const TorusPoint& w) {
        TorusPoint u(n, 1.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) u[j] *= own_power(w[k], a[j][k]);
        return u;
    };
    std::vector<std::vector<double>> J(2 * n, std::vector<double>(2 * m));
    for (std::size_t k = 0; k < m; ++k)
        for (int part = 0; part < 2; ++part) {
            const std::complex<double> step = part == 0 ? std::complex<double>(h, 0) : std::complex<double>(0, h);
            TorusPoint plus = z, minus = z;
            plus[k] += step;
            minus[k] -= step;
            const TorusPoint up = q(plus), um = q(minus);
            for (std::size_t j = 0; j < n; ++j) {
                const std::complex<double> d = (up[j] - um[j]) / (2.0 * h);
                J[j][part * m + k] = d.real();
                J[n + j][part * m + k] = d.imag();
            }
        }
    return J;
}

}  // namespace oracle
