#include "ttk/canonical.hpp"

#include <exception>

#include <omp.h>

namespace ttk {

namespace {

void require_ray(const TopologicalFan& fan, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > fan.m())
        throw InputError("ray index " + std::to_string(i) + " outside 1.." + std::to_string(fan.m()));
}

std::vector<Gauss> unit(std::size_t r, std::size_t k) {
    std::vector<Gauss> e(r);
    e[k] = Gauss(1);
    return e;
}

GSubspace coordinate_span(std::size_t r, std::size_t skip) {
    std::vector<std::vector<Gauss>> vs;
    for (std::size_t k = 0; k < r; ++k)
        if (k != skip) vs.push_back(unit(r, k));
    return GSubspace::span(vs, r);
}

// Line e_k at weight 1 and the remaining coordinates at weight 0.
std::vector<WeightedPiece> split_at(std::size_t r, std::size_t k) {
    std::vector<WeightedPiece> pieces;
    if (r > 1) pieces.push_back({RingElem::zero(), coordinate_span(r, k)});
    pieces.push_back({RingElem::one(), GSubspace::span({unit(r, k)}, r)});
    return pieces;
}

// A real subspace of Q^{2r} = C^r that is stable under multiplication by i,
// as a complex subspace; nullopt otherwise.
std::optional<GSubspace> complexify(const QSubspace& s) {
    const std::size_t r = s.ambient_dim() / 2;
    std::vector<std::vector<Gauss>> vs;
    for (const auto& x : s.basis_vectors()) {
        std::vector<Rational> ix(2 * r);
        for (std::size_t k = 0; k < r; ++k) {
            ix[k] = -x[r + k];
            ix[r + k] = x[k];
        }
        if (!s.contains(ix)) return std::nullopt;
        std::vector<Gauss> z(r);
        for (std::size_t k = 0; k < r; ++k) z[k] = Gauss(x[k], x[r + k]);
        vs.push_back(std::move(z));
    }
    return GSubspace::span(vs, r);
}

}  // namespace

KlyachkoData line_bundle_data(const TopologicalFan& fan, int i) {
    require_ray(fan, i);
    KlyachkoData d;
    d.rank = 1;
    d.flavor = Flavor::smooth;
    for (int k = 1; k <= static_cast<int>(fan.m()); ++k)
        d.rays[k] = {{k == i ? RingElem::one() : RingElem::zero(), GSubspace::full(1)}};
    return d;
}

KlyachkoData sum_line_bundles_data(const TopologicalFan& fan) {
    KlyachkoData d;
    d.rank = fan.m();
    d.flavor = Flavor::smooth;
    for (int k = 1; k <= static_cast<int>(fan.m()); ++k) d.rays[k] = split_at(fan.m(), static_cast<std::size_t>(k - 1));
    return d;
}

KlyachkoData trivial_data(const TopologicalFan& fan, std::size_t rank) {
    KlyachkoData d;
    d.rank = rank;
    d.flavor = Flavor::smooth;
    for (int k = 1; k <= static_cast<int>(fan.m()); ++k) {
        d.rays[k] = {};
        if (rank > 0) d.rays[k].push_back({RingElem::zero(), GSubspace::full(rank)});
    }
    return d;
}

KlyachkoData tangent_chart_data(const TopologicalFan& fan, const Simplex& I) {
    const Simplex s = normalize_simplex(I);
    fan.require_top(s);
    KlyachkoData d;
    d.rank = fan.n();
    d.flavor = Flavor::smooth;
    for (std::size_t q = 0; q < s.size(); ++q) d.rays[s[q]] = split_at(fan.n(), q);
    return d;
}

KlyachkoData tangent_data(const TopologicalFan& fan) {
    const std::size_t n = fan.n();
    const Simplex& I0 = fan.top_simplices().front();
    const auto alpha = dual_basis(fan, I0);
    KlyachkoData d;
    d.rank = n;
    d.flavor = Flavor::smooth;
    for (int k : fan.used_rays()) {
        const Simplex* K = nullptr;
        for (const auto& t : fan.top_simplices())
            if (position(t, k) >= 0) {
                K = &t;
                break;
            }
        if (!K) throw PreconditionError("ray " + std::to_string(k) + " lies in no maximal cone of dimension n");
        // Differential at x0 of chart K -> chart I0; block (j, i) is [b 0; c v]
        // of <alpha_j^{I0}, beta_{K_i}>.
        QMatrix D(2 * n, 2 * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                const RingElem a = bracket(alpha[j], fan.ray((*K)[i]));
                D(j, i) = a.b;
                D(n + j, i) = a.c;
                D(n + j, n + i) = Rational(a.v);
            }
        const auto q = static_cast<std::size_t>(position(*K, k));
        std::vector<std::vector<Rational>> line_cols, rest_cols;
        for (std::size_t c = 0; c < n; ++c) {
            auto& target = c == q ? line_cols : rest_cols;
            target.push_back(D.col(c));
            target.push_back(D.col(n + c));
        }
        const auto line = complexify(QSubspace::span(line_cols, 2 * n));
        const auto rest = complexify(QSubspace::span(rest_cols, 2 * n));
        if (!line || !rest)
            throw DomainError("tangent pieces of ray " + std::to_string(k) + " are not complex in the chart basis of " +
                              to_string(I0));
        d.rays[k] = {};
        if (n > 1) d.rays[k].push_back({RingElem::zero(), *rest});
        d.rays[k].push_back({RingElem::one(), *line});
    }
    validate_data(d);
    return d;
}

QMatrix euler_map_matrix(const TopologicalFan& fan, const Simplex& I) {
    const Simplex s = normalize_simplex(I);
    const auto a = bracket_table(fan, s);
    const std::size_t n = fan.n(), m = fan.m();
    QMatrix J(2 * n, 2 * m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            J(j, k) = a[j][k].b;
            J(n + j, k) = a[j][k].c;
            J(n + j, m + k) = Rational(a[j][k].v);
        }
    return J;
}

TorusPoint chart_map(const TopologicalFan& fan, const Simplex& I, const TorusPoint& z) {
    if (z.size() != fan.m()) throw DimensionError("chart_map: point has the wrong number of coordinates");
    const auto a = bracket_table(fan, normalize_simplex(I));
    TorusPoint u(fan.n(), 1.0);
    for (std::size_t j = 0; j < fan.n(); ++j)
        for (std::size_t k = 0; k < fan.m(); ++k) u[j] *= power_eval(z[k], a[j][k]);
    return u;
}

std::vector<std::vector<double>> jacobian_numeric(const TopologicalFan& fan, const Simplex& I, const TorusPoint& z) {
    const Simplex s = normalize_simplex(I);
    const std::size_t n = fan.n(), m = fan.m();
    for (const auto& zk : z)
        if (zk == 0.0) throw DomainError("jacobian_numeric: zero coordinate");
    const auto a = bracket_table(fan, s);
    const TorusPoint u = chart_map(fan, s, z);

    std::vector<std::vector<double>> Jr(2 * n, std::vector<double>(2 * m, 0.0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            std::complex<double> A = 0.0, B = 0.0;
            if (static_cast<int>(k + 1) == s[j]) {
                A = u[j] / z[k];
            } else if (position(s, static_cast<int>(k + 1)) < 0) {
                const std::complex<double> w(a[j][k].b.get_d(), a[j][k].c.get_d());
                const double v = a[j][k].v.get_d();
                A = (w + v) / (2.0 * z[k]) * u[j];
                B = (w - v) / (2.0 * std::conj(z[k])) * u[j];
            }
            // d/dx = A + B, d/dy = i (A - B)
            Jr[j][k] = (A + B).real();
            Jr[j][m + k] = -(A - B).imag();
            Jr[n + j][k] = (A + B).imag();
            Jr[n + j][m + k] = (A - B).real();
        }
    return Jr;
}

// ---------------------------------------------------------------------------

EulerConeReport verify_euler_cone(const TopologicalFan& fan, const Simplex& I) {
    const std::size_t n = fan.n(), m = fan.m();
    EulerConeReport rep;
    rep.cone = normalize_simplex(I);
    rep.J = euler_map_matrix(fan, rep.cone);
    rep.rank = rank(rep.J);
    rep.kernel = kernel(rep.J);
    auto fail = [&](std::string why) {
        if (rep.failure.empty()) rep.failure = to_string(rep.cone) + ": " + std::move(why);
    };

    if (rep.rank != 2 * n) fail("rank " + std::to_string(rep.rank) + " instead of " + std::to_string(2 * n));
    if (!(rep.kernel == kernel_lie_basis(fan, rep.cone))) fail("kernel differs from Lie(Ker lambda)");

    const KlyachkoData E = sum_line_bundles_data(fan);
    const KlyachkoData T = tangent_chart_data(fan, rep.cone);
    const QSubspace zeroE = QSubspace::zero(2 * m);
    const QSubspace zeroT = QSubspace::zero(2 * n);

    const std::pair<const char*, RingElem> regimes[] = {
        {"0>=mu", RingElem::zero()}, {"1>=mu", RingElem::one()}, {"neither", RingElem(2, 0, 0)}};
    for (int k : rep.cone) {
        const auto q = static_cast<std::size_t>(position(rep.cone, k));
        for (const auto& [regime, mu] : regimes) {
            PosetCase pc;
            pc.ray = k;
            pc.regime = regime;
            pc.weight = mu;
            const QSubspace Ek = real_filtration_value(E, k, mu);
            const QSubspace Tk = real_filtration_value(T, k, mu);
            const QSubspace Fk = geq_s(RingElem::zero(), mu) ? rep.kernel : zeroE;
            const QSubspace ker = intersect(rep.kernel, Ek);
            pc.kernel_dim = ker.dim();
            pc.ok = ker == Fk && image(rep.J, Ek) == Tk;
            const std::string where = "ray " + std::to_string(k) + " (" + regime + ")";
            if (std::string(regime) == "0>=mu") {
                pc.ok = pc.ok && pc.kernel_dim == 2 * (m - n);
            } else if (std::string(regime) == "1>=mu") {
                // E_k -> T_k is the identity 1 in GL_1(C).
                const std::size_t x = static_cast<std::size_t>(k - 1);
                const bool block = rep.J(q, x) == 1 && rep.J(q, m + x) == 0 && rep.J(n + q, x) == 0 &&
                                   rep.J(n + q, m + x) == 1;
                pc.ok = pc.ok && block && Ek.dim() == 2 && Tk.dim() == 2;
            } else {
                pc.ok = pc.ok && Ek == zeroE && Tk == zeroT;
            }
            if (!pc.ok) fail("poset case fails at " + where);
            rep.poset_cases.push_back(std::move(pc));
        }
    }
    rep.ok = rep.failure.empty();
    return rep;
}

namespace {

void require_smooth_complete(const TopologicalFan& fan) {
    const auto v = validate_fan(fan);
    if (!(v.condition1_ok && v.condition2_ok && v.complete && v.nonsingular))
        throw PreconditionError("the Euler sequence needs a valid, complete, nonsingular fan");
}

}  // namespace

EulerReport verify_euler_sequence_serial(const TopologicalFan& fan) {
    require_smooth_complete(fan);
    EulerReport rep;
    rep.ok = true;
    for (const auto& I : fan.top_simplices()) {
        rep.cones.push_back(verify_euler_cone(fan, I));
        rep.ok = rep.ok && rep.cones.back().ok;
    }
    return rep;
}

EulerReport verify_euler_sequence(const TopologicalFan& fan) {
    require_smooth_complete(fan);
    const auto& cones = fan.top_simplices();
    const long count = static_cast<long>(cones.size());
    EulerReport rep;
    rep.cones.resize(cones.size());
    std::vector<std::exception_ptr> errors(cones.size());

#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        try {
            rep.cones[k] = verify_euler_cone(fan, cones[k]);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    rep.ok = true;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        if (errors[k]) std::rethrow_exception(errors[k]);
        rep.ok = rep.ok && rep.cones[k].ok;
    }
    return rep;
}

CharacterMatrix line_bundle_transition(const TopologicalFan& fan, int i, const Simplex& I, const Simplex& J) {
    require_ray(fan, i);
    const Simplex a = normalize_simplex(I), b = normalize_simplex(J);
    auto c = [&](const Simplex& s) {
        const int q = position(s, i);
        return q >= 0 ? dual_basis(fan, s)[static_cast<std::size_t>(q)] : zero_vector(fan.n());
    };
    fan.require_top(a);
    fan.require_top(b);
    CharacterMatrix out(1, 1);
    out.set(0, 0, Gauss(1), c(a) - c(b));
    return out;
}

}  // namespace ttk
