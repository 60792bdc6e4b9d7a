#include "ttk/klyachko.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace ttk {

void validate_data(KlyachkoData& data) {
    const std::size_t r = data.rank;
    for (auto& [i, pieces] : data.rays) {
        const std::string where = "ray " + std::to_string(i);
        std::sort(pieces.begin(), pieces.end(),
                  [](const WeightedPiece& x, const WeightedPiece& y) { return lex_less(x.weight, y.weight); });
        GSubspace total = GSubspace::zero(r);
        std::size_t dims = 0;
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            const auto& p = pieces[k];
            if (p.piece.ambient_dim() != r)
                throw InputError(where + ": piece lives in dimension " + std::to_string(p.piece.ambient_dim()) +
                                 ", rank is " + std::to_string(r));
            if (p.piece.is_zero()) throw InputError(where + ": zero piece at weight " + to_string(p.weight));
            if (k > 0 && pieces[k - 1].weight == p.weight)
                throw InputError(where + ": weight " + to_string(p.weight) + " listed twice");
            dims += p.piece.dim();
            total = sum(total, p.piece);
        }
        if (dims != r || total.dim() != r)
            throw InputError(where + ": pieces do not form a direct sum decomposition of the space");
    }
}

namespace {

const std::vector<WeightedPiece>& ray_pieces(const KlyachkoData& data, int i) {
    auto it = data.rays.find(i);
    if (it == data.rays.end()) throw InputError("no data for ray " + std::to_string(i));
    return it->second;
}

bool tuple_geq(Flavor f, const std::vector<RingElem>& s, const std::vector<RingElem>& t) {
    for (std::size_t p = 0; p < s.size(); ++p)
        if (!geq(f, s[p], t[p])) return false;
    return true;
}

struct TupleLess {
    bool operator()(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
    }
};

void require_rays(const TopologicalFan& fan, const KlyachkoData& data) {
    for (int i : fan.used_rays())
        if (!data.rays.count(i)) throw InputError("missing data for ray " + std::to_string(i));
}

}  // namespace

GSubspace filtration_value(const KlyachkoData& data, int i, const RingElem& mu) {
    GSubspace out = GSubspace::zero(data.rank);
    for (const auto& p : ray_pieces(data, i))
        if (geq(data.flavor, p.weight, mu)) out = sum(out, p.piece);
    return out;
}

QSubspace real_filtration_value(const KlyachkoData& data, int i, const RingElem& mu) {
    return realify(filtration_value(data, i, mu));
}

// ---------------------------------------------------------------------------
// Compatibility

std::optional<Grading> grade_cone(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I,
                                  std::string* why) {
    fan.require(I);
    const std::size_t r = data.rank;
    const std::size_t p = I.size();
    auto fail = [&](std::string msg) -> std::optional<Grading> {
        if (why) *why = std::move(msg);
        return std::nullopt;
    };

    std::vector<std::vector<RingElem>> weights(p);
    std::vector<std::vector<GSubspace>> levels(p);
    for (std::size_t q = 0; q < p; ++q)
        for (const auto& piece : ray_pieces(data, I[q])) {
            weights[q].push_back(piece.weight);
            levels[q].push_back(filtration_value(data, I[q], piece.weight));
        }

    // Tuples of stored weights, lexicographic with the first ray most significant.
    std::vector<std::vector<std::size_t>> tuples;
    if (std::all_of(weights.begin(), weights.end(), [](const auto& w) { return !w.empty(); })) {
        std::vector<std::size_t> idx(p, 0);
        for (;;) {
            tuples.push_back(idx);
            std::size_t q = p;
            while (q > 0) {
                --q;
                if (++idx[q] < weights[q].size()) break;
                idx[q] = 0;
                if (q == 0) {
                    q = p + 1;
                    break;
                }
            }
            if (q == p + 1 || p == 0) break;
        }
    }

    std::vector<std::vector<RingElem>> tw(tuples.size());
    std::vector<GSubspace> V(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        GSubspace v = GSubspace::full(r);
        for (std::size_t q = 0; q < p; ++q) {
            tw[t].push_back(weights[q][tuples[t][q]]);
            v = intersect(v, levels[q][tuples[t][q]]);
        }
        V[t] = std::move(v);
    }

    std::vector<RVector> duals;
    if (p == fan.n()) duals = dual_basis(fan, I);

    Grading g;
    g.cone = I;
    std::vector<std::size_t> owner;  // tuple index of each piece
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (V[t].is_zero()) continue;
        GSubspace above = GSubspace::zero(r);
        for (std::size_t u = 0; u < tuples.size(); ++u)
            if (u != t && tuple_geq(data.flavor, tw[u], tw[t])) above = sum(above, V[u]);
        GSubspace c = complement_in(intersect(V[t], above), V[t]);
        if (c.is_zero()) continue;
        RVector chi;
        if (!duals.empty()) {
            chi = zero_vector(fan.n());
            for (std::size_t q = 0; q < p; ++q) chi = chi + scale_left(tw[t][q], duals[q]);
        }
        g.pieces.push_back({tw[t], std::move(chi), std::move(c)});
        owner.push_back(t);
    }

    std::size_t dims = 0;
    GSubspace total = GSubspace::zero(r);
    for (const auto& piece : g.pieces) {
        dims += piece.piece.dim();
        total = sum(total, piece.piece);
    }
    if (dims != r || total.dim() != r)
        return fail("graded pieces span dimension " + std::to_string(total.dim()) + " (total " +
                    std::to_string(dims) + ") of " + std::to_string(r));

    for (std::size_t q = 0; q < p; ++q)
        for (std::size_t w = 0; w < weights[q].size(); ++w) {
            GSubspace rebuilt = GSubspace::zero(r);
            for (const auto& piece : g.pieces)
                if (geq(data.flavor, piece.tuple[q], weights[q][w])) rebuilt = sum(rebuilt, piece.piece);
            if (!(rebuilt == levels[q][w]))
                return fail("ray " + std::to_string(I[q]) + " at weight " + to_string(weights[q][w]) +
                            " is not recovered by the grading");
        }
    return g;
}

CompatibilityResult check_compatibility_serial(const TopologicalFan& fan, const KlyachkoData& data) {
    require_rays(fan, data);
    CompatibilityResult res;
    for (const auto& I : fan.maximal_simplices()) {
        std::string why;
        auto g = grade_cone(fan, data, I, &why);
        if (!g) {
            if (res.compatible) res.failure = {{I, why}};
            res.compatible = false;
            continue;
        }
        res.witnesses.emplace(I, std::move(*g));
    }
    return res;
}

CompatibilityResult check_compatibility(const TopologicalFan& fan, const KlyachkoData& data) {
    require_rays(fan, data);
    const auto& cones = fan.maximal_simplices();
    const long count = static_cast<long>(cones.size());
    std::vector<std::optional<Grading>> graded(cones.size());
    std::vector<std::string> why(cones.size());
    std::vector<std::exception_ptr> errors(cones.size());

#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        try {
            graded[k] = grade_cone(fan, data, cones[k], &why[k]);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }

    CompatibilityResult res;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        if (errors[k]) std::rethrow_exception(errors[k]);
        if (!graded[k]) {
            if (res.compatible) res.failure = {{cones[k], why[k]}};
            res.compatible = false;
            continue;
        }
        res.witnesses.emplace(cones[k], std::move(*graded[k]));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Morphisms

std::string to_string(MorphismKind k) {
    switch (k) {
        case MorphismKind::not_morphism: return "not_morphism";
        case MorphismKind::morphism: return "morphism";
        case MorphismKind::mono: return "mono";
        case MorphismKind::epi: return "epi";
        case MorphismKind::iso: return "iso";
    }
    return "?";
}

namespace {

template <class F, class Level>
MorphismKind classify(const TopologicalFan& fan, const Matrix<F>& f, const KlyachkoData& E, const KlyachkoData& Fd,
                      std::size_t scale, Level level) {
    if (f.rows() != scale * Fd.rank || f.cols() != scale * E.rank)
        throw DimensionError("classify_morphism: matrix is " + std::to_string(f.rows()) + "x" +
                             std::to_string(f.cols()) + ", expected " + std::to_string(scale * Fd.rank) + "x" +
                             std::to_string(scale * E.rank));
    require_rays(fan, E);
    require_rays(fan, Fd);
    const auto rays = fan.used_rays();
    for (int i : rays)
        for (const auto& p : ray_pieces(E, i))
            if (!level(Fd, i, p.weight).contains(image(f, level(E, i, p.weight))))
                return MorphismKind::not_morphism;

    const std::size_t rk = rank(f);
    const bool injective = rk == f.cols();
    const bool surjective = rk == f.rows();
    if (injective && surjective) return MorphismKind::iso;
    if (surjective) {
        bool equal = true;
        for (int i : rays)
            for (const auto* d : {&E, &Fd})
                for (const auto& p : ray_pieces(*d, i))
                    if (!(image(f, level(E, i, p.weight)) == level(Fd, i, p.weight))) equal = false;
        if (equal) return MorphismKind::epi;
    }
    if (injective) return MorphismKind::mono;
    return MorphismKind::morphism;
}

}  // namespace

MorphismKind classify_morphism(const TopologicalFan& fan, const GMatrix& f, const KlyachkoData& E,
                               const KlyachkoData& F, Linearity linearity) {
    if (linearity == Linearity::real) return classify_morphism(fan, realify(f), E, F);
    return classify(fan, f, E, F, 1, filtration_value);
}

MorphismKind classify_morphism(const TopologicalFan& fan, const QMatrix& f, const KlyachkoData& E,
                               const KlyachkoData& F) {
    return classify(fan, f, E, F, 2, real_filtration_value);
}

std::size_t hom_dimension(const TopologicalFan& fan, const KlyachkoData& E, const KlyachkoData& F, const Simplex& I,
                          const Grading& gE, const Grading& gF) {
    fan.require_top(I);
    if (E.flavor != F.flavor) throw PreconditionError("hom_dimension: data of different flavors");
    if (gE.cone != I || gF.cone != I) throw PreconditionError("hom_dimension: witnesses belong to another cone");
    std::size_t total = 0;
    for (const auto& t : gE.pieces)
        for (const auto& s : gF.pieces)
            if (tuple_geq(E.flavor, s.tuple, t.tuple)) total += t.piece.dim() * s.piece.dim();
    return total;
}

namespace {

Grading require_grading(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I) {
    std::string why;
    auto g = grade_cone(fan, data, I, &why);
    if (!g) throw PreconditionError("data is incompatible on " + to_string(I) + ": " + why);
    return *g;
}

}  // namespace

std::size_t hom_dimension(const TopologicalFan& fan, const KlyachkoData& E, const KlyachkoData& F, const Simplex& I) {
    const Simplex s = normalize_simplex(I);
    return hom_dimension(fan, E, F, s, require_grading(fan, E, s), require_grading(fan, F, s));
}

bool charts_isomorphic(const TopologicalFan& fan, const KlyachkoData& E, const KlyachkoData& F, const Simplex& I) {
    const Simplex s = normalize_simplex(I);
    fan.require(s);
    if (E.rank != F.rank) return false;
    const auto& top = fan.top_simplices();
    auto host = std::find_if(top.begin(), top.end(), [&](const Simplex& t) { return is_subset(s, t); });
    if (host == top.end()) throw PreconditionError(to_string(s) + " lies in no maximal cone of dimension n");

    auto multiplicities = [&](const KlyachkoData& d) {
        std::map<std::vector<RingElem>, std::size_t, TupleLess> mult;
        for (const auto& piece : require_grading(fan, d, *host).pieces) {
            std::vector<RingElem> sub;
            for (int i : s) sub.push_back(piece.tuple[static_cast<std::size_t>(position(*host, i))]);
            mult[sub] += piece.piece.dim();
        }
        return mult;
    };
    const auto a = multiplicities(E);
    const auto b = multiplicities(F);
    if (a.size() != b.size()) return false;
    for (auto x = a.begin(), y = b.begin(); x != a.end(); ++x, ++y)
        if (!(x->first == y->first) || x->second != y->second) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Character matrices

void CharacterMatrix::set(std::size_t r, std::size_t c, Gauss scalar, RVector exponent) {
    auto& slot = entries_.at(r * cols_ + c);
    if (scalar.is_zero())
        slot.reset();
    else
        slot = CharEntry{std::move(scalar), std::move(exponent)};
}

std::vector<std::vector<std::complex<double>>> CharacterMatrix::evaluate(const TorusPoint& t) const {
    std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (const auto& e = at(r, c)) {
                const std::complex<double> a(e->scalar.re.get_d(), e->scalar.im.get_d());
                out[r][c] = a * char_eval(e->exponent, t);
            }
    return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    ComplexMatrix p(a.size(), std::vector<std::complex<double>>(cols));
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != inner) throw DimensionError("multiply: inner dimensions differ");
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t c = 0; c < cols; ++c) p[r][c] += a[r][k] * b[k][c];
    }
    return p;
}

namespace {

GMatrix basis_matrix(const Grading& g, std::size_t r, std::vector<RVector>& characters) {
    GMatrix B(r, r);
    std::size_t col = 0;
    for (const auto& piece : g.pieces) {
        if (piece.character.empty())
            throw PreconditionError("witness on " + to_string(g.cone) + " carries no characters");
        for (std::size_t k = 0; k < piece.piece.dim(); ++k, ++col) {
            if (col >= r) throw PreconditionError("witness on " + to_string(g.cone) + " exceeds the rank");
            for (std::size_t x = 0; x < r; ++x) B(x, col) = piece.piece.basis()(k, x);
            characters.push_back(piece.character);
        }
    }
    if (col != r) throw PreconditionError("witness on " + to_string(g.cone) + " does not span the space");
    return B;
}

}  // namespace

CharacterMatrix transition_cocycle(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I,
                                   const Simplex& J, const Grading& gI, const Grading& gJ) {
    fan.require_top(I);
    fan.require_top(J);
    const std::size_t r = data.rank;
    std::vector<RVector> chi, psi;
    const GMatrix BI = basis_matrix(gI, r, chi);
    const GMatrix BJ = basis_matrix(gJ, r, psi);
    const auto BIinv = inverse(BI);
    if (!BIinv) throw InternalError("witness basis on " + to_string(I) + " is singular");
    const GMatrix A = *BIinv * BJ;
    const Simplex common = intersect(I, J);

    CharacterMatrix out(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (A(i, j).is_zero()) continue;
            RVector e = chi[i] - psi[j];
            if (!extends(data.flavor, fan, e, common))
                throw InternalError("cocycle entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") does not extend over " + to_string(common));
            out.set(i, j, A(i, j), std::move(e));
        }
    return out;
}

CharacterMatrix transition_cocycle(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I,
                                   const Simplex& J) {
    const Simplex a = normalize_simplex(I), b = normalize_simplex(J);
    return transition_cocycle(fan, data, a, b, require_grading(fan, data, a), require_grading(fan, data, b));
}

CharacterMatrix manifold_transition(const TopologicalFan& fan, const Simplex& I, const Simplex& J) {
    fan.require_top(I);
    const auto alpha = dual_basis(fan, J);
    const std::size_t n = fan.n();
    CharacterMatrix out(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        RVector e(n);
        for (std::size_t q = 0; q < n; ++q) e[q] = bracket(alpha[j], fan.ray(I[q]));
        out.set(j, 0, Gauss(1), std::move(e));
    }
    return out;
}

TorusPoint apply_transition(const CharacterMatrix& t, const TorusPoint& w) {
    TorusPoint out;
    for (const auto& row : t.evaluate(w)) out.push_back(row.at(0));
    return out;
}

}  // namespace ttk
