#include "ttk/characters.hpp"

namespace ttk {

std::complex<double> char_eval(const RVector& alpha, const TorusPoint& g) {
    if (alpha.size() != g.size()) throw DimensionError("char_eval: exponent and point lengths differ");
    std::complex<double> acc = 1.0;
    for (std::size_t k = 0; k < g.size(); ++k) acc *= power_eval(g[k], alpha[k]);
    return acc;
}

TorusPoint cochar_eval(const RVector& beta, std::complex<double> g) {
    TorusPoint out;
    out.reserve(beta.size());
    for (const auto& mu : beta) out.push_back(power_eval(g, mu));
    return out;
}

bool extends(Flavor flavor, const TopologicalFan& fan, const RVector& alpha, const Simplex& I) {
    fan.require(I);
    for (int i : I) {
        const RingElem a = bracket(alpha, fan.ray(i));
        if (!(flavor == Flavor::continuous ? geq_c_zero(a) : geq_s_zero(a))) return false;
    }
    return true;
}

bool extends_continuously(const TopologicalFan& fan, const RVector& alpha, const Simplex& I) {
    return extends(Flavor::continuous, fan, alpha, I);
}

bool extends_smoothly(const TopologicalFan& fan, const RVector& alpha, const Simplex& I) {
    return extends(Flavor::smooth, fan, alpha, I);
}

bool is_diag(const RingElem& mu) {
    return sgn(mu.c) == 0 && mu.b.get_den() == 1 && mu.b.get_num() == mu.v;
}

bool is_holomorphic_char(const RVector& alpha) {
    for (const auto& mu : alpha)
        if (!is_diag(mu)) return false;
    return true;
}

CharacterCoset character_coset(const TopologicalFan& fan, const RVector& alpha, const Simplex& I) {
    if (alpha.size() != fan.n()) throw DimensionError("character_coset: length mismatch");
    return {alpha, beta_perp(fan, normalize_simplex(I))};
}

}  // namespace ttk
