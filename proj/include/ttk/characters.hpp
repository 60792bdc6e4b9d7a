#pragma once

// Characters chi^alpha and cocharacters lambda_beta of the torus (C*)^n.

#include <complex>
#include <vector>

#include "ttk/fan.hpp"

namespace ttk {

using TorusPoint = std::vector<std::complex<double>>;

// chi^alpha(g) = prod_k g_k^(alpha^k)
std::complex<double> char_eval(const RVector& alpha, const TorusPoint& g);
// lambda_beta(g) = (g^(beta^1), ..., g^(beta^n))
TorusPoint cochar_eval(const RVector& beta, std::complex<double> g);

// With the product as defined, chi^alpha(lambda_beta(g)) = g^<beta, alpha>.

bool extends_continuously(const TopologicalFan& fan, const RVector& alpha, const Simplex& I);
bool extends_smoothly(const TopologicalFan& fan, const RVector& alpha, const Simplex& I);
bool extends(Flavor flavor, const TopologicalFan& fan, const RVector& alpha, const Simplex& I);

// Every component lies in diag(Z) = { (v + 0i, v) }.
bool is_holomorphic_char(const RVector& alpha);
bool is_diag(const RingElem& mu);

// alpha modulo beta_I^perp; the restriction of chi^alpha to T_I.
class CharacterCoset {
public:
    CharacterCoset(RVector representative, BetaPerp modulus)
        : rep_(std::move(representative)), modulus_(std::move(modulus)) {}

    const RVector& representative() const { return rep_; }
    const BetaPerp& modulus() const { return modulus_; }

    friend bool operator==(const CharacterCoset& a, const CharacterCoset& b) {
        return a.modulus_.complex_part == b.modulus_.complex_part &&
               a.modulus_.lattice_span == b.modulus_.lattice_span && a.modulus_.contains(a.rep_ - b.rep_);
    }

private:
    RVector rep_;
    BetaPerp modulus_;
};

CharacterCoset character_coset(const TopologicalFan& fan, const RVector& alpha, const Simplex& I);

}  // namespace ttk
