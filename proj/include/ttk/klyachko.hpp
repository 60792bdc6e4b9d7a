#pragma once

// Klyachko data: a vector space with one finite grading per ray. The
// filtrations E^i(mu) are derived from the gradings on demand.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttk/characters.hpp"
#include "ttk/fan.hpp"
#include "ttk/linalg.hpp"

namespace ttk {

struct WeightedPiece {
    RingElem weight;
    GSubspace piece;
};

struct KlyachkoData {
    std::size_t rank = 0;
    Flavor flavor = Flavor::continuous;
    // ray index -> pieces sorted lexicographically by weight
    std::map<int, std::vector<WeightedPiece>> rays;
};

// Sorts pieces and checks: nonzero pieces, distinct weights, ambient = rank,
// direct sum equal to the whole space. Throws InputError.
void validate_data(KlyachkoData& data);

// E^i(mu) = sum of the pieces of ray i whose weight dominates mu.
GSubspace filtration_value(const KlyachkoData& data, int i, const RingElem& mu);
// Same with the realified pieces, in Q^{2r}.
QSubspace real_filtration_value(const KlyachkoData& data, int i, const RingElem& mu);

// ---------------------------------------------------------------------------
// Compatibility

struct GradedPiece {
    std::vector<RingElem> tuple;  // (mu_i)_{i in I}
    RVector character;            // sum mu_i alpha_i^I
    GSubspace piece;
};

struct Grading {
    Simplex cone;
    std::vector<GradedPiece> pieces;
};

struct CompatibilityResult {
    bool compatible = true;
    std::map<Simplex, Grading> witnesses;
    std::optional<std::pair<Simplex, std::string>> failure;
};

// Greedy common grading per maximal cone; OpenMP across cones.
CompatibilityResult check_compatibility(const TopologicalFan& fan, const KlyachkoData& data);
// Same result, one cone at a time.
CompatibilityResult check_compatibility_serial(const TopologicalFan& fan, const KlyachkoData& data);

// Attempt on a single maximal cone; nullopt plus a message on failure.
std::optional<Grading> grade_cone(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I,
                                  std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Morphisms

enum class Linearity { complex, real };
enum class MorphismKind { not_morphism, morphism, mono, epi, iso };

std::string to_string(MorphismKind k);

// f is r_F x r_E over Q(i); with Linearity::real it is realified first.
MorphismKind classify_morphism(const TopologicalFan& fan, const GMatrix& f, const KlyachkoData& E,
                               const KlyachkoData& F, Linearity linearity = Linearity::complex);
// R-linear f given directly as a 2 r_F x 2 r_E rational matrix.
MorphismKind classify_morphism(const TopologicalFan& fan, const QMatrix& f, const KlyachkoData& E,
                               const KlyachkoData& F);

std::size_t hom_dimension(const TopologicalFan& fan, const KlyachkoData& E, const KlyachkoData& F, const Simplex& I,
                          const Grading& gE, const Grading& gF);
std::size_t hom_dimension(const TopologicalFan& fan, const KlyachkoData& E, const KlyachkoData& F, const Simplex& I);

// Compares the T_I-representations: character cosets mod beta_I^perp with
// multiplicities. I may be any simplex; gradings come from a maximal cone
// containing it and are coarsened.
bool charts_isomorphic(const TopologicalFan& fan, const KlyachkoData& E, const KlyachkoData& F, const Simplex& I);

// ---------------------------------------------------------------------------
// Character-valued matrices

struct CharEntry {
    Gauss scalar;
    RVector exponent;
};

class CharacterMatrix {
public:
    CharacterMatrix() = default;
    CharacterMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::optional<CharEntry>& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    // A zero scalar clears the entry.
    void set(std::size_t r, std::size_t c, Gauss scalar, RVector exponent);

    // Entry-wise a * chi^alpha(t).
    std::vector<std::vector<std::complex<double>>> evaluate(const TorusPoint& t) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::optional<CharEntry>> entries_;
};

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// phi_I phi_J^{-1} in the witness bases of I (rows) and J (columns).
CharacterMatrix transition_cocycle(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I,
                                   const Simplex& J, const Grading& gI, const Grading& gJ);
CharacterMatrix transition_cocycle(const TopologicalFan& fan, const KlyachkoData& data, const Simplex& I,
                                   const Simplex& J);

// n x 1: entry j carries the exponents (<alpha_j^J, beta_i>)_{i in I}, the
// j-th chart-J coordinate as a monomial in chart-I coordinates.
CharacterMatrix manifold_transition(const TopologicalFan& fan, const Simplex& I, const Simplex& J);

// Apply a manifold transition to chart coordinates.
TorusPoint apply_transition(const CharacterMatrix& t, const TorusPoint& w);

}  // namespace ttk
