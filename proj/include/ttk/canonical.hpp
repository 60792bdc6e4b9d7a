#pragma once

// The canonical sequence 0 -> X x Lie(Ker lambda) -> (+) L_i -> tau X -> 0 at
// the level of Klyachko data and the Euler map J_I.

#include <optional>
#include <string>
#include <vector>

#include "ttk/characters.hpp"
#include "ttk/fan.hpp"
#include "ttk/klyachko.hpp"

namespace ttk {

// Rank 1, smooth: the line sits at weight delta_ik * 1 on ray k.
KlyachkoData line_bundle_data(const TopologicalFan& fan, int i);
// Rank m: e_k at weight 1 on ray k, the other coordinates at weight 0.
KlyachkoData sum_line_bundles_data(const TopologicalFan& fan);
// Every ray: the whole space at weight 0.
KlyachkoData trivial_data(const TopologicalFan& fan, std::size_t rank);

// Tangent data in the chart basis of the designated cone (first of
// top_simplices()). Ray k's pieces come from a cone K containing k and are
// moved over by the differential of the chart change at x0. That differential
// is only R-linear in general; DomainError if a transported piece is not a
// complex subspace.
KlyachkoData tangent_data(const TopologicalFan& fan);
// Tangent data over U_I alone, in chart-I coordinates: rays of I only.
KlyachkoData tangent_chart_data(const TopologicalFan& fan, const Simplex& I);

// 2n x 2m, rows (Re u_j, Im u_j) by increasing ray index of I, columns
// (x_1..x_m, y_1..y_m).
QMatrix euler_map_matrix(const TopologicalFan& fan, const Simplex& I);

// Real Jacobian of the chart map q_I at z, same layout.
std::vector<std::vector<double>> jacobian_numeric(const TopologicalFan& fan, const Simplex& I, const TorusPoint& z);
// q_I(z)_j = prod_k z_k^(a_jk)
TorusPoint chart_map(const TopologicalFan& fan, const Simplex& I, const TorusPoint& z);

struct PosetCase {
    int ray = 0;
    std::string regime;  // "0>=mu", "1>=mu", "neither"
    RingElem weight;
    std::size_t kernel_dim = 0;
    bool ok = false;
};

struct EulerConeReport {
    Simplex cone;
    QMatrix J;
    std::size_t rank = 0;
    QSubspace kernel;
    std::vector<PosetCase> poset_cases;
    bool ok = false;
    std::string failure;
};

struct EulerReport {
    std::vector<EulerConeReport> cones;
    bool ok = false;
};

EulerConeReport verify_euler_cone(const TopologicalFan& fan, const Simplex& I);
// Precondition: condition 1, condition 2, complete, nonsingular.
EulerReport verify_euler_sequence(const TopologicalFan& fan);
EulerReport verify_euler_sequence_serial(const TopologicalFan& fan);

// 1 x 1 transition of L_i between charts I and J: exponent c_I - c_J where
// c_I = alpha_i^I if i is in I and 0 otherwise.
CharacterMatrix line_bundle_transition(const TopologicalFan& fan, int i, const Simplex& I, const Simplex& J);

}  // namespace ttk
