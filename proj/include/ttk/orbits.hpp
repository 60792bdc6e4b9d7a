#pragma once

// Orbit-cone correspondence: orbits are named by their simplices.

#include <vector>

#include "ttk/fan.hpp"

namespace ttk {

struct OrbitDescriptor {
    Simplex simplex;
    std::size_t complex_dimension = 0;  // n - |I|
};

std::vector<OrbitDescriptor> enumerate_orbits(const TopologicalFan& fan);
// { J in Sigma : J subset of I }, the orbits making up U_I.
std::vector<Simplex> chart_orbits(const TopologicalFan& fan, const Simplex& I);
// { I in Sigma : J subset of I }, the orbits making up the closure V(J).
std::vector<Simplex> closure_orbits(const TopologicalFan& fan, const Simplex& J);

}  // namespace ttk
