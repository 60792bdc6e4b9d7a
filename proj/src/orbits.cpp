#include "ttk/orbits.hpp"

namespace ttk {

std::vector<OrbitDescriptor> enumerate_orbits(const TopologicalFan& fan) {
    std::vector<OrbitDescriptor> out;
    for (const auto& s : fan.simplices()) out.push_back({s, fan.n() - s.size()});
    return out;
}

std::vector<Simplex> chart_orbits(const TopologicalFan& fan, const Simplex& I) {
    const Simplex s = normalize_simplex(I);
    fan.require(s);
    std::vector<Simplex> out;
    for (const auto& J : fan.simplices())
        if (is_subset(J, s)) out.push_back(J);
    return out;
}

std::vector<Simplex> closure_orbits(const TopologicalFan& fan, const Simplex& J) {
    const Simplex s = normalize_simplex(J);
    fan.require(s);
    std::vector<Simplex> out;
    for (const auto& I : fan.simplices())
        if (is_subset(s, I)) out.push_back(I);
    return out;
}

}  // namespace ttk
