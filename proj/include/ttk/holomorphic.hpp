#pragma once

// Degeneration to classical toric geometry when every exponent is in diag(Z).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ttk/fan.hpp"
#include "ttk/klyachko.hpp"

namespace ttk {

// Decreasing Z-indexed filtration, stored by its jumps: (j, E(j)) for every
// j with E(j) != E(j+1), ascending in j. E(j) is the value at the first jump
// >= j, or 0 past the last jump.
struct ClassicalFiltration {
    std::vector<std::pair<long, GSubspace>> jumps;
    GSubspace value(long j, std::size_t rank) const;
};

struct ClassicalToricData {
    std::size_t n = 0;
    std::vector<std::vector<Integer>> rays;
    std::vector<Simplex> maximal_cones;
    std::size_t rank = 0;
    std::optional<std::map<int, ClassicalFiltration>> filtrations;
};

bool is_diag_fan(const TopologicalFan& fan);
// DegenerationError unless is_diag_fan.
ClassicalToricData to_toric(const TopologicalFan& fan);
// NotHolomorphicError for weights outside diag(Z).
ClassicalToricData to_classical_klyachko(const TopologicalFan& fan, const KlyachkoData& data);

// The diag fan of classical data.
TopologicalFan lift_fan(const ClassicalToricData& toric);
// Weights (j + 0i, j) at the jumps, pieces are successive complements.
KlyachkoData lift(const ClassicalToricData& toric);

}  // namespace ttk
