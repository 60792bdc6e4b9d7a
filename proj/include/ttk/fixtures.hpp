#pragma once

#include "ttk/fan.hpp"

namespace ttk::fixtures {

// Four rays in R^2 whose b- and v-parts span different fans: a topological
// toric manifold that is not a toric variety.
TopologicalFan nontoric_fan();
// Classical P^1 and P^2 fans embedded diagonally (b = v, c = 0).
TopologicalFan diag_p1_fan();
TopologicalFan diag_p2_fan();

}  // namespace ttk::fixtures
