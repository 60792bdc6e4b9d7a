#pragma once

#include <vector>

#include "ttk/ring.hpp"

namespace ttk {

// { x in Q^vars : eq x = eq_rhs, ge x >= ge_rhs }
struct LinearSystem {
    std::size_t vars = 0;
    std::vector<std::vector<Rational>> eq;
    std::vector<Rational> eq_rhs;
    std::vector<std::vector<Rational>> ge;
    std::vector<Rational> ge_rhs;
};

// Exact feasibility. Equalities are used to substitute variables away first,
// the remaining inequalities go through Fourier-Motzkin elimination.
bool feasible(LinearSystem sys);

}  // namespace ttk
