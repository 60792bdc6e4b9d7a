#include "ttk/fixtures.hpp"

namespace ttk::fixtures {

namespace {

RingElem r(long b, long v) { return {b, 0, v}; }

RVector diag(std::initializer_list<long> v) {
    RVector out;
    for (long x : v) out.push_back(RingElem::diag(x));
    return out;
}

}  // namespace

TopologicalFan nontoric_fan() {
    std::vector<RVector> rays = {
        {r(1, 1), r(0, 0)},
        {r(0, 0), r(1, 1)},
        {r(-1, -1), r(0, -2)},
        {r(-1, -1), r(-1, -1)},
    };
    return {2, std::move(rays), {{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
}

TopologicalFan diag_p1_fan() { return {1, {diag({1}), diag({-1})}, {{1}, {2}}}; }

TopologicalFan diag_p2_fan() {
    return {2, {diag({1, 0}), diag({0, 1}), diag({-1, -1})}, {{1, 2}, {2, 3}, {1, 3}}};
}

}  // namespace ttk::fixtures
