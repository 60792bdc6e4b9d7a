#include <doctest.h>

#include "oracles.hpp"
#include "ttk/canonical.hpp"
#include "ttk/fixtures.hpp"

using namespace ttk;

namespace {

RingElem R(long b, long v) { return {b, 0, v}; }

std::vector<Gauss> e(std::size_t k, std::size_t r) {
    std::vector<Gauss> v(r);
    v[k] = 1;
    return v;
}

const RingElem& weight_of(const KlyachkoData& d, int ray) {
    REQUIRE(d.rays.at(ray).size() == 1);
    return d.rays.at(ray).front().weight;
}

}  // namespace

TEST_CASE("line bundle data") {
    const auto fan = fixtures::nontoric_fan();
    const auto L1 = line_bundle_data(fan, 1);
    CHECK(L1.rank == 1);
    CHECK(L1.flavor == Flavor::smooth);
    CHECK(weight_of(L1, 1) == RingElem::one());
    CHECK(weight_of(L1, 2) == RingElem::zero());
    CHECK(weight_of(L1, 3) == RingElem::zero());
    CHECK(weight_of(L1, 4) == RingElem::zero());
    CHECK_THROWS(line_bundle_data(fan, 5));
    CHECK_THROWS(line_bundle_data(fan, 0));
}

TEST_CASE("sum of the line bundles") {
    const auto fan = fixtures::nontoric_fan();
    const auto E = sum_line_bundles_data(fan);
    CHECK(E.rank == 4);
    CHECK(filtration_value(E, 1, RingElem::zero()) == GSubspace::full(4));
    CHECK(filtration_value(E, 1, RingElem::one()) == GSubspace::span({e(0, 4)}, 4));
    CHECK(filtration_value(E, 1, RingElem(2, 0, 0)).is_zero());
    CHECK(filtration_value(E, 3, RingElem::one()) == GSubspace::span({e(2, 4)}, 4));
    CHECK(check_compatibility(fan, E).compatible);
}

TEST_CASE("trivial data") {
    const auto fan = fixtures::nontoric_fan();
    const auto T = trivial_data(fan, 3);
    CHECK(filtration_value(T, 2, RingElem::zero()) == GSubspace::full(3));
    CHECK(filtration_value(T, 2, RingElem::one()).is_zero());
    CHECK(filtration_value(T, 2, R(-1, -1)) == GSubspace::full(3));
    CHECK(trivial_data(fan, 0).rank == 0);
    CHECK(check_compatibility(fan, trivial_data(fan, 0)).compatible);
}

TEST_CASE("tangent data") {
    const auto fan = fixtures::nontoric_fan();
    const auto local = tangent_chart_data(fan, {1, 2});
    CHECK(local.rank == 2);
    CHECK(local.rays.size() == 2);
    CHECK(filtration_value(local, 2, RingElem::one()) == GSubspace::span({e(1, 2)}, 2));
    CHECK(filtration_value(local, 2, RingElem(0, 0, 1)).is_zero());
    CHECK(filtration_value(local, 1, RingElem::zero()) == GSubspace::full(2));
    CHECK(filtration_value(local, 2, R(-1, -1)) == GSubspace::full(2));

    // the chart change of the example is only R-linear at x0
    CHECK_THROWS_AS(tangent_data(fan), DomainError);

    for (const auto& f : {fixtures::diag_p1_fan(), fixtures::diag_p2_fan()}) {
        const auto T = tangent_data(f);
        CHECK(T.rank == f.n());
        for (int k : f.used_rays()) {
            CHECK(filtration_value(T, k, RingElem::one()).dim() == 1);
            CHECK(filtration_value(T, k, RingElem::zero()).dim() == f.n());
        }
        const auto res = check_compatibility(f, T);
        CHECK(res.compatible);
        for (const auto& I : f.top_simplices()) {
            const auto alpha = dual_basis(f, I);
            for (const auto& p : res.witnesses.at(I).pieces)
                CHECK(std::find(alpha.begin(), alpha.end(), p.character) != alpha.end());
        }
    }
}

TEST_CASE("Euler matrix") {
    const auto fan = fixtures::nontoric_fan();
    const QMatrix reference = QMatrix::from_rows({{1, 0, -1, -1, 0, 0, 0, 0},
                                                {0, 1, 0, -1, 0, 0, 0, 0},
                                                {0, 0, 0, 0, 1, 0, -1, -1},
                                                {0, 0, 0, 0, 0, 1, -2, -1}},
                                               8);
    CHECK(euler_map_matrix(fan, {1, 2}) == reference);

    std::vector<RVector> std_rays = {{RingElem::one(), RingElem::zero()}, {RingElem::zero(), RingElem::one()}};
    CHECK(euler_map_matrix(TopologicalFan(2, std_rays, {{1, 2}}), {1, 2}) == QMatrix::identity(4));

    for (const auto& f : {fixtures::nontoric_fan(), fixtures::diag_p1_fan(), fixtures::diag_p2_fan()})
        for (const auto& I : f.top_simplices()) {
            const auto J = euler_map_matrix(f, I);
            CHECK(rank(J) == 2 * f.n());
            CHECK(oracle::rank_by_minors(J) == 2 * f.n());
            CHECK(kernel(J) == kernel_lie_basis(f, I));
        }
}

TEST_CASE("numeric Jacobian") {
    std::mt19937 rng(50);
    for (const auto& f : {fixtures::nontoric_fan(), fixtures::diag_p1_fan(), fixtures::diag_p2_fan()})
        for (const auto& I : f.top_simplices()) {
            const auto exact = euler_map_matrix(f, I);
            const auto at_x0 = jacobian_numeric(f, I, TorusPoint(f.m(), 1.0));
            for (std::size_t r = 0; r < exact.rows(); ++r)
                for (std::size_t c = 0; c < exact.cols(); ++c)
                    CHECK(std::abs(at_x0[r][c] - exact(r, c).get_d()) <= 1e-12);
            for (int s = 0; s < 8; ++s) {
                const auto z = oracle::random_torus_point(rng, f.m());
                const auto J = jacobian_numeric(f, I, z);
                const auto fd = oracle::finite_difference_jacobian(f, I, z);
                double err = 0;
                for (std::size_t r = 0; r < fd.size(); ++r)
                    for (std::size_t c = 0; c < fd[r].size(); ++c) err = std::max(err, std::abs(J[r][c] - fd[r][c]));
                CHECK(err <= 1e-6);
            }
        }
    CHECK_THROWS_AS(jacobian_numeric(fixtures::nontoric_fan(), {1, 2}, {1.0, 0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("Euler sequence") {
    const auto fan = fixtures::nontoric_fan();
    const auto rep = verify_euler_sequence(fan);
    CHECK(rep.ok);
    REQUIRE(rep.cones.size() == 4);
    for (const auto& c : rep.cones) {
        CHECK(c.ok);
        CHECK(c.rank == 4);
        CHECK(c.kernel.dim() == 4);
        for (int k : c.cone)
            for (const std::string regime : {"0>=mu", "1>=mu", "neither"}) {
                const auto it = std::find_if(c.poset_cases.begin(), c.poset_cases.end(),
                                             [&](const PosetCase& p) { return p.ray == k && p.regime == regime; });
                REQUIRE(it != c.poset_cases.end());
                CHECK(it->ok);
                if (regime == "0>=mu") CHECK(it->kernel_dim == 4);
                if (regime == "1>=mu") CHECK(it->kernel_dim == 0);
            }
    }

    const auto p2 = verify_euler_sequence(fixtures::diag_p2_fan());
    CHECK(p2.ok);
    for (const auto& c : p2.cones) CHECK(c.kernel.dim() == 2);
    CHECK(verify_euler_sequence(fixtures::diag_p1_fan()).ok);

    const auto serial = verify_euler_sequence_serial(fan);
    REQUIRE(serial.cones.size() == rep.cones.size());
    for (std::size_t k = 0; k < serial.cones.size(); ++k) {
        CHECK(serial.cones[k].cone == rep.cones[k].cone);
        CHECK(serial.cones[k].J == rep.cones[k].J);
        CHECK(serial.cones[k].ok == rep.cones[k].ok);
    }
}

TEST_CASE("Euler sequence needs a nonsingular complete fan") {
    std::vector<RVector> rays;
    for (const auto& v : std::vector<std::vector<long>>{{1, 0}, {1, 2}, {-1, -1}})
        rays.push_back({RingElem::diag(v[0]), RingElem::diag(v[1])});
    const TopologicalFan singular(2, rays, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_THROWS_AS(verify_euler_sequence(singular), PreconditionError);
    CHECK_THROWS_AS(verify_euler_sequence_serial(singular), PreconditionError);
}

TEST_CASE("line bundle transitions") {
    const auto fan = fixtures::nontoric_fan();
    const auto same = line_bundle_transition(fan, 1, {1, 2}, {1, 2});
    REQUIRE(same.at(0, 0).has_value());
    CHECK(same.at(0, 0)->scalar == Gauss(1));
    CHECK(same.at(0, 0)->exponent == zero_vector(2));
    CHECK(line_bundle_transition(fan, 1, {1, 2}, {2, 3}).at(0, 0)->exponent == dual_basis(fan, {1, 2})[0]);
    CHECK(line_bundle_transition(fan, 1, {2, 3}, {1, 2}).at(0, 0)->exponent == -dual_basis(fan, {1, 2})[0]);

    std::mt19937 rng(20240601);
    const auto& top = fan.top_simplices();
    for (int i = 1; i <= 4; ++i) {
        const auto L = line_bundle_data(fan, i);
        for (const auto& I : top)
            for (const auto& J : top) {
                const auto g = line_bundle_transition(fan, i, I, J);
                const auto f = transition_cocycle(fan, L, I, J);
                CHECK(g.at(0, 0)->exponent == f.at(0, 0)->exponent);
                for (const auto& K : top) {
                    const auto h = line_bundle_transition(fan, i, J, K);
                    const auto k = line_bundle_transition(fan, i, K, I);
                    for (int s = 0; s < 16; ++s) {
                        const auto t = oracle::random_torus_point(rng, 2);
                        const auto prod = g.evaluate(t)[0][0] * h.evaluate(t)[0][0] * k.evaluate(t)[0][0];
                        REQUIRE(std::abs(prod - 1.0) < 1e-9);
                    }
                }
            }
    }
}
