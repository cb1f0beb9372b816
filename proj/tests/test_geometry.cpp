#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rgcr/geometry.hpp"

using namespace rgcr;
using std::numbers::pi;

TEST_CASE("interior_angles matches the bisection oracle on the full grid") {
    // The closed form is derived, not quoted: trust it only against an
    // independent solve of the equal-edge-length condition.
    for (int n = 3; n <= 42; ++n)
        for (int m = n; m <= 42; ++m) {
            if ((n - 2) * (m - 2) < 4) continue;
            const auto [alpha_n, alpha_m] = interior_angles(n, m);
            const double oracle = oracles::bisect_equal_edge_alpha(n, m);
            CHECK(std::abs(alpha_n - oracle) < 1e-10);
            CHECK(alpha_n + alpha_m == doctest::Approx(pi).epsilon(1e-15));
        }
}

TEST_CASE("interior angle examples") {
    auto [a8, b8] = interior_angles(8, 8);
    CHECK(a8 == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(b8 == doctest::Approx(pi / 2).epsilon(1e-14));

    auto [a3, a6] = interior_angles(3, 6);
    CHECK(a3 == doctest::Approx(pi / 3).epsilon(1e-14));
    CHECK(a6 == doctest::Approx(2 * pi / 3).epsilon(1e-14));

    auto [a4, b4] = interior_angles(4, 4);
    CHECK(a4 == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(b4 == doctest::Approx(pi / 2).epsilon(1e-14));

    auto [a45, b45] = interior_angles(4, 5);
    CHECK(a45 == doctest::Approx(2 * std::atan(std::cos(pi / 4) / std::cos(pi / 5))));
    // Frozen from the bisection oracle.
    CHECK(a45 == doctest::Approx(1.4365630329598678).epsilon(1e-13));
    CHECK(b45 == doctest::Approx(pi - a45));

    CHECK_THROWS_AS(interior_angles(3, 3), std::domain_error);
    CHECK_THROWS_AS(interior_angles(3, 5), std::domain_error);
    CHECK_THROWS_AS(interior_angles(2, 8), std::invalid_argument);
}

TEST_CASE("the two polygons share an edge length") {
    for (int n = 3; n <= 24; ++n)
        for (int m = n; m <= 24; ++m) {
            if ((n - 2) * (m - 2) <= 4) continue;  // flat cases have no scale
            const auto [alpha_n, alpha_m] = interior_angles(n, m);
            const auto gn = polygon_geometry(n, alpha_n);
            const auto gm = polygon_geometry(m, alpha_m);
            CHECK(std::abs(gn.edge_length - gm.edge_length) < 1e-10);
            CHECK(gn.edge_length > 0);
        }
}

TEST_CASE("polygon_geometry areas and degenerate cases") {
    const auto octagon = polygon_geometry(8, pi / 2);
    CHECK(octagon.area == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(!octagon.flat);

    const auto hexagon = polygon_geometry(6, 2 * pi / 3);
    CHECK(hexagon.flat);
    CHECK(hexagon.area == 0.0);
    CHECK(hexagon.edge_length == 0.0);

    const auto [a45, b45] = interior_angles(4, 5);
    const auto square = polygon_geometry(4, a45);
    CHECK(square.area == doctest::Approx(2 * pi - 4 * a45));
    CHECK(square.area == doctest::Approx(0.5369331753401152).epsilon(1e-13));
    const auto pentagon = polygon_geometry(5, b45);
    CHECK(10 * square.area + 8 * pentagon.area == doctest::Approx(4 * pi).epsilon(1e-12));

    CHECK_THROWS_AS(polygon_geometry(4, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(polygon_geometry(4, pi / 2 + 0.1), std::invalid_argument);
    CHECK_THROWS_AS(polygon_geometry(2, 1.0), std::invalid_argument);
}

TEST_CASE("area is strictly decreasing in the interior angle") {
    for (int n : {3, 5, 8, 13}) {
        double prev = polygon_geometry(n, 1e-3).area;
        const double top = (n - 2) * pi / n;
        for (int k = 1; k <= 40; ++k) {
            const double alpha = 1e-3 + (top - 2e-3) * k / 40.0;
            const double area = polygon_geometry(n, alpha).area;
            CHECK(area < prev);
            prev = area;
        }
    }
}

TEST_CASE("gauss_bonnet_residual vanishes on every signature of genus 2-4") {
    for (int g : {2, 3, 4})
        for (const auto& sig : enumerate_signatures(g))
            CHECK(std::abs(gauss_bonnet_residual(sig)) < 1e-9);
}

TEST_CASE("gauss_bonnet_residual on the published examples") {
    CHECK(std::abs(gauss_bonnet_residual({2, 4, 5, 10, 8})) < 1e-9);
    CHECK(std::abs(gauss_bonnet_residual({2, 8, 8, 1, 1})) < 1e-9);
    CHECK(std::abs(gauss_bonnet_residual({3, 6, 9, 3, 2})) < 1e-9);
    CHECK_THROWS_AS(gauss_bonnet_residual({1, 4, 4, std::nullopt, std::nullopt}),
                    std::invalid_argument);
}

TEST_CASE("wedge angles") {
    const auto w = wedge_angles(8, pi / 2);
    CHECK(w.D == doctest::Approx(pi / 2));
    CHECK(w.A == doctest::Approx(pi / 4));
    CHECK(w.B == doctest::Approx(pi / 4));
    CHECK(w.C == w.B);
    CHECK(w.E == w.B);
    CHECK(w.F == w.B);

    const auto w4 = wedge_angles(4, pi / 2);
    CHECK(w4.D == doctest::Approx(pi / 2));
    CHECK(w4.A == doctest::Approx(pi / 2));

    const auto [a45, b45] = interior_angles(4, 5);
    CHECK(wedge_angles(5, pi - a45).D == doctest::Approx(a45));

    // The two wedges over one edge share the right-angle dihedral.
    for (int n = 3; n <= 12; ++n)
        for (int m = n; m <= 12; ++m) {
            if ((n - 2) * (m - 2) < 4) continue;
            const auto [an, am] = interior_angles(n, m);
            const auto wn = wedge_angles(n, an);
            const auto wm = wedge_angles(m, am);
            CHECK(wn.D + wm.D == doctest::Approx(pi).epsilon(1e-13));
            CHECK((wn.D + wm.D) / 2 == doctest::Approx(pi / 2).epsilon(1e-13));
        }
}

TEST_CASE("dihedral check") {
    CHECK(dihedral_check(pi / 2, pi / 2) == doctest::Approx(pi / 2));
    CHECK(dihedral_check(pi / 3, pi / 3) == doctest::Approx(2 * pi / 3));
    const auto [a45, b45] = interior_angles(4, 5);
    CHECK(std::abs(dihedral_check(a45, b45) - pi / 2) < 1e-12);
}

TEST_CASE("regular cross-ratio") {
    CHECK(regular_cross_ratio(4) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(regular_cross_ratio(6) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK_THROWS_AS(regular_cross_ratio(3), std::domain_error);
    CHECK_THROWS_AS(regular_cross_ratio(2), std::invalid_argument);

    // Decreases monotonically to 4/3 from x = 5 on.
    double prev = regular_cross_ratio(5);
    for (int x = 6; x <= 100; ++x) {
        const double r = regular_cross_ratio(x);
        CHECK(r < prev);
        CHECK(r > 4.0 / 3.0);
        prev = r;
    }
    CHECK(regular_cross_ratio(100) == doctest::Approx(4.0 / 3.0).epsilon(1e-2));
}
