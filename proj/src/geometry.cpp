#include "rgcr/geometry.hpp"

#include <cmath>
#include <numbers>

namespace rgcr {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kFlatTol = 1e-12;
}  // namespace

std::pair<double, double> interior_angles(int n, int m) {
    if (n < 3 || m < 3) throw std::invalid_argument("polygons need at least 3 sides");
    if ((n - 2) * (m - 2) < 4)
        throw std::domain_error("spherical vertex type: (n-2)(m-2) < 4 has no flat or hyperbolic [n,m,n,m] tiling");
    // Equal edge length with alpha_m = pi - alpha_n gives
    //   cos(pi/n)/sin(alpha_n/2) = cos(pi/m)/cos(alpha_n/2)
    // so tan(alpha_n/2) = cos(pi/n)/cos(pi/m).
    const double alpha_n = 2.0 * std::atan(std::cos(kPi / n) / std::cos(kPi / m));
    return {alpha_n, kPi - alpha_n};
}

PolygonGeometry polygon_geometry(int sides, double alpha) {
    if (sides < 3) throw std::invalid_argument("polygons need at least 3 sides");
    const double area = (sides - 2) * kPi - sides * alpha;
    if (alpha <= 0.0 || area < -kFlatTol)
        throw std::invalid_argument("interior angle outside (0, (n-2)pi/n]");
    PolygonGeometry geo;
    geo.sides = sides;
    geo.alpha = alpha;
    if (area <= kFlatTol) {
        geo.flat = true;
        geo.area = 0.0;
        geo.edge_length = 0.0;
        return geo;
    }
    geo.area = area;
    // Right triangle with angles pi/sides, alpha/2 at half an edge:
    // cosh(len/2) = cos(pi/sides)/sin(alpha/2). The ratio is >= 1 whenever
    // the defect is positive; clamp roundoff at the flat boundary.
    const double ratio = std::cos(kPi / sides) / std::sin(alpha / 2.0);
    geo.edge_length = 2.0 * std::acosh(std::max(1.0, ratio));
    return geo;
}

double gauss_bonnet_residual(const TilingSignature& sig) {
    if (!sig.k_n || !sig.k_m)
        throw std::invalid_argument("gauss_bonnet_residual needs explicit polygon counts");
    const auto [alpha_n, alpha_m] = interior_angles(sig.n, sig.m);
    const double a_n = polygon_geometry(sig.n, alpha_n).area;
    const double a_m = polygon_geometry(sig.m, alpha_m).area;
    return static_cast<double>(*sig.k_n) * a_n + static_cast<double>(*sig.k_m) * a_m -
           4.0 * kPi * (sig.genus - 1);
}

WedgeAngles wedge_angles(int n, double alpha) {
    if (n < 3) throw std::invalid_argument("polygons need at least 3 sides");
    if (alpha <= 0.0 || alpha >= kPi) throw std::invalid_argument("interior angle outside (0, pi)");
    WedgeAngles w;
    w.A = 2.0 * kPi / n;
    w.B = w.C = w.E = w.F = alpha / 2.0;
    w.D = kPi - alpha;
    return w;
}

double dihedral_check(double alpha_n, double alpha_m) {
    return (kPi - alpha_n + kPi - alpha_m) / 2.0;
}

double regular_cross_ratio(int x) {
    if (x < 3) throw std::invalid_argument("polygons need at least 3 sides");
    if (x == 3)
        throw std::domain_error("cross-ratio denominator 2cos(2pi/3)+1 vanishes; ideal triangles are always regular");
    return 1.0 + 1.0 / (2.0 * std::cos(2.0 * kPi / x) + 1.0);
}

}  // namespace rgcr
