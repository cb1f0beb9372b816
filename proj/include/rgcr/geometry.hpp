#pragma once

#include <utility>

#include "rgcr/signatures.hpp"

namespace rgcr {

/// Metric data of one regular polygon with a prescribed interior angle.
/// Euclidean polygons (zero angle defect) have no canonical size, so they
/// carry edge_length = 0 and flat = true.
struct PolygonGeometry {
    int sides = 0;
    double alpha = 0.0;        // interior angle, radians
    double edge_length = 0.0;  // hyperbolic side length, 0 when flat
    double area = 0.0;         // angle defect (sides-2)*pi - sides*alpha
    bool flat = false;
};

/// Dihedral angles of one bipyramid wedge over an n-gon face with interior
/// angle alpha: apex A = 2*pi/n, equatorial D = pi - alpha, and the four
/// lateral edges B = C = E = F = alpha/2.
struct WedgeAngles {
    double A, B, C, D, E, F;
};

/// Interior angles (alpha_n, alpha_m) of the regular n-gons and m-gons in
/// the [n,m,n,m] tiling. The pair is pinned by two conditions: the four
/// angles around a vertex sum to 2*pi (alpha_n + alpha_m = pi, enforced
/// exactly), and both polygons share one edge length, which closes to
/// alpha_n = 2*atan(cos(pi/n)/cos(pi/m)).
/// Throws std::domain_error when (n-2)(m-2) < 4 (spherical vertex type).
std::pair<double, double> interior_angles(int n, int m);

/// Regular polygon from (sides, interior angle). Requires
/// 0 < alpha <= (sides-2)*pi/sides; the upper endpoint is the flat case.
PolygonGeometry polygon_geometry(int sides, double alpha);

/// k_n a(T_n) + k_m a(T_m) - 4 pi (g-1); zero when the signature tiles a
/// genus-g surface. Requires explicit polygon counts (genus >= 2).
double gauss_bonnet_residual(const TilingSignature& sig);

WedgeAngles wedge_angles(int n, double alpha);

/// (pi - alpha_n + pi - alpha_m)/2, the dihedral angle along a glued wedge
/// edge; equals pi/2 exactly when alpha_n + alpha_m = pi.
double dihedral_check(double alpha_n, double alpha_m);

/// Cross-ratio of four consecutive ideal vertices of the regular ideal
/// x-gon: 1 + 1/(2 cos(2 pi/x) + 1). x = 3 makes the denominator vanish
/// and is a hard error.
double regular_cross_ratio(int x);

}  // namespace rgcr
