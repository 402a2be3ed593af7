#ifndef WIGNER_GEOMETRY_HPP
#define WIGNER_GEOMETRY_HPP

#include <array>
#include <optional>

namespace wigner {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

double dot(Vec3 a, Vec3 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec3 a);

/// acos with a 1e-12 tolerance band outside [-1, 1]; larger excursions
/// raise DegenerateAngle instead of clamping.
double safe_acos(double c);

/// Canonical tetrahedron edge roles.  The six edge vectors satisfy
/// e1 + e2 + e4 + e5 = 0 with diagonals e12 = e1 + e2 and e24 = e2 + e4;
/// symbol-specific edge labels map onto these slots.
enum class EdgeRole { E1 = 0, E2, E4, E5, E12, E24 };

/// Six tetrahedron edge lengths J_r (already including the +1/2 shift).
struct EdgeSet {
    // order: J1, J2, J4, J5, J12, J24
    std::array<double, 6> length;

    double operator[](EdgeRole r) const { return length[static_cast<int>(r)]; }
};

/// A concrete vector realization with signed volume fixed non-positive.
struct TetraConfig {
    Vec3 j1, j2, j4, j5, j12, j24;
    double signed_volume; // (1/6) j1 . (j2 x j4), <= 0 by convention

    double volume() const { return signed_volume < 0 ? -signed_volume : signed_volume; }
};

enum class TetraAngleKind { NineJ, TwelveJ, FifteenJ };

/// Geometric quantities entering the asymptotic formulas.  psi holds the
/// external dihedral angle at each canonical edge; phi1/phi4/theta are the
/// twist angles of the one-small-spin formula (the two-small 12j angles
/// phi2/phi3 are the same quantities on the relabeled tetrahedron).
/// theta2 and the interior angles are only populated for FifteenJ.
struct AngleBundle {
    double volume;
    std::array<double, 6> psi; // indexed by EdgeRole
    double phi1, phi4, theta;
    std::optional<double> theta2;    // angle between e1 and e12
    std::optional<double> phi1_int;  // pi - psi[E1]
    std::optional<double> phi12_int; // pi - psi[E12]

    double psi_at(EdgeRole r) const { return psi[static_cast<int>(r)]; }
    double edge_weighted_psi_sum(const EdgeSet& edges) const;
};

/// Gram matrix of the vertex vectors (J1, J12, -J5), from the law of
/// cosines.  Always computable; definiteness is decided downstream.
std::array<std::array<double, 3>, 3> gram_from_edges(const EdgeSet& edges);

bool classically_allowed(const EdgeSet& edges);

/// Reconstructs a vector configuration whose Gram matrix reproduces
/// gram_from_edges(edges).  Throws NotClassicallyAllowed outside the
/// classical region (det G below the scale-invariant caustic threshold).
TetraConfig build_tetrahedron(const EdgeSet& edges);

AngleBundle angle_bundle(const TetraConfig& config,
                         TetraAngleKind kind = TetraAngleKind::NineJ);

/// Exterior angle between the edges J1 and J4 in the triangle (J1, J4, J5):
/// theta = pi - acos((J1^2 + J4^2 - J5^2) / (2 J1 J4)).
/// Throws NotATriangle if the lengths fail the triangle inequality.
double triangle_theta(double J1, double J4, double J5);

bool triangle_allowed(double a, double b, double c);

} // namespace wigner

#endif
