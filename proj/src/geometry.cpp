#include "wigner/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

double safe_acos(double c)
{
    constexpr double band = 1e-12;
    if (c > 1.0 + band || c < -1.0 - band)
        throw DegenerateAngle("acos argument " + std::to_string(c) +
                              " outside tolerance band");
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

namespace {

constexpr double kCausticEps = 1e-12;

double det3(const std::array<std::array<double, 3>, 3>& g)
{
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
           g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

/// Angle between the planes meeting at edge (p, q), measured inside the
/// tetrahedron whose remaining vertices are r and s.
double internal_dihedral(Vec3 p, Vec3 q, Vec3 r, Vec3 s)
{
    Vec3 u = q - p;
    double uu = dot(u, u);
    Vec3 a = r - p, b = s - p;
    Vec3 ap = a - (dot(a, u) / uu) * u;
    Vec3 bp = b - (dot(b, u) / uu) * u;
    double na = norm(ap), nb = norm(bp);
    if (na < 1e-12 * norm(a) || nb < 1e-12 * norm(b))
        throw DegenerateAngle("dihedral edge has a collinear face");
    return safe_acos(dot(ap, bp) / (na * nb));
}

/// Angle between the planes spanned by (base, u) and (base, v).
double plane_angle(Vec3 base, Vec3 u, Vec3 v)
{
    Vec3 cu = cross(base, u);
    Vec3 cv = cross(base, v);
    double nu = norm(cu), nv = norm(cv);
    if (nu < 1e-12 * norm(base) * norm(u) ||
        nv < 1e-12 * norm(base) * norm(v))
        throw DegenerateAngle("collinear vectors in twist-angle formula");
    return safe_acos(dot(cu, cv) / (nu * nv));
}

double vector_angle(Vec3 a, Vec3 b)
{
    return safe_acos(dot(a, b) / (norm(a) * norm(b)));
}

} // namespace

std::array<std::array<double, 3>, 3> gram_from_edges(const EdgeSet& e)
{
    const double J1 = e[EdgeRole::E1], J2 = e[EdgeRole::E2],
                 J4 = e[EdgeRole::E4], J5 = e[EdgeRole::E5],
                 J12 = e[EdgeRole::E12], J24 = e[EdgeRole::E24];

    // vertex vectors (J1, J12, -J5); off-diagonals via closure:
    //   J12 - J1 = J2,  -J5 - J12 = J4,  -J5 - J1 = J2 + J4 (length J24)
    const double g01 = 0.5 * (J1 * J1 + J12 * J12 - J2 * J2);
    const double g02 = 0.5 * (J1 * J1 + J5 * J5 - J24 * J24);
    const double g12 = 0.5 * (J12 * J12 + J5 * J5 - J4 * J4);

    return {{{J1 * J1, g01, g02}, {g01, J12 * J12, g12}, {g02, g12, J5 * J5}}};
}

bool classically_allowed(const EdgeSet& edges)
{
    auto g = gram_from_edges(edges);
    double minor2 = g[0][0] * g[1][1] - g[0][1] * g[0][1];
    if (minor2 <= 0) return false;
    double tr = g[0][0] + g[1][1] + g[2][2];
    return det3(g) > kCausticEps * tr * tr * tr;
}

TetraConfig build_tetrahedron(const EdgeSet& edges)
{
    for (double l : edges.length)
        if (!(l > 0)) throw InvalidSpec("edge lengths must be positive");

    if (!classically_allowed(edges))
        throw NotClassicallyAllowed("det G at or below caustic threshold");

    auto g = gram_from_edges(edges);

    // Cholesky G = L L^T; rows of L realize (J1, J12, -J5)
    double l00 = std::sqrt(g[0][0]);
    double l10 = g[0][1] / l00;
    double l20 = g[0][2] / l00;
    double t = g[1][1] - l10 * l10;
    double l11 = std::sqrt(t);
    double l21 = (g[1][2] - l10 * l20) / l11;
    double u = g[2][2] - l20 * l20 - l21 * l21;
    if (!(u > 0))
        throw NotClassicallyAllowed("Gram matrix not positive definite");
    double l22 = std::sqrt(u);

    TetraConfig c{};
    c.j1 = {l00, 0, 0};
    c.j12 = {l10, l11, 0};
    Vec3 m5 = {l20, l21, l22}; // -J5
    c.j5 = {-m5.x, -m5.y, -m5.z};
    c.j2 = c.j12 - c.j1;
    c.j4 = m5 - c.j12; // -J5 - J12
    c.j24 = c.j2 + c.j4;

    double six_v = dot(c.j1, cross(c.j2, c.j4));
    if (six_v > 0) {
        // mirror through the xy-plane to land on the reference orientation
        for (Vec3* v : {&c.j1, &c.j2, &c.j4, &c.j5, &c.j12, &c.j24}) v->z = -v->z;
        six_v = -six_v;
    }
    c.signed_volume = six_v / 6.0;
    return c;
}

AngleBundle angle_bundle(const TetraConfig& c, TetraAngleKind kind)
{
    AngleBundle b{};
    b.volume = c.volume();

    // vertices: O, A = J1, B = J12, C = -J5
    const Vec3 O{}, A = c.j1, B = c.j12;
    const Vec3 C = {-c.j5.x, -c.j5.y, -c.j5.z};
    const double pi = std::numbers::pi;

    // edge -> (endpoints, opposite vertices)
    const struct {
        EdgeRole role;
        Vec3 p, q, r, s;
    } edges[6] = {
        {EdgeRole::E1, O, A, B, C},  {EdgeRole::E2, A, B, O, C},
        {EdgeRole::E4, B, C, O, A},  {EdgeRole::E5, C, O, A, B},
        {EdgeRole::E12, O, B, A, C}, {EdgeRole::E24, A, C, O, B},
    };
    for (const auto& e : edges)
        b.psi[static_cast<int>(e.role)] =
            pi - internal_dihedral(e.p, e.q, e.r, e.s);

    b.phi1 = pi - plane_angle(c.j1, c.j4, c.j5);
    b.phi4 = pi - plane_angle(c.j4, c.j1, c.j5);
    b.theta = vector_angle(c.j1, c.j4);

    if (kind == TetraAngleKind::FifteenJ) {
        b.theta2 = vector_angle(c.j1, c.j12);
        b.phi1_int = pi - b.psi_at(EdgeRole::E1);
        b.phi12_int = pi - b.psi_at(EdgeRole::E12);
    }
    return b;
}

double AngleBundle::edge_weighted_psi_sum(const EdgeSet& edges) const
{
    double s = 0;
    for (int i = 0; i < 6; ++i) s += edges.length[i] * psi[i];
    return s;
}

bool triangle_allowed(double a, double b, double c)
{
    return a + b > c && b + c > a && c + a > b;
}

double triangle_theta(double J1, double J4, double J5)
{
    if (!(J1 > 0 && J4 > 0 && J5 > 0) || !triangle_allowed(J1, J4, J5))
        throw NotATriangle("lengths (" + std::to_string(J1) + ", " +
                           std::to_string(J4) + ", " + std::to_string(J5) +
                           ") do not form a triangle");
    return std::numbers::pi -
           safe_acos((J1 * J1 + J4 * J4 - J5 * J5) / (2.0 * J1 * J4));
}

} // namespace wigner
