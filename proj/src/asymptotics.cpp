#include "wigner/asymptotics.hpp"

#include <cmath>
#include <optional>
#include <numbers>

#include "wigner/errors.hpp"
#include "wigner/geometry.hpp"
#include "wigner/wigner_d.hpp"

namespace wigner {

namespace {

constexpr double pi = std::numbers::pi;

double edge_length(HalfInt j) { return j.to_double() + 0.5; }

/// (-1)^e for an exponent given in twice units.  All phase exponents in the
/// formulas are integers when the selection rules hold; anything else is a
/// layout mistake and fails loudly.
double phase(long long twice_exp)
{
    if (twice_exp % 2 != 0)
        throw InvalidSpec("phase exponent is not an integer (layout bug)");
    return ((twice_exp / 2) % 2 + 2) % 2 == 0 ? 1.0 : -1.0;
}

void require_index(HalfInt idx, HalfInt s, const char* name)
{
    if (abs(idx) > s)
        throw IndexOutOfRange(std::string(name) + " = " + idx.str() +
                              " exceeds small spin s = " + s.str());
}

AsymResult forbidden(std::optional<double> volume = std::nullopt)
{
    AsymResult r;
    r.in_allowed_region = false;
    r.volume = volume;
    return r;
}

AsymResult assemble(double prefactor, double cos_arg,
                    std::vector<double> d_factors,
                    std::optional<double> volume)
{
    AsymResult r;
    r.in_allowed_region = true;
    r.prefactor = prefactor;
    r.cosine_argument = cos_arg;
    r.d_factors = std::move(d_factors);
    r.volume = volume;
    double v = prefactor * std::cos(cos_arg);
    for (double d : r.d_factors) v *= d;
    r.value = v;
    return r;
}

} // namespace

AsymResult asym_9j_one_small(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt s,
                             HalfInt j4, HalfInt j34, HalfInt j13, HalfInt j24,
                             HalfInt j5)
{
    const HalfInt mu = j13 - j1;
    const HalfInt nu = j34 - j4;
    require_index(mu, s, "mu = j13 - j1");
    require_index(nu, s, "nu = j34 - j4");

    EdgeSet edges{{edge_length(j1), edge_length(j2), edge_length(j4),
                   edge_length(j5), edge_length(j12), edge_length(j24)}};
    if (!classically_allowed(edges)) return forbidden();

    TetraConfig config = build_tetrahedron(edges);
    AngleBundle ang = angle_bundle(config);

    double pref =
        phase(j1.twice() + j2.twice() + j4.twice() + j5.twice() +
              2LL * s.twice() + nu.twice()) /
        std::sqrt((j13.twice() + 1.0) * (j34.twice() + 1.0) *
                  (12.0 * pi * ang.volume));
    double arg = ang.edge_weighted_psi_sum(edges) + pi / 4.0 -
                 s.to_double() * pi + mu.to_double() * ang.phi1 +
                 nu.to_double() * ang.phi4;
    double d = little_d(s, nu, mu, ang.theta);
    return assemble(pref, arg, {d}, ang.volume);
}

AsymResult asym_9j_two_small(HalfInt j1, HalfInt s2, HalfInt j12, HalfInt s3,
                             HalfInt j4, HalfInt j34, HalfInt j13, HalfInt j24,
                             HalfInt j5)
{
    const HalfInt nu2 = j12 - j1, mu2 = j24 - j4;
    const HalfInt nu3 = j13 - j1, mu3 = j34 - j4;
    require_index(nu2, s2, "j12 - j1");
    require_index(mu2, s2, "j24 - j4");
    require_index(nu3, s3, "j13 - j1");
    require_index(mu3, s3, "j34 - j4");

    const double J1 = edge_length(j1), J4 = edge_length(j4),
                 J5 = edge_length(j5);
    if (!triangle_allowed(J1, J4, J5)) return forbidden();
    double theta = triangle_theta(J1, J4, J5);

    double pref =
        phase(2LL * (j4.twice() + j5.twice()) + s2.twice() + s3.twice() +
              j12.twice() + j13.twice()) /
        std::sqrt((j13.twice() + 1.0) * (j24.twice() + 1.0) *
                  (j12.twice() + 1.0) * (j34.twice() + 1.0));
    double d2 = little_d(s2, nu2, mu2, theta);
    double d3 = little_d(s3, nu3, mu3, theta);
    return assemble(pref, 0.0, {d2, d3}, std::nullopt);
}

AsymResult asym_12j_two_small(const std::array<HalfInt, 12>& e)
{
    const HalfInt s1 = e[0], j2 = e[1], j12 = e[2], j125 = e[3], j3 = e[4],
                  j4 = e[5], j34 = e[6], j135 = e[7], j13 = e[8], j24 = e[9],
                  s5 = e[10], j6 = e[11];

    const HalfInt mu1 = j12 - j2, nu1 = j13 - j3;
    const HalfInt mu5 = j125 - j12, nu5 = j135 - j13;
    require_index(mu1, s1, "mu1 = j12 - j2");
    require_index(nu1, s1, "nu1 = j13 - j3");
    require_index(mu5, s5, "mu5 = j125 - j12");
    require_index(nu5, s5, "nu5 = j135 - j13");

    // tetrahedron on the six large edges: closure J2+J4+J3+J6 = 0 with
    // diagonals |J2+J4| = J24 and |J4+J3| = J34
    EdgeSet edges{{edge_length(j2), edge_length(j4), edge_length(j3),
                   edge_length(j6), edge_length(j24), edge_length(j34)}};
    if (!classically_allowed(edges)) return forbidden();

    TetraConfig config = build_tetrahedron(edges);
    AngleBundle ang = angle_bundle(config);
    // on this tetrahedron the canonical twist angles are the 12j angles:
    // phi2 = phi1(e1=J2, e4=J3, e5=J6), phi3 = phi4(...), theta = angle(J2,J3)
    const double phi2 = ang.phi1, phi3 = ang.phi4, theta = ang.theta;

    double pref =
        phase(j24.twice() + j34.twice() + j125.twice() + j135.twice() +
              s1.twice() + s5.twice() + nu1.twice() + nu5.twice()) /
        std::sqrt((j12.twice() + 1.0) * (j125.twice() + 1.0) *
                  (j13.twice() + 1.0) * (j135.twice() + 1.0) *
                  (12.0 * pi * ang.volume));
    double arg = ang.edge_weighted_psi_sum(edges) + pi / 4.0 -
                 (s1.to_double() + s5.to_double()) * pi +
                 (mu1.to_double() + mu5.to_double()) * phi2 +
                 (nu1.to_double() + nu5.to_double()) * phi3;
    double d1 = little_d(s1, nu1, mu1, theta);
    double d5 = little_d(s5, nu5, mu5, theta);
    return assemble(pref, arg, {d1, d5}, ang.volume);
}

AsymResult asym_15j_three_small(const std::array<HalfInt, 15>& e)
{
    const HalfInt j1 = e[0], j2 = e[1], j12 = e[2], j125 = e[3], j1256 = e[4],
                  s3 = e[5], j4 = e[6], j34 = e[7], j135 = e[8], j1356 = e[9],
                  j13 = e[10], j24 = e[11], s5 = e[12], s6 = e[13], j7 = e[14];

    const HalfInt mu3 = j34 - j4, nu3 = j13 - j1;
    const HalfInt mu5 = j125 - j12, nu5 = j135 - j13;
    const HalfInt mu6 = j1256 - j125, nu6 = j1356 - j135;
    require_index(mu3, s3, "mu3 = j34 - j4");
    require_index(nu3, s3, "nu3 = j13 - j1");
    require_index(mu5, s5, "mu5 = j125 - j12");
    require_index(nu5, s5, "nu5 = j135 - j13");
    require_index(mu6, s6, "mu6 = j1256 - j125");
    require_index(nu6, s6, "nu6 = j1356 - j135");

    EdgeSet edges{{edge_length(j1), edge_length(j2), edge_length(j4),
                   edge_length(j7), edge_length(j12), edge_length(j24)}};
    if (!classically_allowed(edges)) return forbidden();

    TetraConfig config = build_tetrahedron(edges);
    AngleBundle ang = angle_bundle(config, TetraAngleKind::FifteenJ);
    const double phi1p = ang.phi1, phi4p = ang.phi4;
    const double theta1 = ang.theta, theta2 = *ang.theta2;
    const double phi1_int = *ang.phi1_int, phi12_int = *ang.phi12_int;

    double pref =
        phase(j1.twice() + j2.twice() + j4.twice() + j7.twice() +
              2LL * s3.twice() + nu3.twice() + mu5.twice() + mu6.twice()) /
        std::sqrt((j34.twice() + 1.0) * (j13.twice() + 1.0) *
                  (j135.twice() + 1.0) * (j1356.twice() + 1.0) *
                  (j125.twice() + 1.0) * (j1256.twice() + 1.0) *
                  (12.0 * pi * ang.volume));
    double arg = ang.edge_weighted_psi_sum(edges) + pi / 4.0 -
                 s3.to_double() * pi + mu3.to_double() * phi4p +
                 nu3.to_double() * phi1p -
                 (mu5.to_double() + mu6.to_double()) * phi12_int -
                 (nu5.to_double() + nu6.to_double()) * phi1_int;
    double d3 = little_d(s3, nu3, mu3, theta1);
    double d5 = little_d(s5, nu5, mu5, theta2);
    double d6 = little_d(s6, nu6, mu6, theta2);
    return assemble(pref, arg, {d3, d5, d6}, ang.volume);
}

AsymResult ponzano_regge_6j(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                            HalfInt e, HalfInt f)
{
    // 6j {a b c; d e f} tetrahedron: faces (a,b,c),(a,e,f),(d,b,f),(d,e,c)
    EdgeSet edges{{edge_length(a), edge_length(b), edge_length(d),
                   edge_length(e), edge_length(c), edge_length(f)}};
    if (!classically_allowed(edges)) return forbidden();

    TetraConfig config = build_tetrahedron(edges);
    AngleBundle ang = angle_bundle(config);

    double pref = 1.0 / std::sqrt(12.0 * pi * ang.volume);
    double arg = ang.edge_weighted_psi_sum(edges) + pi / 4.0;
    return assemble(pref, arg, {}, ang.volume);
}

} // namespace wigner
