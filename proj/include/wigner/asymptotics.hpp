#ifndef WIGNER_ASYMPTOTICS_HPP
#define WIGNER_ASYMPTOTICS_HPP

#include <array>
#include <optional>
#include <vector>

#include "wigner/half_int.hpp"

namespace wigner {

/// Result of a semiclassical formula evaluation.  When the configuration is
/// outside the classically allowed region the value is absent; no silent
/// extrapolation.  The three factors are exposed separately so tests can
/// localize a discrepancy (phase vs geometry vs d-matrix).
struct AsymResult {
    std::optional<double> value;
    std::optional<double> volume;
    bool in_allowed_region = false;

    double prefactor = 0;        // signed amplitude, includes the phase
    double cosine_argument = 0;
    std::vector<double> d_factors;
};

/// 9j with one small spin, array {j1 j2 j12; s j4 j34; j13 j24 j5}.
AsymResult asym_9j_one_small(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt s,
                             HalfInt j4, HalfInt j34, HalfInt j13, HalfInt j24,
                             HalfInt j5);

/// 9j with two small spins, array {j1 s2 j12; s3 j4 j34; j13 j24 j5}.
/// The allowed region only requires the (J1, J4, J5) triangle; no volume.
AsymResult asym_9j_two_small(HalfInt j1, HalfInt s2, HalfInt j12, HalfInt s3,
                             HalfInt j4, HalfInt j34, HalfInt j13, HalfInt j24,
                             HalfInt j5);

/// 12j of the first kind with two small spins, array read row-major as
/// {s1 j2 j12 j125; j3 j4 j34 j135; j13 j24 s5 j6}.
AsymResult asym_12j_two_small(const std::array<HalfInt, 12>& e);

/// 15j of the first kind with three small spins, array read row-major as
/// {j1 j2 j12 j125 j1256; s3 j4 j34 j135 j1356; j13 j24 s5 s6 j7}.
AsymResult asym_15j_three_small(const std::array<HalfInt, 15>& e);

/// Ponzano-Regge baseline for the 6j {a b c; d e f}.
AsymResult ponzano_regge_6j(HalfInt a, HalfInt b, HalfInt c, HalfInt d,
                            HalfInt e, HalfInt f);

} // namespace wigner

#endif
