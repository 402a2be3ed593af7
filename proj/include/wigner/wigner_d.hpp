#ifndef WIGNER_WIGNER_D_HPP
#define WIGNER_WIGNER_D_HPP

#include "wigner/half_int.hpp"

namespace wigner {

/// Rotation matrix element d^s_{nu,mu}(theta) for small spin s, in the
/// convention with d(0) = identity and d^s_{nu,mu} = (-1)^{mu-nu} d^s_{mu,nu}.
///
/// Throws IndexOutOfRange if |nu| > s, |mu| > s, or s - nu / s - mu is not
/// an integer.
double little_d(HalfInt s, HalfInt nu, HalfInt mu, double theta);

} // namespace wigner

#endif
