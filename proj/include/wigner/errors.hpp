#ifndef WIGNER_ERRORS_HPP
#define WIGNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wigner {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// det G <= threshold: no real vector configuration exists (caustic or
/// forbidden region).  Volume-dependent asymptotics must not be evaluated.
struct NotClassicallyAllowed : Error {
    using Error::Error;
};

/// Three lengths that fail the triangle inequality.
struct NotATriangle : Error {
    using Error::Error;
};

/// A cross product in an angle formula (or an acos argument) degenerated;
/// the configuration sits on a caustic.
struct DegenerateAngle : Error {
    using Error::Error;
};

/// A d-matrix index outside [-s, s]; signals a caller bug in the
/// mu = j13 - j1 style bookkeeping, or a quantum-mechanically forbidden
/// asymptotic request.
struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Malformed symbol layout, role name, or sweep description.
struct InvalidSpec : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace wigner

#endif
