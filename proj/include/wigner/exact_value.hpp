#ifndef WIGNER_EXACT_VALUE_HPP
#define WIGNER_EXACT_VALUE_HPP

#include <gmpxx.h>

#include <climits>
#include <string>

#include "wigner/big_real.hpp"

namespace wigner {

/// An arbitrary-precision real carried in the exact closed form
///
///     value = coeff * sqrt(radicand)
///
/// with coeff and radicand exact rationals.  Every 3nj contraction in this
/// library collapses to this form: per-term radicands pair into perfect
/// squares times one fixed radicand, so the summation index never leaks
/// into the radical.
///
/// Rendering at any precision only rounds once, at the end.  stable_digits
/// is computed operationally by re-rendering at doubled precision and
/// counting unchanged leading digits; selection-rule zeros report INT_MAX.
class ExactValue {
  public:
    /// Exact zero (selection rule or exact cancellation).
    static ExactValue zero(long precision_bits = 256)
    {
        return ExactValue(0, 1, precision_bits);
    }

    ExactValue(mpq_class coeff, mpq_class radicand, long precision_bits);

    bool is_exact_zero() const { return coeff_ == 0; }

    const mpq_class& coeff() const { return coeff_; }
    const mpq_class& radicand() const { return radicand_; }
    long precision_bits() const { return precision_bits_; }

    /// Numeric value rendered at the given precision (default: the value's
    /// own working precision).
    BigReal value(long bits = 0) const;

    double to_double() const { return value().to_double(); }

    std::string to_string(int sig_digits) const;

    /// Digits verified unchanged under precision doubling; INT_MAX for an
    /// exact zero.
    int stable_digits() const;

    int sign() const;

    friend bool operator==(const ExactValue& a, const ExactValue& b)
    {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }

  private:
    mpq_class coeff_;
    mpq_class radicand_; // >= 0; 1 for pure rationals
    long precision_bits_;
};

} // namespace wigner

#endif
