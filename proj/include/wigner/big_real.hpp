#ifndef WIGNER_BIG_REAL_HPP
#define WIGNER_BIG_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace wigner {

/// Thin RAII wrapper around an mpfr_t with an explicit working precision.
/// Binary operations round to the larger of the two operand precisions.
class BigReal {
  public:
    explicit BigReal(long prec_bits = 64)
    {
        mpfr_init2(x_, prec_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec_bits);
        mpfr_set_zero(x_, 1);
    }
    BigReal(const BigReal& o)
    {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept
    {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(BigReal o) noexcept
    {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    long precision() const { return mpfr_get_prec(x_); }

    static BigReal from(const mpq_class& q, long bits)
    {
        BigReal r(bits);
        mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigReal from(double d, long bits)
    {
        BigReal r(bits);
        mpfr_set_d(r.x_, d, MPFR_RNDN);
        return r;
    }
    static BigReal pi(long bits)
    {
        BigReal r(bits);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b)
    {
        BigReal r(std::max(a.precision(), b.precision()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b)
    {
        BigReal r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b)
    {
        BigReal r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b)
    {
        BigReal r(std::max(a.precision(), b.precision()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o)
    {
        mpfr_add(x_, x_, o.x_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o)
    {
        mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
        return *this;
    }

    BigReal sqrt() const
    {
        BigReal r(precision());
        mpfr_sqrt(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigReal cos() const
    {
        BigReal r(precision());
        mpfr_cos(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigReal abs() const
    {
        BigReal r(precision());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const
    {
        BigReal r(precision());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Scientific notation with the given number of significant digits.
    std::string to_string(int sig_digits) const;

    /// Number of leading significant decimal digits on which a and b agree.
    /// Returns a large sentinel when they are exactly equal (or both zero).
    static int matching_digits(const BigReal& a, const BigReal& b);

  private:
    mpfr_t x_;
};

} // namespace wigner

#endif
