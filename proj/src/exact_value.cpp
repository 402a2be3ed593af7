#include "wigner/exact_value.hpp"

#include <stdexcept>

namespace wigner {

ExactValue::ExactValue(mpq_class coeff, mpq_class radicand, long precision_bits)
    : coeff_(std::move(coeff)),
      radicand_(std::move(radicand)),
      precision_bits_(precision_bits < 64 ? 64 : precision_bits)
{
    if (radicand_ < 0) throw std::logic_error("ExactValue: negative radicand");
    if (coeff_ == 0) radicand_ = 1;
}

BigReal ExactValue::value(long bits) const
{
    if (bits <= 0) bits = precision_bits_;
    BigReal s = BigReal::from(coeff_, bits);
    if (radicand_ == 1) return s;
    return s * BigReal::from(radicand_, bits).sqrt();
}

std::string ExactValue::to_string(int sig_digits) const
{
    // render with headroom so the requested digits are all correct
    long bits = precision_bits_;
    long need = static_cast<long>(sig_digits * 3.33) + 64;
    if (bits < need) bits = need;
    return value(bits).to_string(sig_digits);
}

int ExactValue::stable_digits() const
{
    if (is_exact_zero()) return INT_MAX;
    return BigReal::matching_digits(value(precision_bits_),
                                    value(2 * precision_bits_));
}

int ExactValue::sign() const
{
    int s = sgn(coeff_);
    return radicand_ == 0 ? 0 : s;
}

} // namespace wigner
