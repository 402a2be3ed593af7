#include "wigner/big_real.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <vector>

namespace wigner {

std::string BigReal::to_string(int sig_digits) const
{
    if (sig_digits < 1) sig_digits = 1;
    if (mpfr_zero_p(x_)) return "0";
    if (!mpfr_number_p(x_)) return mpfr_nan_p(x_) ? "nan" : "inf";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, sig_digits, x_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr convention: value = 0.digits * 10^exp10
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

int BigReal::matching_digits(const BigReal& a, const BigReal& b)
{
    if (mpfr_equal_p(a.x_, b.x_)) return INT_MAX;
    if (a.is_zero() || b.is_zero()) return 0;

    long prec = std::max(a.precision(), b.precision()) + 8;
    BigReal diff(prec);
    mpfr_sub(diff.x_, a.x_, b.x_, MPFR_RNDN);
    if (diff.is_zero()) return INT_MAX;

    BigReal ratio = (a.abs() / diff.abs());
    // digits ~ floor(log10 |a / (a-b)|)
    long e = mpfr_get_exp(ratio.x_); // ratio in [2^(e-1), 2^e)
    double log10r = (e - 1) * 0.30102999566398119;
    if (log10r < 0) return 0;
    if (log10r > INT_MAX / 2) return INT_MAX;
    return static_cast<int>(log10r);
}

} // namespace wigner
