#include "wigner/wigner_d.hpp"

#include <cmath>
#include <utility>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

double dfact(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double ipow(double base, int n)
{
    if (n == 0) return 1.0; // covers 0^0 at theta = 0 or pi
    return std::pow(base, n);
}

} // namespace

double little_d(HalfInt s, HalfInt nu, HalfInt mu, double theta)
{
    if (abs(nu) > s || abs(mu) > s)
        throw IndexOutOfRange("d-matrix index outside [-s, s]: s=" + s.str() +
                              " nu=" + nu.str() + " mu=" + mu.str());
    if ((s - nu).twice() % 2 != 0 || (s - mu).twice() % 2 != 0)
        throw IndexOutOfRange("d-matrix indices must differ from s by integers");

    // Rotation-sense convention: this is <s mu| exp(-i theta S_y) |s nu>,
    // the transpose of the Edmonds element.  Both transposes satisfy
    // d(0) = identity and d_{nu,mu} = (-1)^{mu-nu} d_{mu,nu}; this one is
    // the convention under which the semiclassical formulas reproduce the
    // exact symbols.
    std::swap(nu, mu);

    // integers: s+mu, s-mu, s+nu, s-nu, nu-mu
    const int spm = (s + mu).twice() / 2;
    const int smm = (s - mu).twice() / 2;
    const int spn = (s + nu).twice() / 2;
    const int smn = (s - nu).twice() / 2;
    const int nmm = (nu - mu).twice() / 2;

    const double c = std::cos(0.5 * theta);
    const double sn = std::sin(0.5 * theta);
    const double norm =
        std::sqrt(dfact(spm) * dfact(smm) * dfact(spn) * dfact(smn));

    // d^s_{nu,mu} = sum_k (-1)^{nu-mu+k} norm /
    //   [(s+mu-k)! k! (nu-mu+k)! (s-nu-k)!] c^{2s+mu-nu-2k} sn^{nu-mu+2k}
    const int klo = std::max(0, -nmm);
    const int khi = std::min(spm, smn);

    double sum = 0.0;
    for (int k = klo; k <= khi; ++k) {
        double denom = dfact(spm - k) * dfact(k) * dfact(nmm + k) *
                       dfact(smn - k);
        double term = ipow(c, spm + smn - 2 * k) * ipow(sn, nmm + 2 * k) /
                      denom;
        sum += ((nmm + k) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    return norm * sum;
}

} // namespace wigner
