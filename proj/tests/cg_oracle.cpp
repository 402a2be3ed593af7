#include "cg_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace wigner::oracle {

namespace {

// deliberately local: the oracle must not share the library's sum machinery
mpz_class ofact(long n)
{
    thread_local std::vector<mpz_class> table{1_mpz};
    if (n < 0) throw std::logic_error("oracle factorial of negative");
    while (static_cast<long>(table.size()) <= n)
        table.push_back(table.back() * static_cast<long>(table.size()));
    return table[n];
}

long half(long t)
{
    if (t % 2 != 0) throw std::logic_error("oracle: expected integer");
    return t / 2;
}

/// CG as exact (rational, radicand) pair.
std::pair<mpq_class, mpq_class> cg_exact(HalfInt j1, HalfInt m1, HalfInt j2,
                                         HalfInt m2, HalfInt J, HalfInt M)
{
    if ((m1 + m2) != M || abs(m1) > j1 || abs(m2) > j2 || abs(M) > J)
        return {0, 1};
    if (!triad_allowed(j1, j2, J)) return {0, 1};
    if ((j1 - m1).twice() % 2 != 0 || (j2 - m2).twice() % 2 != 0)
        return {0, 1};

    long a = half(j1.twice() + j2.twice() - J.twice());
    long b = half(j1.twice() - j2.twice() + J.twice());
    long c = half(-j1.twice() + j2.twice() + J.twice());
    long d = half(j1.twice() + j2.twice() + J.twice()) + 1;

    long j1pm = half(j1.twice() + m1.twice());
    long j1mm = half(j1.twice() - m1.twice());
    long j2pm = half(j2.twice() + m2.twice());
    long j2mm = half(j2.twice() - m2.twice());
    long JpM = half(J.twice() + M.twice());
    long JmM = half(J.twice() - M.twice());

    mpq_class radicand(mpz_class((J.twice() + 1) * ofact(a) * ofact(b) *
                                 ofact(c) * ofact(j1pm) * ofact(j1mm) *
                                 ofact(j2pm) * ofact(j2mm) * ofact(JpM) *
                                 ofact(JmM)),
                       ofact(d));
    radicand.canonicalize();

    long e = half(J.twice() - j2.twice() + m1.twice()); // J - j2 + m1
    long f = half(J.twice() - j1.twice() - m2.twice()); // J - j1 - m2
    long klo = std::max({0L, -e, -f});
    long khi = std::min({a, j1mm, j2pm});

    mpq_class sum = 0;
    for (long k = klo; k <= khi; ++k) {
        mpq_class term(1, ofact(k) * ofact(a - k) * ofact(j1mm - k) *
                              ofact(j2pm - k) * ofact(e + k) * ofact(f + k));
        term.canonicalize();
        sum += (k % 2 == 0) ? term : -term;
    }
    return {sum, radicand};
}

struct Key {
    std::array<int, 6> v;
    auto operator<=>(const Key&) const = default;
};

BigReal cg_cached(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                  HalfInt M, long bits)
{
    thread_local std::map<std::pair<Key, long>, BigReal> cache;
    Key key{{j1.twice(), m1.twice(), j2.twice(), m2.twice(), J.twice(),
             M.twice()}};
    auto it = cache.find({key, bits});
    if (it != cache.end()) return it->second;

    auto [s, r] = cg_exact(j1, m1, j2, m2, J, M);
    BigReal v = BigReal::from(s, bits) * BigReal::from(r, bits).sqrt();
    cache.emplace(std::make_pair(key, bits), v);
    return v;
}

} // namespace

BigReal cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
           HalfInt M, long bits)
{
    return cg_cached(j1, m1, j2, m2, J, M, bits);
}

BigReal six_j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f,
              long bits)
{
    // {a b c; d e f} from the recoupling overlap
    //   <(a b) c, d; e M | a, (b d) f; e M>
    //     = (-1)^{a+b+d+e} sqrt([c][f]) {a b c; d e f}
    const HalfInt J = e, M = e;
    BigReal sum(bits);
    for (int tma = -a.twice(); tma <= a.twice(); tma += 2)
        for (int tmb = -b.twice(); tmb <= b.twice(); tmb += 2) {
            HalfInt ma = HalfInt::from_twice(tma);
            HalfInt mb = HalfInt::from_twice(tmb);
            HalfInt md = M - ma - mb;
            if (abs(md) > d) continue;
            HalfInt mc = ma + mb, mf = mb + md;
            if (abs(mc) > c || abs(mf) > f) continue;
            BigReal term = cg(a, ma, b, mb, c, mc, bits);
            if (term.is_zero()) continue;
            term *= cg(c, mc, d, md, J, M, bits);
            term *= cg(b, mb, d, md, f, mf, bits);
            term *= cg(a, ma, f, mf, J, M, bits);
            sum += term;
        }

    long long texp = a.twice() + b.twice() + d.twice() + e.twice();
    if (texp % 2 != 0) return BigReal(bits); // no valid coupling
    double sign = ((texp / 2) % 2 + 2) % 2 == 0 ? 1.0 : -1.0;
    double dims = (c.twice() + 1.0) * (f.twice() + 1.0);
    return sum * BigReal::from(sign, bits) / BigReal::from(dims, bits).sqrt();
}

BigReal nine_j(const std::array<HalfInt, 9>& j, long bits)
{
    const HalfInt j1 = j[0], j2 = j[1], j12 = j[2], j3 = j[3], j4 = j[4],
                  j34 = j[5], j13 = j[6], j24 = j[7], j5 = j[8];
    const HalfInt M = j5; // overlap is m-independent; use the stretched state

    BigReal sum(bits);
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
        for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2)
            for (int tm3 = -j3.twice(); tm3 <= j3.twice(); tm3 += 2) {
                HalfInt m1 = HalfInt::from_twice(tm1);
                HalfInt m2 = HalfInt::from_twice(tm2);
                HalfInt m3 = HalfInt::from_twice(tm3);
                HalfInt m4 = M - m1 - m2 - m3;
                if (abs(m4) > j4) continue;
                HalfInt m12 = m1 + m2, m34 = m3 + m4;
                HalfInt m13 = m1 + m3, m24 = m2 + m4;
                if (abs(m12) > j12 || abs(m34) > j34 || abs(m13) > j13 ||
                    abs(m24) > j24)
                    continue;

                BigReal term = cg(j1, m1, j2, m2, j12, m12, bits);
                if (term.is_zero()) continue;
                term *= cg(j3, m3, j4, m4, j34, m34, bits);
                term *= cg(j12, m12, j34, m34, j5, M, bits);
                term *= cg(j1, m1, j3, m3, j13, m13, bits);
                term *= cg(j2, m2, j4, m4, j24, m24, bits);
                term *= cg(j13, m13, j24, m24, j5, M, bits);
                sum += term;
            }

    double dims = (j12.twice() + 1.0) * (j34.twice() + 1.0) *
                  (j13.twice() + 1.0) * (j24.twice() + 1.0);
    return sum / BigReal::from(dims, bits).sqrt();
}

BigReal twelve_j_first(const std::array<HalfInt, 12>& j, long bits)
{
    const HalfInt j1 = j[0], j2 = j[1], j12 = j[2], j125 = j[3], j3 = j[4],
                  j4 = j[5], j34 = j[6], j135 = j[7], j13 = j[8], j24 = j[9],
                  j5 = j[10], j6 = j[11];
    const HalfInt M = j6;

    BigReal sum(bits);
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
        for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2)
            for (int tm3 = -j3.twice(); tm3 <= j3.twice(); tm3 += 2)
                for (int tm4 = -j4.twice(); tm4 <= j4.twice(); tm4 += 2) {
                    HalfInt m1 = HalfInt::from_twice(tm1);
                    HalfInt m2 = HalfInt::from_twice(tm2);
                    HalfInt m3 = HalfInt::from_twice(tm3);
                    HalfInt m4 = HalfInt::from_twice(tm4);
                    HalfInt m5 = M - m1 - m2 - m3 - m4;
                    if (abs(m5) > j5) continue;
                    HalfInt m12 = m1 + m2, m34 = m3 + m4;
                    HalfInt m125 = m12 + m5;
                    HalfInt m13 = m1 + m3, m24 = m2 + m4;
                    HalfInt m135 = m13 + m5;
                    if (abs(m12) > j12 || abs(m34) > j34 || abs(m125) > j125 ||
                        abs(m13) > j13 || abs(m24) > j24 || abs(m135) > j135)
                        continue;

                    BigReal a = cg(j1, m1, j2, m2, j12, m12, bits);
                    if (a.is_zero()) continue;
                    a *= cg(j12, m12, j5, m5, j125, m125, bits);
                    a *= cg(j3, m3, j4, m4, j34, m34, bits);
                    a *= cg(j125, m125, j34, m34, j6, M, bits);
                    if (a.is_zero()) continue;
                    a *= cg(j1, m1, j3, m3, j13, m13, bits);
                    a *= cg(j13, m13, j5, m5, j135, m135, bits);
                    a *= cg(j2, m2, j4, m4, j24, m24, bits);
                    a *= cg(j135, m135, j24, m24, j6, M, bits);
                    sum += a;
                }

    double dims = (j12.twice() + 1.0) * (j34.twice() + 1.0) *
                  (j13.twice() + 1.0) * (j24.twice() + 1.0) *
                  (j125.twice() + 1.0) * (j135.twice() + 1.0);
    return sum / BigReal::from(dims, bits).sqrt();
}

BigReal fifteen_j_first(const std::array<HalfInt, 15>& j, long bits)
{
    const HalfInt j1 = j[0], j2 = j[1], j12 = j[2], j125 = j[3], j1256 = j[4],
                  j3 = j[5], j4 = j[6], j34 = j[7], j135 = j[8], j1356 = j[9],
                  j13 = j[10], j24 = j[11], j5 = j[12], j6 = j[13], j7 = j[14];
    const HalfInt M = j7;

    BigReal sum(bits);
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
        for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2)
            for (int tm3 = -j3.twice(); tm3 <= j3.twice(); tm3 += 2)
                for (int tm4 = -j4.twice(); tm4 <= j4.twice(); tm4 += 2)
                    for (int tm5 = -j5.twice(); tm5 <= j5.twice(); tm5 += 2) {
                        HalfInt m1 = HalfInt::from_twice(tm1);
                        HalfInt m2 = HalfInt::from_twice(tm2);
                        HalfInt m3 = HalfInt::from_twice(tm3);
                        HalfInt m4 = HalfInt::from_twice(tm4);
                        HalfInt m5 = HalfInt::from_twice(tm5);
                        HalfInt m6 = M - m1 - m2 - m3 - m4 - m5;
                        if (abs(m6) > j6) continue;
                        HalfInt m12 = m1 + m2, m34 = m3 + m4;
                        HalfInt m125 = m12 + m5, m1256 = m125 + m6;
                        HalfInt m13 = m1 + m3, m24 = m2 + m4;
                        HalfInt m135 = m13 + m5, m1356 = m135 + m6;
                        if (abs(m12) > j12 || abs(m34) > j34 ||
                            abs(m125) > j125 || abs(m1256) > j1256 ||
                            abs(m13) > j13 || abs(m24) > j24 ||
                            abs(m135) > j135 || abs(m1356) > j1356)
                            continue;

                        BigReal a = cg(j1, m1, j2, m2, j12, m12, bits);
                        if (a.is_zero()) continue;
                        a *= cg(j12, m12, j5, m5, j125, m125, bits);
                        a *= cg(j125, m125, j6, m6, j1256, m1256, bits);
                        a *= cg(j3, m3, j4, m4, j34, m34, bits);
                        a *= cg(j1256, m1256, j34, m34, j7, M, bits);
                        if (a.is_zero()) continue;
                        a *= cg(j1, m1, j3, m3, j13, m13, bits);
                        a *= cg(j13, m13, j5, m5, j135, m135, bits);
                        a *= cg(j135, m135, j6, m6, j1356, m1356, bits);
                        a *= cg(j2, m2, j4, m4, j24, m24, bits);
                        a *= cg(j1356, m1356, j24, m24, j7, M, bits);
                        sum += a;
                    }

    double dims = (j12.twice() + 1.0) * (j34.twice() + 1.0) *
                  (j13.twice() + 1.0) * (j24.twice() + 1.0) *
                  (j125.twice() + 1.0) * (j135.twice() + 1.0) *
                  (j1256.twice() + 1.0) * (j1356.twice() + 1.0);
    return sum / BigReal::from(dims, bits).sqrt();
}

} // namespace wigner::oracle
