#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cg_oracle.hpp"
#include "wigner/errors.hpp"
#include "wigner/exact3nj.hpp"

using namespace wigner;

namespace {

HalfInt ht(int t) { return HalfInt::from_twice(t); }
HalfInt hp(const char* s) { return HalfInt::parse(s); }

std::mt19937 rng(20240831u);

int rand_twice(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// random twice-value completing (a, b, ?) to a valid triad, capped
int rand_triad_twice(HalfInt a, HalfInt b, int cap)
{
    int lo = std::abs(a.twice() - b.twice());
    int hi = std::min(a.twice() + b.twice(), cap);
    if (lo > hi) return -1;
    return lo + 2 * rand_twice(0, (hi - lo) / 2);
}

} // namespace

TEST_CASE("triad selection rules")
{
    CHECK(triad_allowed(hp("1/2"), hp("1/2"), HalfInt(1)));
    CHECK_FALSE(triad_allowed(hp("1/2"), hp("1/2"), hp("1/2")));
    CHECK_FALSE(triad_allowed(HalfInt(5), HalfInt(2), HalfInt(8)));
    CHECK(triad_allowed(HalfInt(0), HalfInt(3), HalfInt(3)));
}

TEST_CASE("half-integer parsing and formatting")
{
    CHECK(hp("51/2").twice() == 51);
    CHECK(hp("25.5").twice() == 51);
    CHECK(hp("26").twice() == 52);
    CHECK(hp("26").str() == "26");
    CHECK(hp("51/2").str() == "51/2");
    CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("25.3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse(""), std::invalid_argument);
}

TEST_CASE("6j reference values")
{
    auto v = six_j(1, 1, 1, 1, 1, 1);
    // equals 1/6, verified below against the CG-contraction oracle as well
    CHECK(v.coeff() * sqrt(v.radicand().get_num()) ==
          mpq_class(1, 6) * sqrt(v.radicand().get_den()));
    CHECK(v.to_double() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

    // {a b c; 0 c b} = (-1)^{a+b+c} / sqrt((2b+1)(2c+1)) at (a,b,c) = (2,3,4)
    auto w = six_j(2, 3, 4, 0, 4, 3);
    CHECK(w.to_double() ==
          doctest::Approx(-1.0 / (3.0 * std::sqrt(7.0))).epsilon(1e-15));

    CHECK(six_j(1, 2, 5, 1, 1, 1).is_exact_zero());
    CHECK(six_j(1, 2, 5, 1, 1, 1).stable_digits() == INT_MAX);
}

TEST_CASE("6j against the CG-contraction oracle")
{
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 40; ++trial) {
        HalfInt a = ht(rand_twice(0, 6)), b = ht(rand_twice(0, 6)),
                d = ht(rand_twice(0, 6)), e = ht(rand_twice(0, 6));
        int tc = rand_triad_twice(a, b, 12), tf = rand_triad_twice(b, d, 12);
        if (tc < 0 || tf < 0) continue;
        HalfInt c = ht(tc), f = ht(tf);
        if (!triad_allowed(d, e, c) || !triad_allowed(a, e, f)) continue;
        auto mine = six_j(a, b, c, d, e, f);
        auto ref = oracle::six_j(a, b, c, d, e, f, 256);
        CHECK(std::fabs(mine.to_double() - ref.to_double()) < 1e-13);
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("6j invariance under the 24 classical symmetries")
{
    const int col_perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const int flips[4][3] = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};

    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 25; ++trial) {
        HalfInt a = ht(rand_twice(0, 12)), b = ht(rand_twice(0, 12)),
                d = ht(rand_twice(0, 12)), e = ht(rand_twice(0, 12));
        int tc = rand_triad_twice(a, b, 12), tf = rand_triad_twice(b, d, 12);
        if (tc < 0 || tf < 0) continue;
        HalfInt c = ht(tc), f = ht(tf);
        if (!triad_allowed(d, e, c) || !triad_allowed(a, e, f)) continue;

        auto ref = six_j(a, b, c, d, e, f);
        int top[3] = {a.twice(), b.twice(), c.twice()};
        int bot[3] = {d.twice(), e.twice(), f.twice()};
        for (const auto& p : col_perm)
            for (const auto& fl : flips) {
                int u[3], l[3];
                for (int i = 0; i < 3; ++i) {
                    u[i] = fl[i] ? bot[p[i]] : top[p[i]];
                    l[i] = fl[i] ? top[p[i]] : bot[p[i]];
                }
                auto variant = six_j(ht(u[0]), ht(u[1]), ht(u[2]), ht(l[0]),
                                     ht(l[1]), ht(l[2]));
                CHECK(variant == ref); // exact radical form, bit-identical
            }
        ++checked;
    }
    CHECK(checked == 25);
}

TEST_CASE("9j reference values and selection rules")
{
    // invariant under a row swap with odd total sum, hence exactly zero
    CHECK(nine_j(1, 1, 1, 1, 1, 1, 1, 1, 1).is_exact_zero());

    // j3 = 0 forces j34 = j4, j13 = j1 and reduces to a 6j; the value here
    // is 1/18 (CG oracle cross-checked below)
    auto v = nine_j(1, 1, 2, 0, 1, 1, 1, 1, 1);
    CHECK(v.to_double() == doctest::Approx(1.0 / 18.0).epsilon(1e-15));
    auto s = six_j(1, 1, 2, 1, 1, 1);
    CHECK(v.to_double() == doctest::Approx(s.to_double() / 3.0).epsilon(1e-15));

    // violated row triad
    CHECK(nine_j(1, 1, 3, 1, 1, 1, 1, 1, 1).is_exact_zero());
}

TEST_CASE("9j golden fixture: the j ~ 25 comparison array at j5 = 27")
{
    auto v = nine_j(hp("51/2"), hp("53/2"), 28, hp("1/2"), hp("47/2"), 24, 25,
                    27, 27);
    CHECK(v.to_string(30) == "-3.99156888895851885252384505574e-5");
    CHECK(v.stable_digits() >= 30);
}

TEST_CASE("9j against the CG-contraction oracle (random small sample)")
{
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 50; ++trial) {
        HalfInt j1 = ht(rand_twice(0, 6)), j2 = ht(rand_twice(0, 6)),
                j3 = ht(rand_twice(0, 6)), j4 = ht(rand_twice(0, 6));
        int t12 = rand_triad_twice(j1, j2, 6), t34 = rand_triad_twice(j3, j4, 6);
        int t13 = rand_triad_twice(j1, j3, 6), t24 = rand_triad_twice(j2, j4, 6);
        if (t12 < 0 || t34 < 0 || t13 < 0 || t24 < 0) continue;
        HalfInt j12 = ht(t12), j34 = ht(t34), j13 = ht(t13), j24 = ht(t24);
        int t5 = rand_triad_twice(j12, j34, 6);
        if (t5 < 0 || !triad_allowed(j13, j24, ht(t5))) continue;
        HalfInt j5 = ht(t5);

        auto mine = nine_j(j1, j2, j12, j3, j4, j34, j13, j24, j5);
        auto ref = oracle::nine_j({j1, j2, j12, j3, j4, j34, j13, j24, j5},
                                  256);
        if (mine.is_exact_zero()) {
            CHECK(ref.abs().to_double() < 1e-50);
        } else {
            CHECK(BigReal::matching_digits(mine.value(256), ref) >= 25);
        }
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("9j transpose invariance and odd-permutation phase")
{
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 25; ++trial) {
        HalfInt j1 = ht(rand_twice(0, 8)), j2 = ht(rand_twice(0, 8)),
                j3 = ht(rand_twice(0, 8)), j4 = ht(rand_twice(0, 8));
        int t12 = rand_triad_twice(j1, j2, 8), t34 = rand_triad_twice(j3, j4, 8);
        int t13 = rand_triad_twice(j1, j3, 8), t24 = rand_triad_twice(j2, j4, 8);
        if (t12 < 0 || t34 < 0 || t13 < 0 || t24 < 0) continue;
        HalfInt j12 = ht(t12), j34 = ht(t34), j13 = ht(t13), j24 = ht(t24);
        int t5 = rand_triad_twice(j12, j34, 8);
        if (t5 < 0 || !triad_allowed(j13, j24, ht(t5))) continue;
        HalfInt j5 = ht(t5);

        auto v = nine_j(j1, j2, j12, j3, j4, j34, j13, j24, j5);
        auto vt = nine_j(j1, j3, j13, j2, j4, j24, j12, j34, j5);
        CHECK(v == vt); // exact rationals: transpose is bit-identical

        // swapping the first two rows is an odd permutation
        auto vs = nine_j(j3, j4, j34, j1, j2, j12, j13, j24, j5);
        long long texp = j1.twice() + j2.twice() + j12.twice() + j3.twice() +
                         j4.twice() + j34.twice() + j13.twice() + j24.twice() +
                         j5.twice();
        REQUIRE(texp % 2 == 0);
        mpq_class expect = (texp / 2) % 2 == 0 ? v.coeff() : -v.coeff();
        CHECK(vs.coeff() == expect);
        CHECK(vs.radicand() == v.radicand());
        ++checked;
    }
    CHECK(checked == 25);
}

TEST_CASE("precision stability under doubling")
{
    auto v = nine_j(hp("51/2"), hp("53/2"), 28, hp("1/2"), hp("47/2"), 24, 25,
                    27, 26);
    CHECK(v.stable_digits() >= 30);
    CHECK(BigReal::matching_digits(v.value(v.precision_bits()),
                                   v.value(2 * v.precision_bits())) >= 30);
}

TEST_CASE("memoization transparency: cached and uncached are bit-identical")
{
    six_j_cache_clear();
    nine_j_cache_clear();
    auto a1 = six_j(hp("7/2"), 4, hp("3/2"), 2, hp("5/2"), hp("5/2"));
    auto b1 = nine_j(2, 3, 4, 1, 2, 3, 2, 2, 2);
    CHECK(six_j_cache_size() > 0);

    six_j_cache_clear();
    nine_j_cache_clear();
    six_j_cache_enable(false);
    auto a2 = six_j(hp("7/2"), 4, hp("3/2"), 2, hp("5/2"), hp("5/2"));
    auto b2 = nine_j(2, 3, 4, 1, 2, 3, 2, 2, 2);
    CHECK(six_j_cache_size() == 0);
    six_j_cache_enable(true);

    CHECK(a1 == a2);
    CHECK(b1 == b2);
}

TEST_CASE("6j cache entry cap")
{
    six_j_cache_clear();
    six_j_cache_set_capacity(4);
    for (int t = 0; t <= 12; t += 2) six_j(ht(t), ht(t), ht(t), ht(t), ht(t), ht(t));
    CHECK(six_j_cache_size() <= 4);
    six_j_cache_set_capacity(0);
    six_j_cache_clear();
}

TEST_CASE("12j: selection rules and the s1 = 0 reduction")
{
    // violated triad (j125 outside (j12, j5))
    std::array<HalfInt, 12> bad{1, 1, 2, 0, 1, 1, 2, 2, 2, 2, 3, 2};
    CHECK(twelve_j_first(bad).is_exact_zero());

    // s1 = 0 forces j12 = j2, j13 = j3 and reduces to a 9j:
    //   {0 j2 j2 j125; j3 j4 j34 j135; j3 j24 j5 j6}
    //     = (-1)^{2j3+j4+j5+j24-j6-j34}
    //       {j2 j5 j125; j4 j3 j34; j24 j135 j6} / sqrt([j2][j3])
    int checked = 0;
    for (int trial = 0; trial < 6000 && checked < 25; ++trial) {
        HalfInt j2 = ht(rand_twice(0, 6)), j3 = ht(rand_twice(0, 6)),
                j4 = ht(rand_twice(0, 6)), j5 = ht(rand_twice(0, 6));
        int t34 = rand_triad_twice(j3, j4, 8), t24 = rand_triad_twice(j2, j4, 8);
        int t125 = rand_triad_twice(j2, j5, 8), t135 = rand_triad_twice(j3, j5, 8);
        if (t34 < 0 || t24 < 0 || t125 < 0 || t135 < 0) continue;
        HalfInt j34 = ht(t34), j24 = ht(t24), j125 = ht(t125), j135 = ht(t135);
        int t6 = rand_triad_twice(j125, j34, 10);
        if (t6 < 0 || !triad_allowed(j135, j24, ht(t6))) continue;
        HalfInt j6 = ht(t6);

        std::array<HalfInt, 12> e{0, j2, j2, j125, j3, j4,
                                  j34, j135, j3, j24, j5, j6};
        auto lhs = twelve_j_first(e);
        auto rhs = nine_j(j2, j5, j125, j4, j3, j34, j24, j135, j6);

        long long texp = 2LL * j3.twice() + j4.twice() + j5.twice() +
                         j24.twice() - j6.twice() - j34.twice();
        REQUIRE(texp % 2 == 0);
        int sign = ((texp / 2) % 2 + 2) % 2 == 0 ? 1 : -1;

        mpq_class dims = mpq_class(j2.twice() + 1) * (j3.twice() + 1);
        // exact identity: lhs^2 * dims == rhs^2 and signs agree
        CHECK(lhs.coeff() * lhs.coeff() * lhs.radicand() * dims ==
              rhs.coeff() * rhs.coeff() * rhs.radicand());
        if (!lhs.is_exact_zero())
            CHECK(sgn(lhs.coeff()) == sign * sgn(rhs.coeff()));
        ++checked;
    }
    CHECK(checked == 25);
}

TEST_CASE("12j against the CG-contraction oracle (random small sample)")
{
    int checked = 0;
    for (int trial = 0; trial < 40000 && checked < 20; ++trial) {
        HalfInt j1 = ht(rand_twice(0, 4)), j2 = ht(rand_twice(0, 4)),
                j3 = ht(rand_twice(0, 4)), j4 = ht(rand_twice(0, 4)),
                j5 = ht(rand_twice(0, 4));
        int t12 = rand_triad_twice(j1, j2, 6), t34 = rand_triad_twice(j3, j4, 6);
        int t13 = rand_triad_twice(j1, j3, 6), t24 = rand_triad_twice(j2, j4, 6);
        if (t12 < 0 || t34 < 0 || t13 < 0 || t24 < 0) continue;
        HalfInt j12 = ht(t12), j34 = ht(t34), j13 = ht(t13), j24 = ht(t24);
        int t125 = rand_triad_twice(j12, j5, 6), t135 = rand_triad_twice(j13, j5, 6);
        if (t125 < 0 || t135 < 0) continue;
        HalfInt j125 = ht(t125), j135 = ht(t135);
        int t6 = rand_triad_twice(j125, j34, 6);
        if (t6 < 0 || !triad_allowed(j135, j24, ht(t6))) continue;
        HalfInt j6 = ht(t6);

        std::array<HalfInt, 12> e{j1, j2, j12, j125, j3, j4,
                                  j34, j135, j13, j24, j5, j6};
        auto mine = twelve_j_first(e);
        auto ref = oracle::twelve_j_first(e, 256);
        if (mine.is_exact_zero()) {
            CHECK(ref.abs().to_double() < 1e-50);
        } else {
            CHECK(BigReal::matching_digits(mine.value(256), ref) >= 25);
        }
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("12j golden fixture: the j ~ 100 comparison array at j6 = 110")
{
    std::array<HalfInt, 12> e{hp("1/2"), hp("201/2"), 100, 101,
                              hp("213/2"), hp("199/2"), 117, 105,
                              106, 98, 1, 110};
    auto v = twelve_j_first(e);
    CHECK(v.to_string(30) == "5.98097154674274161102008800204e-10");
    CHECK(v.stable_digits() >= 30);
}

TEST_CASE("15j: selection rules, s6 = 0 reduction, golden fixture")
{
    std::array<HalfInt, 15> bad{1, 1, 2, 2, 5, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2};
    CHECK(fifteen_j_first(bad).is_exact_zero());

    // s6 = 0 forces j1256 = j125, j1356 = j135 and drops to a 12j:
    //   {15j} = {12j}(j1 j2 j12 j125; j3 j4 j34 j135; j13 j24 j5 j7)
    //             / sqrt([j125][j135])
    int checked = 0;
    for (int trial = 0; trial < 40000 && checked < 15; ++trial) {
        HalfInt j1 = ht(rand_twice(0, 4)), j2 = ht(rand_twice(0, 4)),
                j3 = ht(rand_twice(0, 4)), j4 = ht(rand_twice(0, 4)),
                j5 = ht(rand_twice(0, 3));
        int t12 = rand_triad_twice(j1, j2, 5), t34 = rand_triad_twice(j3, j4, 5);
        int t13 = rand_triad_twice(j1, j3, 5), t24 = rand_triad_twice(j2, j4, 5);
        if (t12 < 0 || t34 < 0 || t13 < 0 || t24 < 0) continue;
        HalfInt j12 = ht(t12), j34 = ht(t34), j13 = ht(t13), j24 = ht(t24);
        int t125 = rand_triad_twice(j12, j5, 5), t135 = rand_triad_twice(j13, j5, 5);
        if (t125 < 0 || t135 < 0) continue;
        HalfInt j125 = ht(t125), j135 = ht(t135);
        int t7 = rand_triad_twice(j125, j34, 6);
        if (t7 < 0 || !triad_allowed(j135, j24, ht(t7))) continue;
        HalfInt j7 = ht(t7);

        std::array<HalfInt, 15> f{j1, j2, j12, j125, j125, j3, j4, j34,
                                  j135, j135, j13, j24, j5, 0, j7};
        std::array<HalfInt, 12> e{j1, j2, j12, j125, j3, j4,
                                  j34, j135, j13, j24, j5, j7};
        auto lhs = fifteen_j_first(f);
        auto rhs = twelve_j_first(e);
        mpq_class dims = mpq_class(j125.twice() + 1) * (j135.twice() + 1);
        CHECK(lhs.coeff() * lhs.coeff() * lhs.radicand() * dims ==
              rhs.coeff() * rhs.coeff() * rhs.radicand());
        if (!lhs.is_exact_zero())
            CHECK(sgn(lhs.coeff()) == sgn(rhs.coeff()));
        ++checked;
    }
    CHECK(checked == 15);

    std::array<HalfInt, 15> g{hp("203/2"), hp("207/2"), 96, 97, 98,
                              hp("3/2"), hp("199/2"), 100, 100, 101,
                              101, 108, 1, 1, 102};
    auto v = fifteen_j_first(g);
    CHECK(v.to_string(30) == "-3.68750020357616462073269519138e-12");
    CHECK(v.stable_digits() >= 30);
}

TEST_CASE("15j against the CG-contraction oracle (tiny sample)")
{
    int checked = 0;
    for (int trial = 0; trial < 40000 && checked < 8; ++trial) {
        HalfInt j1 = ht(rand_twice(0, 3)), j2 = ht(rand_twice(0, 3)),
                j3 = ht(rand_twice(0, 3)), j4 = ht(rand_twice(0, 3)),
                j5 = ht(rand_twice(0, 2)), j6 = ht(rand_twice(0, 2));
        int t12 = rand_triad_twice(j1, j2, 4), t34 = rand_triad_twice(j3, j4, 4);
        int t13 = rand_triad_twice(j1, j3, 4), t24 = rand_triad_twice(j2, j4, 4);
        if (t12 < 0 || t34 < 0 || t13 < 0 || t24 < 0) continue;
        HalfInt j12 = ht(t12), j34 = ht(t34), j13 = ht(t13), j24 = ht(t24);
        int t125 = rand_triad_twice(j12, j5, 4), t135 = rand_triad_twice(j13, j5, 4);
        if (t125 < 0 || t135 < 0) continue;
        HalfInt j125 = ht(t125), j135 = ht(t135);
        int t1256 = rand_triad_twice(j125, j6, 4), t1356 = rand_triad_twice(j135, j6, 4);
        if (t1256 < 0 || t1356 < 0) continue;
        HalfInt j1256 = ht(t1256), j1356 = ht(t1356);
        int t7 = rand_triad_twice(j1256, j34, 5);
        if (t7 < 0 || !triad_allowed(j1356, j24, ht(t7))) continue;
        HalfInt j7 = ht(t7);

        std::array<HalfInt, 15> f{j1, j2, j12, j125, j1256, j3, j4, j34,
                                  j135, j1356, j13, j24, j5, j6, j7};
        auto mine = fifteen_j_first(f);
        auto ref = oracle::fifteen_j_first(f, 256);
        if (mine.is_exact_zero())
            CHECK(ref.abs().to_double() < 1e-50);
        else
            CHECK(BigReal::matching_digits(mine.value(256), ref) >= 25);
        ++checked;
    }
    CHECK(checked == 8);
}

TEST_CASE("SymbolArgs validation")
{
    CHECK_THROWS_AS(evaluate(SymbolArgs(SymbolKind::SixJ, {1, 1, 1})),
                    InvalidSpec);
    CHECK_THROWS_AS(
        evaluate(SymbolArgs(SymbolKind::NineJ,
                            {1, 1, 2, 0, 1, 1, 1, 1, HalfInt::from_twice(-2)})),
        InvalidSpec);
    SymbolArgs ok(SymbolKind::SixJ, {1, 1, 1, 1, 1, 1});
    CHECK(evaluate(ok).to_double() == doctest::Approx(1.0 / 6.0));
    CHECK(ok.selection_rules_pass());
    SymbolArgs zero(SymbolKind::SixJ, {1, 2, 5, 1, 1, 1});
    CHECK_FALSE(zero.selection_rules_pass());
}
