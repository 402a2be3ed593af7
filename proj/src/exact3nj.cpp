#include "wigner/exact3nj.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

// ---------------------------------------------------------------- factorials

class FactorialTable {
  public:
    const mpz_class& operator()(long n)
    {
        if (n < 0) throw std::logic_error("factorial of negative integer");
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < table_.size()) return table_[n];
        }
        std::unique_lock lock(mutex_);
        if (table_.empty()) table_.emplace_back(1);
        while (table_.size() <= static_cast<std::size_t>(n))
            table_.push_back(table_.back() * static_cast<long>(table_.size()));
        return table_[n];
    }

  private:
    // deque: growth never invalidates references to existing entries
    std::deque<mpz_class> table_;
    std::shared_mutex mutex_;
};

FactorialTable& factorials()
{
    static FactorialTable t;
    return t;
}

const mpz_class& fact(long n) { return factorials()(n); }

// ------------------------------------------------------------- small helpers

long half(long long twice)
{
    if (twice % 2 != 0)
        throw std::logic_error("half-integer where integer expected");
    return static_cast<long>(twice / 2);
}

int phase_from_twice(long long twice_exp)
{
    long e = half(twice_exp);
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

/// Triangle coefficient Delta(a,b,c) as an exact rational.
mpq_class delta_q(HalfInt a, HalfInt b, HalfInt c)
{
    long p1 = half(a.twice() + b.twice() - c.twice());
    long p2 = half(a.twice() - b.twice() + c.twice());
    long p3 = half(-a.twice() + b.twice() + c.twice());
    long q = half(a.twice() + b.twice() + c.twice()) + 1;
    mpq_class r(fact(p1) * fact(p2) * fact(p3), fact(q));
    r.canonicalize();
    return r;
}

/// Exact square root of a perfect-square rational.
mpq_class sqrt_exact(const mpq_class& q)
{
    if (q < 0) throw std::logic_error("sqrt_exact: negative radicand");
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den)
        throw std::logic_error("sqrt_exact: radicand is not a perfect square");
    mpq_class r(sn, sd);
    r.canonicalize();
    return r;
}

using Radical = std::pair<mpq_class, mpq_class>; // value = first * sqrt(second)

// ------------------------------------------------------------------ 6j core

bool six_j_triads_ok(const std::array<HalfInt, 6>& j)
{
    return triad_allowed(j[0], j[1], j[2]) && triad_allowed(j[0], j[4], j[5]) &&
           triad_allowed(j[3], j[1], j[5]) && triad_allowed(j[3], j[4], j[2]);
}

/// Racah single-sum evaluation; assumes all four triads hold.
Radical six_j_racah(const std::array<HalfInt, 6>& j)
{
    const HalfInt a = j[0], b = j[1], c = j[2], d = j[3], e = j[4], f = j[5];

    long a1 = half(a.twice() + b.twice() + c.twice());
    long a2 = half(a.twice() + e.twice() + f.twice());
    long a3 = half(d.twice() + b.twice() + f.twice());
    long a4 = half(d.twice() + e.twice() + c.twice());
    long b1 = half(a.twice() + b.twice() + d.twice() + e.twice());
    long b2 = half(b.twice() + c.twice() + e.twice() + f.twice());
    long b3 = half(a.twice() + c.twice() + d.twice() + f.twice());

    long tlo = std::max({a1, a2, a3, a4});
    long thi = std::min({b1, b2, b3});

    mpq_class sum = 0;
    for (long t = tlo; t <= thi; ++t) {
        mpz_class den = fact(t - a1) * fact(t - a2) * fact(t - a3) *
                        fact(t - a4) * fact(b1 - t) * fact(b2 - t) *
                        fact(b3 - t);
        mpq_class term(fact(t + 1), den);
        term.canonicalize();
        sum += (t % 2 == 0) ? term : -term;
    }

    mpq_class radicand = delta_q(a, b, c) * delta_q(a, e, f) *
                         delta_q(d, b, f) * delta_q(d, e, c);
    radicand.canonicalize();
    return {sum, radicand};
}

// Canonicalization under the 24 classical symmetries: any permutation of the
// three columns, plus swapping upper and lower entries in any two columns.
std::array<int, 6> six_j_canonical_key(const std::array<HalfInt, 6>& j)
{
    const int col_perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const int flips[4][3] = {
        {0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};

    int top[3] = {j[0].twice(), j[1].twice(), j[2].twice()};
    int bot[3] = {j[3].twice(), j[4].twice(), j[5].twice()};

    std::array<int, 6> best{};
    bool first = true;
    for (const auto& p : col_perm) {
        for (const auto& fl : flips) {
            std::array<int, 6> cand{};
            for (int c = 0; c < 3; ++c) {
                int u = top[p[c]], l = bot[p[c]];
                if (fl[c]) std::swap(u, l);
                cand[c] = u;
                cand[3 + c] = l;
            }
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
    }
    return best;
}

struct ArrayHash {
    template <std::size_t N>
    std::size_t operator()(const std::array<int, N>& a) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int v : a) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct SixJCache {
    std::unordered_map<std::array<int, 6>, Radical, ArrayHash> map;
    std::shared_mutex mutex;
    std::atomic<bool> enabled{true};
    std::atomic<std::size_t> capacity{0}; // 0 = unbounded
};

SixJCache& six_j_cache()
{
    static SixJCache c;
    return c;
}

struct NineJCache {
    std::unordered_map<std::array<int, 9>, Radical, ArrayHash> map;
    std::shared_mutex mutex;
};

NineJCache& nine_j_cache()
{
    static NineJCache c;
    return c;
}

/// (S, R) of a 6j, evaluated on the symmetry-canonical arrangement so that
/// cached and uncached results are bit-identical.
Radical six_j_radical(const std::array<HalfInt, 6>& j)
{
    if (!six_j_triads_ok(j)) return {mpq_class(0), mpq_class(1)};

    auto key = six_j_canonical_key(j);
    auto& cache = six_j_cache();
    if (cache.enabled.load()) {
        std::shared_lock lock(cache.mutex);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }

    std::array<HalfInt, 6> canon;
    for (int i = 0; i < 6; ++i) canon[i] = HalfInt::from_twice(key[i]);
    Radical r = six_j_racah(canon);

    if (cache.enabled.load()) {
        std::unique_lock lock(cache.mutex);
        std::size_t cap = cache.capacity.load();
        if (cap == 0 || cache.map.size() < cap) cache.map.emplace(key, r);
    }
    return r;
}

Radical six_j_radical(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e,
                      HalfInt f)
{
    return six_j_radical(std::array<HalfInt, 6>{a, b, c, d, e, f});
}

// ------------------------------------------------------------------ 9j core

bool nine_j_triads_ok(const std::array<HalfInt, 9>& j)
{
    for (const auto& t : triad_table(SymbolKind::NineJ))
        if (!triad_allowed(j[t[0]], j[t[1]], j[t[2]])) return false;
    return true;
}

mpq_class nine_j_fixed_radicand(const std::array<HalfInt, 9>& j)
{
    mpq_class r = delta_q(j[0], j[1], j[2]) * delta_q(j[3], j[4], j[5]) *
                  delta_q(j[6], j[7], j[8]) * delta_q(j[0], j[3], j[6]) *
                  delta_q(j[1], j[4], j[7]) * delta_q(j[2], j[5], j[8]);
    r.canonicalize();
    return r;
}

/// Single sum over products of three 6j symbols.
Radical nine_j_radical(const std::array<HalfInt, 9>& j)
{
    if (!nine_j_triads_ok(j)) return {mpq_class(0), mpq_class(1)};

    std::array<int, 9> key;
    for (int i = 0; i < 9; ++i) key[i] = j[i].twice();
    auto& cache = nine_j_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }

    const HalfInt a = j[0], b = j[1], c = j[2], d = j[3], e = j[4], f = j[5],
                  g = j[6], h = j[7], i = j[8];

    int tlo = std::max({std::abs(a.twice() - i.twice()),
                        std::abs(b.twice() - f.twice()),
                        std::abs(d.twice() - h.twice())});
    int thi = std::min({a.twice() + i.twice(), b.twice() + f.twice(),
                        d.twice() + h.twice()});

    mpq_class fixed = nine_j_fixed_radicand(j);
    mpq_class sum = 0;
    for (int tx = tlo; tx <= thi; tx += 2) {
        HalfInt x = HalfInt::from_twice(tx);
        Radical s1 = six_j_radical(a, b, c, f, i, x);
        Radical s2 = six_j_radical(d, e, f, b, x, h);
        Radical s3 = six_j_radical(g, h, i, x, a, d);
        if (s1.first == 0 || s2.first == 0 || s3.first == 0) continue;

        // the x-dependent triangle coefficients pair into a perfect square
        mpq_class ratio = s1.second * s2.second * s3.second / fixed;
        ratio.canonicalize();
        mpq_class term =
            (tx + 1) * s1.first * s2.first * s3.first * sqrt_exact(ratio);
        sum += (tx % 2 == 0) ? term : -term; // (-1)^{2x}
    }

    Radical out{sum, sum == 0 ? mpq_class(1) : fixed};
    {
        std::unique_lock lock(cache.mutex);
        cache.map.emplace(key, out);
    }
    return out;
}

long long twice_total(std::span<const HalfInt> entries)
{
    long long s = 0;
    for (const auto& e : entries) s += e.twice();
    return s;
}

struct Range {
    int lo, hi; // twice values, step 2
    bool empty() const { return lo > hi; }
};

Range triad_range(HalfInt p, HalfInt q)
{
    return {std::abs(p.twice() - q.twice()), p.twice() + q.twice()};
}

Range intersect(Range r, Range s)
{
    return {std::max(r.lo, s.lo), std::min(r.hi, s.hi)};
}

} // namespace

// -------------------------------------------------------------- public API

std::size_t entry_count(SymbolKind kind)
{
    switch (kind) {
        case SymbolKind::SixJ: return 6;
        case SymbolKind::NineJ: return 9;
        case SymbolKind::TwelveJFirst: return 12;
        case SymbolKind::FifteenJFirst: return 15;
    }
    return 0;
}

const char* kind_name(SymbolKind kind)
{
    switch (kind) {
        case SymbolKind::SixJ: return "6j";
        case SymbolKind::NineJ: return "9j";
        case SymbolKind::TwelveJFirst: return "12j";
        case SymbolKind::FifteenJFirst: return "15j";
    }
    return "?";
}

std::span<const std::array<int, 3>> triad_table(SymbolKind kind)
{
    static const std::array<int, 3> six[] = {
        {0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}};
    static const std::array<int, 3> nine[] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                                              {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    // {j1 j2 j12 j125; j3 j4 j34 j135; j13 j24 j5 j6}
    static const std::array<int, 3> twelve[] = {
        {0, 1, 2},  {4, 5, 6},  {0, 4, 8},  {1, 5, 9},
        {2, 10, 3}, {8, 10, 7}, {3, 6, 11}, {7, 9, 11}};
    // {j1 j2 j12 j125 j1256; j3 j4 j34 j135 j1356; j13 j24 j5 j6 j7}
    static const std::array<int, 3> fifteen[] = {
        {0, 1, 2},  {5, 6, 7},  {0, 5, 10}, {1, 6, 11}, {2, 12, 3},
        {10, 12, 8}, {3, 13, 4}, {8, 13, 9}, {4, 7, 14}, {9, 11, 14}};

    switch (kind) {
        case SymbolKind::SixJ: return six;
        case SymbolKind::NineJ: return nine;
        case SymbolKind::TwelveJFirst: return twelve;
        case SymbolKind::FifteenJFirst: return fifteen;
    }
    return {};
}

SymbolArgs::SymbolArgs(SymbolKind k, std::vector<HalfInt> e)
    : kind(k), entries(std::move(e))
{
}

void SymbolArgs::validate() const
{
    if (entries.size() != entry_count(kind))
        throw InvalidSpec(std::string(kind_name(kind)) + " symbol takes " +
                          std::to_string(entry_count(kind)) + " entries, got " +
                          std::to_string(entries.size()));
    for (const auto& e : entries)
        if (e.is_negative())
            throw InvalidSpec("quantum numbers must be non-negative");
}

bool SymbolArgs::selection_rules_pass() const
{
    for (const auto& t : triad_table(kind))
        if (!triad_allowed(entries[t[0]], entries[t[1]], entries[t[2]]))
            return false;
    return true;
}

long default_precision_bits(long twice_sum)
{
    return std::max(256L, 16L * twice_sum);
}

ExactValue six_j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e,
                 HalfInt f)
{
    long bits = default_precision_bits(static_cast<long>(
        twice_total(std::array<HalfInt, 6>{a, b, c, d, e, f})));
    Radical r = six_j_radical(a, b, c, d, e, f);
    return ExactValue(r.first, r.second, bits);
}

ExactValue nine_j(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt j3, HalfInt j4,
                  HalfInt j34, HalfInt j13, HalfInt j24, HalfInt j5)
{
    std::array<HalfInt, 9> j{j1, j2, j12, j3, j4, j34, j13, j24, j5};
    long bits = default_precision_bits(static_cast<long>(twice_total(j)));
    Radical r = nine_j_radical(j);
    return ExactValue(r.first, r.second, bits);
}

ExactValue twelve_j_first(const std::array<HalfInt, 12>& e)
{
    long bits = default_precision_bits(static_cast<long>(twice_total(e)));
    for (const auto& t : triad_table(SymbolKind::TwelveJFirst))
        if (!triad_allowed(e[t[0]], e[t[1]], e[t[2]]))
            return ExactValue::zero(bits);

    const HalfInt j1 = e[0], j2 = e[1], j12 = e[2], j125 = e[3], j3 = e[4],
                  j4 = e[5], j34 = e[6], j135 = e[7], j13 = e[8], j24 = e[9],
                  j5 = e[10], j6 = e[11];

    mpq_class fixed =
        delta_q(j1, j2, j12) * delta_q(j3, j4, j34) * delta_q(j1, j3, j13) *
        delta_q(j2, j4, j24) * delta_q(j5, j12, j125) * delta_q(j34, j6, j125) *
        delta_q(j5, j13, j135) * delta_q(j24, j6, j135);
    fixed.canonicalize();

    Range r = intersect(intersect(triad_range(j5, j6), triad_range(j12, j34)),
                        triad_range(j13, j24));

    // exponent of the recoupling phase, in twice units, without the x term
    long long texp0 = 2LL * j12.twice() + 2LL * j13.twice() +
                      6LL * j5.twice() + j34.twice() + j24.twice() -
                      j125.twice() - j135.twice();

    mpq_class sum = 0;
    for (int tx = r.lo; tx <= r.hi; tx += 2) {
        HalfInt x = HalfInt::from_twice(tx);
        Radical sA = six_j_radical(j5, j12, j125, j34, j6, x);
        Radical sB = six_j_radical(j5, j13, j135, j24, j6, x);
        if (sA.first == 0 || sB.first == 0) continue;
        Radical s9 = nine_j_radical({j1, j2, j12, j3, j4, j34, j13, j24, x});
        if (s9.first == 0) continue;

        mpq_class ratio = sA.second * sB.second * s9.second / fixed;
        ratio.canonicalize();
        mpq_class term = (tx + 1) * sA.first * sB.first * s9.first *
                         sqrt_exact(ratio);
        int sign = phase_from_twice(texp0 + 2LL * tx);
        sum += sign > 0 ? term : -term;
    }

    return ExactValue(sum, sum == 0 ? mpq_class(1) : fixed, bits);
}

ExactValue fifteen_j_first(const std::array<HalfInt, 15>& e)
{
    long bits = default_precision_bits(static_cast<long>(twice_total(e)));
    for (const auto& t : triad_table(SymbolKind::FifteenJFirst))
        if (!triad_allowed(e[t[0]], e[t[1]], e[t[2]]))
            return ExactValue::zero(bits);

    const HalfInt j1 = e[0], j2 = e[1], j12 = e[2], j125 = e[3], j1256 = e[4],
                  j3 = e[5], j4 = e[6], j34 = e[7], j135 = e[8], j1356 = e[9],
                  j13 = e[10], j24 = e[11], j5 = e[12], j6 = e[13], j7 = e[14];

    mpq_class fixed = delta_q(j1, j2, j12) * delta_q(j3, j4, j34) *
                      delta_q(j1, j3, j13) * delta_q(j2, j4, j24) *
                      delta_q(j5, j12, j125) * delta_q(j5, j13, j135) *
                      delta_q(j6, j125, j1256) * delta_q(j6, j135, j1356) *
                      delta_q(j34, j7, j1256) * delta_q(j24, j7, j1356);
    fixed.canonicalize();

    Range xr =
        intersect(intersect(triad_range(j6, j7), triad_range(j125, j34)),
                  triad_range(j135, j24));

    long long xexp0 = 2LL * j125.twice() + 2LL * j135.twice() +
                      6LL * j6.twice() + j34.twice() + j24.twice() -
                      j1256.twice() - j1356.twice();
    long long yexp0 = 2LL * j12.twice() + 2LL * j13.twice() +
                      6LL * j5.twice() + j34.twice() + j24.twice() -
                      j125.twice() - j135.twice();

    mpq_class sum = 0;
    for (int tx = xr.lo; tx <= xr.hi; tx += 2) {
        HalfInt x = HalfInt::from_twice(tx);
        Radical s1 = six_j_radical(j6, j125, j1256, j34, j7, x);
        Radical s2 = six_j_radical(j6, j135, j1356, j24, j7, x);
        if (s1.first == 0 || s2.first == 0) continue;

        Range yr = intersect(intersect(triad_range(j5, x),
                                       triad_range(j12, j34)),
                             triad_range(j13, j24));
        for (int ty = yr.lo; ty <= yr.hi; ty += 2) {
            HalfInt y = HalfInt::from_twice(ty);
            Radical s3 = six_j_radical(j5, j12, j125, j34, x, y);
            Radical s4 = six_j_radical(j5, j13, j135, j24, x, y);
            if (s3.first == 0 || s4.first == 0) continue;
            Radical s9 =
                nine_j_radical({j1, j2, j12, j3, j4, j34, j13, j24, y});
            if (s9.first == 0) continue;

            mpq_class ratio =
                s1.second * s2.second * s3.second * s4.second * s9.second /
                fixed;
            ratio.canonicalize();
            mpq_class term = (tx + 1) * (ty + 1) * s1.first * s2.first *
                             s3.first * s4.first * s9.first *
                             sqrt_exact(ratio);
            int sign = phase_from_twice(xexp0 + 2LL * tx + yexp0 + 2LL * ty);
            sum += sign > 0 ? term : -term;
        }
    }

    return ExactValue(sum, sum == 0 ? mpq_class(1) : fixed, bits);
}

ExactValue evaluate(const SymbolArgs& args)
{
    args.validate();
    const auto& e = args.entries;
    switch (args.kind) {
        case SymbolKind::SixJ:
            return six_j(e[0], e[1], e[2], e[3], e[4], e[5]);
        case SymbolKind::NineJ:
            return nine_j(e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7], e[8]);
        case SymbolKind::TwelveJFirst: {
            std::array<HalfInt, 12> a;
            std::copy_n(e.begin(), 12, a.begin());
            return twelve_j_first(a);
        }
        case SymbolKind::FifteenJFirst: {
            std::array<HalfInt, 15> a;
            std::copy_n(e.begin(), 15, a.begin());
            return fifteen_j_first(a);
        }
    }
    throw InvalidSpec("unknown symbol kind");
}

void six_j_cache_enable(bool on) { six_j_cache().enabled.store(on); }

void six_j_cache_set_capacity(std::size_t max_entries)
{
    six_j_cache().capacity.store(max_entries);
}

void six_j_cache_clear()
{
    auto& c = six_j_cache();
    std::unique_lock lock(c.mutex);
    c.map.clear();
}

std::size_t six_j_cache_size()
{
    auto& c = six_j_cache();
    std::shared_lock lock(c.mutex);
    return c.map.size();
}

void nine_j_cache_clear()
{
    auto& c = nine_j_cache();
    std::unique_lock lock(c.mutex);
    c.map.clear();
}

} // namespace wigner
