#include "wigner/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "wigner/asymptotics.hpp"
#include "wigner/errors.hpp"
#include "wigner/geometry.hpp"

namespace wigner {

namespace {

const char* const k9j1s[] = {"j1", "j2", "j12", "s", "j4",
                             "j34", "j13", "j24", "j5"};
const char* const k9j2s[] = {"j1", "s2", "j12", "s3", "j4",
                             "j34", "j13", "j24", "j5"};
const char* const k12j2s[] = {"s1", "j2", "j12", "j125", "j3", "j4",
                              "j34", "j135", "j13", "j24", "s5", "j6"};
const char* const k15j3s[] = {"j1", "j2", "j12", "j125", "j1256",
                              "s3", "j4", "j34", "j135", "j1356",
                              "j13", "j24", "s5", "s6", "j7"};
const char* const kPr6j[] = {"a", "b", "c", "d", "e", "f"};

AsymResult eval_asym(AsymKind kind, const std::vector<HalfInt>& e)
{
    switch (kind) {
        case AsymKind::NineJOneSmall:
            return asym_9j_one_small(e[0], e[1], e[2], e[3], e[4], e[5], e[6],
                                     e[7], e[8]);
        case AsymKind::NineJTwoSmall:
            return asym_9j_two_small(e[0], e[1], e[2], e[3], e[4], e[5], e[6],
                                     e[7], e[8]);
        case AsymKind::TwelveJTwoSmall: {
            std::array<HalfInt, 12> a;
            std::copy_n(e.begin(), 12, a.begin());
            return asym_12j_two_small(a);
        }
        case AsymKind::FifteenJThreeSmall: {
            std::array<HalfInt, 15> a;
            std::copy_n(e.begin(), 15, a.begin());
            return asym_15j_three_small(a);
        }
        case AsymKind::PonzanoRegge6j:
            return ponzano_regge_6j(e[0], e[1], e[2], e[3], e[4], e[5]);
    }
    throw InvalidSpec("unknown asymptotic kind");
}

int role_index(AsymKind kind, const std::string& role)
{
    auto names = role_names(kind);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (role == names[i]) return static_cast<int>(i);
    throw InvalidSpec("unknown role '" + role + "' for kind " +
                      asym_kind_name(kind));
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

AsymKind asym_kind_from_name(const std::string& name)
{
    if (name == "9j1s") return AsymKind::NineJOneSmall;
    if (name == "9j2s") return AsymKind::NineJTwoSmall;
    if (name == "12j2s") return AsymKind::TwelveJTwoSmall;
    if (name == "15j3s") return AsymKind::FifteenJThreeSmall;
    if (name == "pr6j") return AsymKind::PonzanoRegge6j;
    throw InvalidSpec("unknown asymptotic kind '" + name + "'");
}

const char* asym_kind_name(AsymKind kind)
{
    switch (kind) {
        case AsymKind::NineJOneSmall: return "9j1s";
        case AsymKind::NineJTwoSmall: return "9j2s";
        case AsymKind::TwelveJTwoSmall: return "12j2s";
        case AsymKind::FifteenJThreeSmall: return "15j3s";
        case AsymKind::PonzanoRegge6j: return "pr6j";
    }
    return "?";
}

std::span<const char* const> role_names(AsymKind kind)
{
    switch (kind) {
        case AsymKind::NineJOneSmall: return k9j1s;
        case AsymKind::NineJTwoSmall: return k9j2s;
        case AsymKind::TwelveJTwoSmall: return k12j2s;
        case AsymKind::FifteenJThreeSmall: return k15j3s;
        case AsymKind::PonzanoRegge6j: return kPr6j;
    }
    return {};
}

SymbolKind exact_kind_of(AsymKind kind)
{
    switch (kind) {
        case AsymKind::NineJOneSmall:
        case AsymKind::NineJTwoSmall: return SymbolKind::NineJ;
        case AsymKind::TwelveJTwoSmall: return SymbolKind::TwelveJFirst;
        case AsymKind::FifteenJThreeSmall: return SymbolKind::FifteenJFirst;
        case AsymKind::PonzanoRegge6j: return SymbolKind::SixJ;
    }
    return SymbolKind::SixJ;
}

void SweepSpec::validate() const
{
    auto names = role_names(kind);
    int free_idx = role_index(kind, free_role);
    for (const auto& [role, value] : fixed) {
        int idx = role_index(kind, role); // throws on unknown role
        if (idx == free_idx)
            throw InvalidSpec("role '" + free_role + "' is both fixed and free");
        if (value.is_negative())
            throw InvalidSpec("quantum numbers must be non-negative");
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        if (static_cast<int>(i) != free_idx && !fixed.contains(names[i]))
            throw InvalidSpec(std::string("missing fixed role '") + names[i] +
                              "'");
    if (range && range->first > range->second)
        throw InvalidSpec("empty sweep range");
}

std::pair<HalfInt, HalfInt> allowed_free_range(const SweepSpec& spec)
{
    spec.validate();
    SymbolKind sk = exact_kind_of(spec.kind);
    int free_idx = role_index(spec.kind, spec.free_role);
    auto names = role_names(spec.kind);

    std::vector<HalfInt> entries(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        if (static_cast<int>(i) != free_idx) entries[i] = spec.fixed.at(names[i]);

    int lo = 0, hi = -1;
    bool constrained = false;
    for (const auto& t : triad_table(sk)) {
        int pos = -1;
        for (int k = 0; k < 3; ++k)
            if (t[k] == free_idx) pos = k;
        if (pos < 0) {
            if (!triad_allowed(entries[t[0]], entries[t[1]], entries[t[2]]))
                return {HalfInt(0), HalfInt(-1)}; // fixed entries already fail
            continue;
        }
        HalfInt p = entries[t[(pos + 1) % 3]];
        HalfInt q = entries[t[(pos + 2) % 3]];
        int tlo = std::abs(p.twice() - q.twice());
        int thi = p.twice() + q.twice();
        if (!constrained) {
            lo = tlo;
            hi = thi;
            constrained = true;
        } else {
            if ((tlo - lo) % 2 != 0) return {HalfInt(0), HalfInt(-1)};
            lo = std::max(lo, tlo);
            hi = std::min(hi, thi);
        }
    }
    if (!constrained || lo > hi) return {HalfInt(0), HalfInt(-1)};
    return {HalfInt::from_twice(lo), HalfInt::from_twice(hi)};
}

std::vector<ComparisonRow> run_sweep(const SweepSpec& spec)
{
    auto [lo, hi] = allowed_free_range(spec);
    if (spec.range) {
        if (spec.range->first > lo) {
            int shift = (spec.range->first.twice() - lo.twice());
            lo = HalfInt::from_twice(lo.twice() + 2 * ((shift + 1) / 2));
        }
        if (spec.range->second < hi) hi = spec.range->second;
    }
    if (lo > hi) return {};

    int free_idx = role_index(spec.kind, spec.free_role);
    auto names = role_names(spec.kind);
    std::vector<HalfInt> base(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        if (static_cast<int>(i) != free_idx) base[i] = spec.fixed.at(names[i]);

    const int n = (hi.twice() - lo.twice()) / 2 + 1;
    std::vector<ComparisonRow> rows(n);

    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            HalfInt v = HalfInt::from_twice(lo.twice() + 2 * i);
            std::vector<HalfInt> entries = base;
            entries[free_idx] = v;

            ComparisonRow row;
            row.free_value = v;
            SymbolArgs args(exact_kind_of(spec.kind), entries);
            ExactValue exact = evaluate(args);
            if (spec.precision_bits > 0) {
                exact = ExactValue(exact.coeff(), exact.radicand(),
                                   spec.precision_bits);
            }
            row.exact = exact.to_double();

            try {
                AsymResult a = eval_asym(spec.kind, entries);
                row.allowed = a.in_allowed_region;
                row.volume = a.volume;
                if (a.value) {
                    row.asym = *a.value;
                    row.abs_err = std::abs(*a.value - row.exact);
                }
            } catch (const IndexOutOfRange&) {
                row.allowed = false;
            } catch (const DegenerateAngle&) {
                row.allowed = false;
            } catch (const NotClassicallyAllowed&) {
                row.allowed = false;
            } catch (const NotATriangle&) {
                row.allowed = false;
            }
            rows[i] = std::move(row);
        }
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1 || n < 2) {
        work(0, n);
    } else {
        jobs = std::min<int>(jobs, n);
        std::vector<std::thread> pool;
        int chunk = (n + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            int b = t * chunk, e = std::min(n, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

ErrorReport error_report(const std::vector<ComparisonRow>& rows,
                         double volume_floor_fraction)
{
    if (rows.empty()) throw EmptyInput("error_report: no rows");

    ErrorReport rep;
    rep.n_rows = rows.size();

    double vmax = 0;
    for (const auto& r : rows)
        if (r.allowed && r.volume) vmax = std::max(vmax, *r.volume);
    rep.volume_floor = volume_floor_fraction * vmax;

    double se_all = 0, sx_all = 0, se_fl = 0, sx_fl = 0;
    for (const auto& r : rows) {
        if (!r.allowed || !r.abs_err) continue;
        ++rep.n_allowed;
        double err = *r.abs_err;
        rep.max_abs_err_allowed = std::max(rep.max_abs_err_allowed, err);
        se_all += err * err;
        sx_all += r.exact * r.exact;

        double vol = r.volume.value_or(0.0);
        if (vol >= rep.volume_floor) {
            ++rep.n_floored;
            rep.max_abs_err_floored = std::max(rep.max_abs_err_floored, err);
            se_fl += err * err;
            sx_fl += r.exact * r.exact;
        } else {
            ++rep.n_caustic_adjacent;
        }
    }
    if (rep.n_allowed > 0) {
        rep.rms_err_allowed = std::sqrt(se_all / rep.n_allowed);
        double rx = std::sqrt(sx_all / rep.n_allowed);
        rep.rel_rms_allowed = rx > 0 ? rep.rms_err_allowed / rx : 0;
    }
    if (rep.n_floored > 0) {
        rep.rms_err_floored = std::sqrt(se_fl / rep.n_floored);
        double rx = std::sqrt(sx_fl / rep.n_floored);
        rep.rel_rms_floored = rx > 0 ? rep.rms_err_floored / rx : 0;
    }
    return rep;
}

void emit_csv(const std::vector<ComparisonRow>& rows, std::ostream& out)
{
    out << "free_value,exact,asym,abs_err,volume,allowed\n";
    for (const auto& r : rows) {
        out << r.free_value.str() << ',' << format_double(r.exact) << ',';
        if (r.asym) out << format_double(*r.asym);
        out << ',';
        if (r.abs_err) out << format_double(*r.abs_err);
        out << ',';
        if (r.volume) out << format_double(*r.volume);
        out << ',' << (r.allowed ? '1' : '0') << '\n';
    }
}

void emit_csv(const std::vector<ComparisonRow>& rows, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    emit_csv(rows, f);
    f.flush();
    if (!f) throw IoError("write failed for '" + path + "'");
}

std::vector<ComparisonRow> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw IoError("empty CSV: missing header");
    if (line.ends_with("\r")) line.pop_back();
    if (line != "free_value,exact,asym,abs_err,volume,allowed")
        throw IoError("unexpected CSV header: '" + line + "'");

    std::vector<ComparisonRow> rows;
    while (std::getline(in, line)) {
        if (line.ends_with("\r")) line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                f.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (f.size() != 6)
            throw IoError("bad CSV record: '" + line + "'");
        try {
            ComparisonRow r;
            r.free_value = HalfInt::parse(f[0]);
            r.exact = std::stod(f[1]);
            if (!f[2].empty()) r.asym = std::stod(f[2]);
            if (!f[3].empty()) r.abs_err = std::stod(f[3]);
            if (!f[4].empty()) r.volume = std::stod(f[4]);
            r.allowed = f[5] == "1" || f[5] == "true";
            rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw IoError("bad CSV record: '" + line + "' (" + e.what() + ")");
        }
    }
    return rows;
}

std::vector<ComparisonRow> parse_csv_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    return parse_csv(f);
}

} // namespace wigner
