// Command-line harness: exact and asymptotic 3nj evaluation, sweeps over a
// free quantum number, and error reports from sweep CSV files.
//
// Exit codes: 0 success, 2 invalid spec/arguments, 3 IO error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "wigner/asymptotics.hpp"
#include "wigner/errors.hpp"
#include "wigner/exact3nj.hpp"
#include "wigner/sweep.hpp"

namespace {

using namespace wigner;

std::vector<HalfInt> parse_entries(const std::string& csv)
{
    std::vector<HalfInt> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            std::string tok = csv.substr(start, i - start);
            // trim spaces
            while (!tok.empty() && tok.front() == ' ') tok.erase(0, 1);
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (!tok.empty()) out.push_back(HalfInt::parse(tok));
            start = i + 1;
        }
    }
    return out;
}

SymbolKind exact_kind_from_name(const std::string& name)
{
    if (name == "6j") return SymbolKind::SixJ;
    if (name == "9j") return SymbolKind::NineJ;
    if (name == "12j") return SymbolKind::TwelveJFirst;
    if (name == "15j") return SymbolKind::FifteenJFirst;
    throw InvalidSpec("unknown exact kind '" + name + "' (6j|9j|12j|15j)");
}

int cmd_exact(const std::string& kind, const std::string& entries,
              long precision, int digits)
{
    SymbolArgs args(exact_kind_from_name(kind), parse_entries(entries));
    ExactValue v = evaluate(args);
    if (precision > 0) v = ExactValue(v.coeff(), v.radicand(), precision);

    if (v.is_exact_zero()) {
        std::printf("value = 0 (exact zero by selection rules)\n");
        return 0;
    }
    if (digits > 0)
        std::printf("value = %s\n", v.to_string(digits).c_str());
    else
        std::printf("value = %.17g\n", v.to_double());
    std::printf("precision_bits = %ld\nstable_digits = %d\n",
                v.precision_bits(), v.stable_digits());
    return 0;
}

int cmd_asym(const std::string& kind_name, const std::string& entries)
{
    AsymKind kind = asym_kind_from_name(kind_name);
    std::vector<HalfInt> e = parse_entries(entries);
    if (e.size() != role_names(kind).size())
        throw InvalidSpec("kind " + std::string(asym_kind_name(kind)) +
                          " takes " + std::to_string(role_names(kind).size()) +
                          " entries, got " + std::to_string(e.size()));

    AsymResult r = [&] {
        switch (kind) {
            case AsymKind::NineJOneSmall:
                return asym_9j_one_small(e[0], e[1], e[2], e[3], e[4], e[5],
                                         e[6], e[7], e[8]);
            case AsymKind::NineJTwoSmall:
                return asym_9j_two_small(e[0], e[1], e[2], e[3], e[4], e[5],
                                         e[6], e[7], e[8]);
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
        throw InvalidSpec("unreachable");
    }();

    if (!r.in_allowed_region) {
        std::printf("allowed = 0 (outside the classically allowed region)\n");
        return 0;
    }
    std::printf("value = %.17g\n", *r.value);
    std::printf("allowed = 1\n");
    if (r.volume) std::printf("volume = %.17g\n", *r.volume);
    std::printf("prefactor = %.17g\ncosine_argument = %.17g\n", r.prefactor,
                r.cosine_argument);
    for (std::size_t i = 0; i < r.d_factors.size(); ++i)
        std::printf("d_factor[%zu] = %.17g\n", i, r.d_factors[i]);
    return 0;
}

SweepSpec build_sweep_spec(const std::string& kind_name,
                           const std::vector<std::string>& fixed,
                           const std::string& free_role,
                           const std::string& range, long precision, int jobs)
{
    SweepSpec spec;
    spec.kind = asym_kind_from_name(kind_name);
    spec.free_role = free_role;
    spec.precision_bits = precision;
    spec.jobs = jobs;
    for (const auto& group : fixed) {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= group.size(); ++i) {
            if (i == group.size() || group[i] == ',') {
                std::string tok = group.substr(start, i - start);
                start = i + 1;
                if (tok.empty()) continue;
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw InvalidSpec("--fixed expects role=value, got '" +
                                      tok + "'");
                spec.fixed[tok.substr(0, eq)] =
                    HalfInt::parse(tok.substr(eq + 1));
            }
        }
    }
    if (!range.empty()) {
        auto colon = range.find(':');
        if (colon == std::string::npos)
            throw InvalidSpec("--range expects lo:hi");
        spec.range = {HalfInt::parse(range.substr(0, colon)),
                      HalfInt::parse(range.substr(colon + 1))};
    }
    return spec;
}

void print_report(const ErrorReport& rep)
{
    std::printf("rows                = %zu\n", rep.n_rows);
    std::printf("allowed rows        = %zu\n", rep.n_allowed);
    std::printf("rows above floor    = %zu\n", rep.n_floored);
    std::printf("caustic-adjacent    = %zu\n", rep.n_caustic_adjacent);
    std::printf("volume floor        = %.17g\n", rep.volume_floor);
    std::printf("max |err| (floored) = %.17g\n", rep.max_abs_err_floored);
    std::printf("rms err   (floored) = %.17g\n", rep.rms_err_floored);
    std::printf("rel rms   (floored) = %.17g\n", rep.rel_rms_floored);
    std::printf("max |err| (allowed) = %.17g\n", rep.max_abs_err_allowed);
    std::printf("rms err   (allowed) = %.17g\n", rep.rms_err_allowed);
    std::printf("rel rms   (allowed) = %.17g\n", rep.rel_rms_allowed);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact and semiclassical Wigner 3nj symbols"};
    app.require_subcommand(1);

    std::string kind, entries, free_role, range, out_path, in_path;
    std::vector<std::string> fixed;
    long precision = 0;
    int digits = 0, jobs = 1;
    double volume_floor = 0.5;

    auto* exact = app.add_subcommand("exact", "evaluate a symbol exactly");
    exact->add_option("--kind", kind, "6j|9j|12j|15j")->required();
    exact->add_option("--entries", entries, "comma list, row-major")->required();
    exact->add_option("--precision", precision, "working precision bits");
    exact->add_option("--digits", digits,
                      "print this many certified significant digits");

    auto* asym = app.add_subcommand("asym", "evaluate an asymptotic formula");
    asym->add_option("--kind", kind, "9j1s|9j2s|12j2s|15j3s|pr6j")->required();
    asym->add_option("--entries", entries, "comma list, row-major")->required();

    auto* sweep = app.add_subcommand("sweep", "sweep a free quantum number");
    sweep->add_option("--kind", kind, "9j1s|9j2s|12j2s|15j3s|pr6j")->required();
    sweep->add_option("--fixed", fixed, "role=value[,role=value...]")
        ->required();
    sweep->add_option("--free", free_role, "free role name")->required();
    sweep->add_option("--range", range, "lo:hi (subset of allowed range)");
    sweep->add_option("--precision", precision, "exact working precision bits");
    sweep->add_option("--jobs", jobs, "parallel evaluation threads");
    sweep->add_option("--out", out_path, "output CSV path")->required();

    auto* report = app.add_subcommand("report", "error statistics from a CSV");
    report->add_option("--in", in_path, "input CSV path")->required();
    report->add_option("--volume-floor", volume_floor,
                       "fraction of max volume")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(exact)) return cmd_exact(kind, entries, precision, digits);
        if (app.got_subcommand(asym)) return cmd_asym(kind, entries);
        if (app.got_subcommand(sweep)) {
            SweepSpec spec = build_sweep_spec(kind, fixed, free_role, range,
                                              precision, jobs);
            auto rows = run_sweep(spec);
            emit_csv(rows, out_path);
            std::printf("wrote %zu rows to %s\n", rows.size(),
                        out_path.c_str());
            return 0;
        }
        if (app.got_subcommand(report)) {
            auto rows = parse_csv_file(in_path);
            print_report(error_report(rows, volume_floor));
            return 0;
        }
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const InvalidSpec& e) {
        std::fprintf(stderr, "invalid spec: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    }
    return 0;
}
