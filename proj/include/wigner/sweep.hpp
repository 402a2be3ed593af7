#ifndef WIGNER_SWEEP_HPP
#define WIGNER_SWEEP_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wigner/exact3nj.hpp"
#include "wigner/half_int.hpp"

namespace wigner {

/// Which asymptotic formula a sweep or point evaluation uses.
enum class AsymKind {
    NineJOneSmall,     // "9j1s"
    NineJTwoSmall,     // "9j2s"
    TwelveJTwoSmall,   // "12j2s"
    FifteenJThreeSmall,// "15j3s"
    PonzanoRegge6j,    // "pr6j"
};

AsymKind asym_kind_from_name(const std::string& name);
const char* asym_kind_name(AsymKind kind);

/// Role labels of the kind's array layout, row-major.
std::span<const char* const> role_names(AsymKind kind);

/// The exact symbol the asymptotic formula approximates.
SymbolKind exact_kind_of(AsymKind kind);

struct SweepSpec {
    AsymKind kind;
    std::map<std::string, HalfInt> fixed;
    std::string free_role;
    std::optional<std::pair<HalfInt, HalfInt>> range;
    long precision_bits = 0; // 0: per-symbol default
    int jobs = 1;

    /// Throws InvalidSpec unless fixed covers every role except exactly
    /// free_role and the requested range is inside the selection-rule range.
    void validate() const;
};

struct ComparisonRow {
    HalfInt free_value;
    double exact = 0;
    std::optional<double> asym;
    std::optional<double> abs_err;
    std::optional<double> volume;
    bool allowed = false;
};

/// One row per step of the free quantum number over its allowed range
/// (or the requested sub-range), ordered by free value.  Per-point
/// asymptotic failures are recorded in the row, never thrown.
std::vector<ComparisonRow> run_sweep(const SweepSpec& spec);

/// Selection-rule-allowed range of the free role given the fixed entries.
std::pair<HalfInt, HalfInt> allowed_free_range(const SweepSpec& spec);

struct ErrorReport {
    std::size_t n_rows = 0;
    std::size_t n_allowed = 0;
    std::size_t n_floored = 0;         // allowed rows with volume >= floor
    std::size_t n_caustic_adjacent = 0;// allowed rows below the volume floor
    double volume_floor = 0;           // absolute volume threshold used
    double max_abs_err_floored = 0;
    double rms_err_floored = 0;
    double rel_rms_floored = 0; // rms error / rms exact, floored rows
    double max_abs_err_allowed = 0;
    double rms_err_allowed = 0;
    double rel_rms_allowed = 0;
};

/// Error statistics; rows with volume >= volume_floor_fraction * max volume
/// are reported separately from the caustic-adjacent remainder.
/// Throws EmptyInput on an empty row list.
ErrorReport error_report(const std::vector<ComparisonRow>& rows,
                         double volume_floor_fraction);

/// CSV columns: free_value,exact,asym,abs_err,volume,allowed
/// (empty fields for absent optionals; header mandatory; LF endings).
void emit_csv(const std::vector<ComparisonRow>& rows, std::ostream& out);
void emit_csv(const std::vector<ComparisonRow>& rows, const std::string& path);

std::vector<ComparisonRow> parse_csv(std::istream& in);
std::vector<ComparisonRow> parse_csv_file(const std::string& path);

} // namespace wigner

#endif
