#ifndef WIGNER_EXACT3NJ_HPP
#define WIGNER_EXACT3NJ_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wigner/exact_value.hpp"
#include "wigner/half_int.hpp"

namespace wigner {

enum class SymbolKind { SixJ, NineJ, TwelveJFirst, FifteenJFirst };

std::size_t entry_count(SymbolKind kind);
const char* kind_name(SymbolKind kind);

/// Triads (index triples into the row-major entry list) whose triangle
/// rules must all hold for the symbol to be nonzero.
std::span<const std::array<int, 3>> triad_table(SymbolKind kind);

/// A 3nj symbol in the row-major array layout of its kind:
///   SixJ          {a b c; d e f}
///   NineJ         {j1 j2 j12; j3 j4 j34; j13 j24 j5}
///   TwelveJFirst  {j1 j2 j12 j125; j3 j4 j34 j135; j13 j24 j5 j6}
///   FifteenJFirst {j1 j2 j12 j125 j1256; j3 j4 j34 j135 j1356;
///                  j13 j24 j5 j6 j7}
struct SymbolArgs {
    SymbolKind kind;
    std::vector<HalfInt> entries;

    SymbolArgs(SymbolKind k, std::vector<HalfInt> e);

    /// Throws InvalidSpec on wrong entry count or a negative entry.
    void validate() const;

    bool selection_rules_pass() const;
};

/// Default working precision for a symbol whose entries sum (in twice
/// units) to twice_sum.
long default_precision_bits(long twice_sum);

ExactValue six_j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e,
                 HalfInt f);

ExactValue nine_j(HalfInt j1, HalfInt j2, HalfInt j12, HalfInt j3, HalfInt j4,
                  HalfInt j34, HalfInt j13, HalfInt j24, HalfInt j5);

/// 12j symbol of the first kind, array read row-major as
/// {j1 j2 j12 j125; j3 j4 j34 j135; j13 j24 j5 j6}.
ExactValue twelve_j_first(const std::array<HalfInt, 12>& e);

/// 15j symbol of the first kind, array read row-major as
/// {j1 j2 j12 j125 j1256; j3 j4 j34 j135 j1356; j13 j24 j5 j6 j7}.
ExactValue fifteen_j_first(const std::array<HalfInt, 15>& e);

ExactValue evaluate(const SymbolArgs& args);

/// 6j memo cache controls.  The cache is keyed by the symmetry-canonical
/// form, so cached and uncached evaluations are bit-identical.
void six_j_cache_enable(bool on);
void six_j_cache_set_capacity(std::size_t max_entries); // 0 = unbounded
void six_j_cache_clear();
std::size_t six_j_cache_size();

void nine_j_cache_clear();

} // namespace wigner

#endif
