#pragma once

#include <cstdint>

#include "gsfs/symbol.hpp"

namespace gsfs {

/// Checks every admissibility rule of a generalized Seifert symbol.
///
/// Pair ranges are not checked here: beta may lie outside [0, alpha) and
/// alpha = 1 pairs are accepted, since normalize_gsfs folds both into b.
/// Coprimality is always checked on (alpha, beta mod alpha).
Violations validate_gsfs(const GsfsSymbol& s);

/// Returns the canonical representative of the symbol's class.
///
/// Pairs are reduced to 0 < beta < alpha with the quotient carried into b,
/// alpha = 1 pairs are folded into b, and in Z/2-obstruction classes each
/// beta is replaced by min(beta, alpha - beta) and b is reduced mod 2. When
/// the b-domain rule forces b = 0 the carries are dropped. Pairs end sorted.
///
/// Obstruction-domain violations of Z/2 classes are treated as range issues
/// and repaired; any other violation raises InvalidSymbol.
GsfsSymbol normalize_gsfs(const GsfsSymbol& s);

/// True iff `s` is admissible and a fixed point of normalize_gsfs.
bool is_normalized(const GsfsSymbol& s);

/// Orientation reversal {-b - n, eps, g, 0, (alpha, alpha - beta)} on
/// normalized o1 manifold symbols; the identity on every other normalized
/// symbol. Throws InvalidSymbol if `s` is not normalized.
GsfsSymbol reverse_orientation(const GsfsSymbol& s);

enum class OrientationPolicy : std::uint8_t { Strict, UpToOrientation };

/// Decides fiber-preserving equivalence by comparing canonical forms.
/// Throws InvalidSymbol on inadmissible input.
bool equivalent(const GsfsSymbol& a, const GsfsSymbol& b,
                OrientationPolicy policy = OrientationPolicy::Strict);

/// Topologically singular points: two per I-fiber.
constexpr std::uint64_t sing_count(const GsfsSymbol& s) {
  return 2 * static_cast<std::uint64_t>(s.interval_fibers);
}

constexpr bool is_manifold(const GsfsSymbol& s) { return s.interval_fibers == 0; }

namespace detail {

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// Pair checks shared with the local-action symbol.
void check_pairs(const std::vector<SeifertPair>& pairs, Violations& out);

/// b-domain rule shared by both symbol kinds; `forced_by_blocks` is
/// iota > 0 for GSFS symbols and f + t > 0 for local-action symbols.
void check_obstruction(std::int64_t b, Epsilon eps,
                       const std::vector<SeifertPair>& pairs,
                       bool forced_by_blocks, Rule forced_rule,
                       const char* forced_message, Violations& out);

/// True for violations normalization can repair.
bool is_repairable(Rule rule);

/// Pair normalization rules with carries into `b`; sorts `pairs`.
void normalize_pairs(std::int64_t& b, Epsilon eps,
                     std::vector<SeifertPair>& pairs, bool forced_by_blocks);

}  // namespace detail

}  // namespace gsfs
