#pragma once

// Value types shared by every module: the six-valued bundle class, the
// Seifert pair of an exceptional circle fiber, the generalized Seifert
// symbol, and the rule-violation record produced by the validators.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsfs {

/// Class of the O(2) circle bundle over the regular part of the base.
/// o-classes have orientable base, n-classes non-orientable base.
enum class Epsilon : std::uint8_t { o1, o2, n1, n2, n3, n4 };

inline constexpr std::array<Epsilon, 6> kAllEpsilons = {
    Epsilon::o1, Epsilon::o2, Epsilon::n1,
    Epsilon::n2, Epsilon::n3, Epsilon::n4};

std::string_view to_string(Epsilon e);
std::optional<Epsilon> epsilon_from_string(std::string_view tag);

constexpr bool is_orientable_base(Epsilon e) {
  return e == Epsilon::o1 || e == Epsilon::o2;
}

/// Classes {o2, n1, n3, n4}, where the obstruction b lives in Z/2.
constexpr bool has_z2_obstruction(Epsilon e) {
  return e == Epsilon::o2 || e == Epsilon::n1 || e == Epsilon::n3 ||
         e == Epsilon::n4;
}

/// Invariants (alpha, beta) of one exceptional circle fiber.
struct SeifertPair {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;

  friend auto operator<=>(const SeifertPair&, const SeifertPair&) = default;
};

/// The invariant tuple {b, eps, g, iota, {(alpha_i, beta_i)}} of a generalized
/// Seifert fiber space.
///
/// `genus` is the orientable genus of the base for o-classes and the
/// crosscap number for n-classes. `interval_fibers` counts I-fibers. Pairs
/// keep input order until normalized; canonical symbols store them sorted.
struct GsfsSymbol {
  std::int64_t obstruction = 0;
  Epsilon epsilon = Epsilon::o1;
  std::int64_t genus = 0;
  std::int64_t interval_fibers = 0;
  std::vector<SeifertPair> pairs;

  friend auto operator<=>(const GsfsSymbol&, const GsfsSymbol&) = default;
};

enum class Rule : std::uint8_t {
  NegativeCount,
  AlphaNonPositive,
  NotCoprime,
  NonOrientableGenusZero,
  ObstructionWithIntervalFibers,
  ObstructionWithAlphaTwo,
  ObstructionOutsideZ2,
  TwistedFixedExceedsFixed,
  TwistedSeExceedsSe,
  TwistedSfExceedsSf,
  SimpleSfTupleLength,
  TwistedSfTupleLength,
  OddSingularCount,
  ObstructionWithFixedBlocks,
  CoverInadmissible,
  CoverEpsilon,
  CoverGenus,
  CoverObstruction,
  CoverPairs,
  CoverSingular,
};

/// One failed admissibility rule. `message` is the human-readable line the
/// CLI prints; `field` names the offending component.
struct Violation {
  Rule rule;
  std::string field;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

}  // namespace gsfs
