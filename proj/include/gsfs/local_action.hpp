#pragma once

#include <cstdint>
#include <vector>

#include "gsfs/symbol.hpp"

namespace gsfs {

/// Invariant tuple of an isometric local circle action on a closed
/// Alexandrov 3-space:
/// {b; eps, g, (f,k1), (t,k2), (s,k3); {(alpha_i,beta_i)}; (r_1..r_{s-k3}); (q_1..q_{k3})}.
///
/// The total twisted-block count k = k1 + k2 + k3 is derived, never stored.
struct LocalActionSymbol {
  std::int64_t obstruction = 0;
  Epsilon epsilon = Epsilon::o1;
  std::int64_t genus = 0;
  std::int64_t fixed_blocks = 0;          // f
  std::int64_t twisted_fixed_blocks = 0;  // k1
  std::int64_t se_blocks = 0;             // t
  std::int64_t twisted_se_blocks = 0;     // k2
  std::int64_t sf_blocks = 0;             // s
  std::int64_t twisted_sf_blocks = 0;     // k3
  std::vector<SeifertPair> pairs;
  /// Singular-point counts of the simple SF-blocks.
  std::vector<std::int64_t> simple_sf_singular;
  /// Singular-point counts of the twisted SF-blocks.
  std::vector<std::int64_t> twisted_sf_singular;

  std::int64_t twisted_total() const {
    return twisted_fixed_blocks + twisted_se_blocks + twisted_sf_blocks;
  }

  friend auto operator<=>(const LocalActionSymbol&, const LocalActionSymbol&) = default;
};

Violations validate_local(const LocalActionSymbol& s);

/// Pair rules of normalize_gsfs plus ascending order on both singular-count
/// tuples. Throws InvalidSymbol on non-repairable violations.
LocalActionSymbol normalize_local(const LocalActionSymbol& s);

bool equivalent_local(const LocalActionSymbol& a, const LocalActionSymbol& b);

/// Replaces each I-fiber neighborhood by a twisted F-block:
/// {b, eps, g, (f=iota, k1=iota), (t=0, k2=0), (s=0, k3=0), pairs}.
LocalActionSymbol to_local_action(const GsfsSymbol& s);

/// Left inverse of to_local_action. Throws NotInImage naming the first
/// failing condition (t != 0, s != 0, k1 != f), then InvalidSymbol.
GsfsSymbol from_local_action(const LocalActionSymbol& s);

/// Sum of both singular-count tuples.
std::int64_t local_sing_count(const LocalActionSymbol& s);

}  // namespace gsfs
