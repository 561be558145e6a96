#pragma once

#include <functional>

#include "gsfs/symbol.hpp"

namespace gsfs {

/// Symbol of the canonical double branched cover of a non-manifold space:
/// {b, eps, 2g, 0, every pair twice}, in canonical form.
///
/// The input is normalized first, so unnormalized representatives of one
/// class have the same cover. Throws InvalidSymbol on inadmissible input and
/// NotBranched when iota = 0.
GsfsSymbol double_cover(const GsfsSymbol& s);

using CoverFunction = std::function<GsfsSymbol(const GsfsSymbol&)>;

/// Checks the cover produced by `cover` against the doubling rule: it must be
/// admissible, keep eps, have genus 2g, keep b, carry every pair of the
/// normalized input with doubled multiplicity, and have no singular points.
/// `cover` defaults to double_cover; tests inject faulty routines.
Violations check_cover_consistency(const GsfsSymbol& s,
                                   const CoverFunction& cover = double_cover);

}  // namespace gsfs
