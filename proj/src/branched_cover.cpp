#include "gsfs/branched_cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"

namespace gsfs {

namespace {

GsfsSymbol admissible_branched(const GsfsSymbol& s) {
  if (auto v = validate_gsfs(s); !v.empty()) throw InvalidSymbol(std::move(v));
  if (s.interval_fibers == 0) throw NotBranched();
  return normalize_gsfs(s);
}

std::int64_t doubled_genus(std::int64_t genus) {
  if (genus > std::numeric_limits<std::int64_t>::max() / 2) {
    throw InvalidSymbol("cover genus 2g overflows the signed 64-bit range");
  }
  return 2 * genus;
}

}  // namespace

GsfsSymbol double_cover(const GsfsSymbol& s) {
  const GsfsSymbol base = admissible_branched(s);
  GsfsSymbol cover{base.obstruction, base.epsilon, doubled_genus(base.genus), 0, {}};
  cover.pairs.reserve(2 * base.pairs.size());
  for (const auto& p : base.pairs) {
    cover.pairs.push_back(p);
    cover.pairs.push_back(p);
  }
  return normalize_gsfs(cover);
}

Violations check_cover_consistency(const GsfsSymbol& s, const CoverFunction& cover) {
  const GsfsSymbol base = admissible_branched(s);
  const GsfsSymbol result = cover(s);
  Violations out;

  if (!validate_gsfs(result).empty()) {
    out.push_back({Rule::CoverInadmissible, "cover", "cover symbol is not admissible"});
  }
  if (result.epsilon != base.epsilon) {
    out.push_back({Rule::CoverEpsilon, "eps",
                   "cover eps " + std::string(to_string(result.epsilon)) +
                       " != eps " + std::string(to_string(base.epsilon))});
  }
  if (result.genus != doubled_genus(base.genus)) {
    out.push_back({Rule::CoverGenus, "g",
                   "cover g " + std::to_string(result.genus) + " != 2g = " +
                       std::to_string(doubled_genus(base.genus))});
  }
  if (result.obstruction != base.obstruction) {
    out.push_back({Rule::CoverObstruction, "b",
                   "cover b " + std::to_string(result.obstruction) + " != b " +
                       std::to_string(base.obstruction)});
  }

  std::vector<SeifertPair> expected;
  for (const auto& p : base.pairs) {
    expected.push_back(p);
    expected.push_back(p);
  }
  std::vector<SeifertPair> actual = result.pairs;
  std::sort(actual.begin(), actual.end());
  if (actual != expected) {
    out.push_back({Rule::CoverPairs, "pairs",
                   "cover pairs are not the input pairs with doubled multiplicity (" +
                       std::to_string(actual.size()) + " vs " +
                       std::to_string(expected.size()) + ")"});
  }
  if (sing_count(result) != 0) {
    out.push_back({Rule::CoverSingular, "iota",
                   "cover has " + std::to_string(sing_count(result)) + " singular points"});
  }
  return out;
}

}  // namespace gsfs
