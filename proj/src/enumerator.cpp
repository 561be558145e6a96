#include "gsfs/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "gsfs/branched_cover.hpp"
#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"
#include "gsfs/notation.hpp"

namespace gsfs {

EnumBounds checked_bounds(EnumBounds bounds) {
  if (bounds.max_genus < 0 || bounds.max_interval_fibers < 0 || bounds.max_pairs < 0) {
    throw BoundsError("genus, iota and pair-count bounds must be non-negative");
  }
  if (bounds.max_alpha < 2) throw BoundsError("max_alpha must be >= 2");
  if (bounds.b_min > bounds.b_max) throw BoundsError("b range is empty");
  if (bounds.b_min > 0 || bounds.b_max < 0) throw BoundsError("b range must contain 0");
  if (bounds.epsilons.empty()) throw BoundsError("eps set must be non-empty");
  std::sort(bounds.epsilons.begin(), bounds.epsilons.end());
  bounds.epsilons.erase(std::unique(bounds.epsilons.begin(), bounds.epsilons.end()),
                        bounds.epsilons.end());
  return bounds;
}

namespace {

// Canonical pairs for one class: 0 < beta < alpha, coprime, and
// beta <= alpha - beta in Z/2-obstruction classes.
std::vector<SeifertPair> canonical_pairs(Epsilon eps, std::int64_t max_alpha) {
  std::vector<SeifertPair> out;
  for (std::int64_t alpha = 2; alpha <= max_alpha; ++alpha) {
    for (std::int64_t beta = 1; beta < alpha; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      if (has_z2_obstruction(eps) && 2 * beta > alpha) continue;
      out.push_back({alpha, beta});
    }
  }
  return out;
}

// Sorted multisets of size <= max_size drawn from `pool` (already sorted).
void multisets(const std::vector<SeifertPair>& pool, std::size_t max_size,
               std::size_t start, std::vector<SeifertPair>& current,
               std::vector<std::vector<SeifertPair>>& out) {
  out.push_back(current);
  if (current.size() == max_size) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    multisets(pool, max_size, i, current, out);
    current.pop_back();
  }
}

std::vector<std::int64_t> obstruction_values(const EnumBounds& bounds, Epsilon eps,
                                             std::int64_t iota,
                                             const std::vector<SeifertPair>& pairs) {
  const bool alpha_two = std::any_of(pairs.begin(), pairs.end(),
                                     [](const SeifertPair& p) { return p.alpha == 2; });
  if (iota > 0 || (has_z2_obstruction(eps) && alpha_two)) return {0};
  if (has_z2_obstruction(eps)) {
    return bounds.b_max >= 1 ? std::vector<std::int64_t>{0, 1} : std::vector<std::int64_t>{0};
  }
  std::vector<std::int64_t> out;
  for (std::int64_t b = bounds.b_min; b <= bounds.b_max; ++b) out.push_back(b);
  return out;
}

}  // namespace

std::vector<GsfsSymbol> enumerate(const EnumBounds& raw_bounds) {
  const EnumBounds bounds = checked_bounds(raw_bounds);
  std::vector<std::pair<std::string, GsfsSymbol>> found;

  for (Epsilon eps : bounds.epsilons) {
    std::vector<std::vector<SeifertPair>> pair_sets;
    std::vector<SeifertPair> scratch;
    multisets(canonical_pairs(eps, bounds.max_alpha),
              static_cast<std::size_t>(bounds.max_pairs), 0, scratch, pair_sets);

    const std::int64_t min_genus = is_orientable_base(eps) ? 0 : 1;
    for (std::int64_t genus = min_genus; genus <= bounds.max_genus; ++genus) {
      for (std::int64_t iota = 0; iota <= bounds.max_interval_fibers; ++iota) {
        for (const auto& pairs : pair_sets) {
          for (std::int64_t b : obstruction_values(bounds, eps, iota, pairs)) {
            GsfsSymbol s{b, eps, genus, iota, pairs};
            std::string key = render_gsfs(s);
            found.emplace_back(std::move(key), std::move(s));
          }
        }
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<GsfsSymbol> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

CensusRecord make_record(const GsfsSymbol& canonical) {
  CensusRecord r;
  r.symbol = canonical;
  r.sing = sing_count(canonical);
  r.manifold = is_manifold(canonical);
  if (!r.manifold) r.cover = double_cover(canonical);
  return r;
}

Census build_census(const EnumBounds& bounds) {
  Census census{checked_bounds(bounds), {}};
  for (const auto& s : enumerate(census.bounds)) census.records.push_back(make_record(s));
  return census;
}

}  // namespace gsfs
