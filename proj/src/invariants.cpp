#include "gsfs/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gsfs/errors.hpp"

namespace gsfs {

namespace detail {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

namespace {

std::string pair_text(const SeifertPair& p) {
  return "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")";
}

bool has_alpha_two(const std::vector<SeifertPair>& pairs) {
  return std::any_of(pairs.begin(), pairs.end(),
                     [](const SeifertPair& p) { return p.alpha == 2; });
}

}  // namespace

void check_pairs(const std::vector<SeifertPair>& pairs, Violations& out) {
  for (const auto& p : pairs) {
    if (p.alpha < 1) {
      out.push_back({Rule::AlphaNonPositive, "pairs",
                     "alpha must be >= 1 in pair " + pair_text(p)});
      continue;
    }
    const std::int64_t g = std::gcd(p.alpha, floor_mod(p.beta, p.alpha));
    if (g != 1) {
      out.push_back({Rule::NotCoprime, "pairs",
                     "gcd(alpha,beta)=" + std::to_string(g) + "!=1 in pair " +
                         pair_text(p)});
    }
  }
}

void check_obstruction(std::int64_t b, Epsilon eps,
                       const std::vector<SeifertPair>& pairs,
                       bool forced_by_blocks, Rule forced_rule,
                       const char* forced_message, Violations& out) {
  if (forced_by_blocks) {
    if (b != 0) out.push_back({forced_rule, "b", forced_message});
    return;
  }
  if (!has_z2_obstruction(eps)) return;
  if (has_alpha_two(pairs)) {
    if (b != 0) {
      out.push_back({Rule::ObstructionWithAlphaTwo, "b",
                     "b must be 0 when eps in {o2,n1,n3,n4} and some alpha=2"});
    }
  } else if (b != 0 && b != 1) {
    out.push_back({Rule::ObstructionOutsideZ2, "b",
                   "b must be 0 or 1 when eps in {o2,n1,n3,n4} and all alpha!=2"});
  }
}

bool is_repairable(Rule rule) {
  return rule == Rule::ObstructionWithAlphaTwo || rule == Rule::ObstructionOutsideZ2;
}

void normalize_pairs(std::int64_t& b, Epsilon eps, std::vector<SeifertPair>& pairs,
                     bool forced_by_blocks) {
  const bool z2 = has_z2_obstruction(eps);
  std::int64_t total = z2 ? floor_mod(b, 2) : b;
  bool overflow = false;
  const auto carry = [&](std::int64_t c) {
    if (z2) {
      total = (total + floor_mod(c, 2)) % 2;
    } else {
      overflow |= __builtin_add_overflow(total, c, &total);
    }
  };
  std::vector<SeifertPair> kept;
  kept.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.alpha == 1) {
      carry(p.beta);
      continue;
    }
    const std::int64_t reduced = floor_mod(p.beta, p.alpha);
    carry(floor_div(p.beta, p.alpha));
    kept.push_back({p.alpha, z2 ? std::min(reduced, p.alpha - reduced) : reduced});
  }
  if (forced_by_blocks || (z2 && has_alpha_two(kept))) {
    total = 0;
  } else if (overflow) {
    throw InvalidSymbol("obstruction b overflows the signed 64-bit range");
  }
  b = total;
  std::sort(kept.begin(), kept.end());
  pairs = std::move(kept);
}

}  // namespace detail

Violations validate_gsfs(const GsfsSymbol& s) {
  Violations out;
  if (s.genus < 0) out.push_back({Rule::NegativeCount, "g", "g must be non-negative"});
  if (s.interval_fibers < 0) {
    out.push_back({Rule::NegativeCount, "iota", "iota must be non-negative"});
  }
  if (!is_orientable_base(s.epsilon) && s.genus < 1) {
    out.push_back({Rule::NonOrientableGenusZero, "g", "n-class requires g>=1"});
  }
  detail::check_obstruction(s.obstruction, s.epsilon, s.pairs, s.interval_fibers > 0,
                            Rule::ObstructionWithIntervalFibers, "b must be 0 when iota>0", out);
  detail::check_pairs(s.pairs, out);
  return out;
}

GsfsSymbol normalize_gsfs(const GsfsSymbol& s) {
  Violations fatal = validate_gsfs(s);
  std::erase_if(fatal, [](const Violation& v) { return detail::is_repairable(v.rule); });
  if (!fatal.empty()) throw InvalidSymbol(std::move(fatal));

  GsfsSymbol out = s;
  detail::normalize_pairs(out.obstruction, out.epsilon, out.pairs, out.interval_fibers > 0);
  return out;
}

bool is_normalized(const GsfsSymbol& s) {
  return validate_gsfs(s).empty() && normalize_gsfs(s) == s;
}

GsfsSymbol reverse_orientation(const GsfsSymbol& s) {
  if (!is_normalized(s)) throw InvalidSymbol("reverse_orientation requires a normalized symbol");
  if (s.epsilon != Epsilon::o1 || s.interval_fibers != 0) return s;

  std::int64_t b = 0;
  if (__builtin_sub_overflow(std::int64_t{0}, s.obstruction, &b) ||
      __builtin_sub_overflow(b, static_cast<std::int64_t>(s.pairs.size()), &b)) {
    throw InvalidSymbol("obstruction b overflows the signed 64-bit range");
  }
  GsfsSymbol out = s;
  out.obstruction = b;
  for (auto& p : out.pairs) p.beta = p.alpha - p.beta;
  return normalize_gsfs(out);
}

bool equivalent(const GsfsSymbol& a, const GsfsSymbol& b, OrientationPolicy policy) {
  for (const GsfsSymbol* s : {&a, &b}) {
    if (auto v = validate_gsfs(*s); !v.empty()) throw InvalidSymbol(std::move(v));
  }
  const GsfsSymbol na = normalize_gsfs(a);
  const GsfsSymbol nb = normalize_gsfs(b);
  if (na == nb) return true;
  return policy == OrientationPolicy::UpToOrientation && na == reverse_orientation(nb);
}

}  // namespace gsfs
