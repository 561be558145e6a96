#include "gsfs/local_action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"

namespace gsfs {

namespace {

void check_tuple(const std::vector<std::int64_t>& tuple, const char* field,
                 Violations& out) {
  for (std::int64_t r : tuple) {
    if (r < 0 || r % 2 != 0) {
      out.push_back({Rule::OddSingularCount, field,
                     std::string(field) + " entries must be non-negative and even, got " +
                         std::to_string(r)});
    }
  }
}

}  // namespace

Violations validate_local(const LocalActionSymbol& s) {
  Violations out;
  const std::pair<std::int64_t, const char*> counts[] = {
      {s.genus, "g"},
      {s.fixed_blocks, "f"},
      {s.twisted_fixed_blocks, "k1"},
      {s.se_blocks, "t"},
      {s.twisted_se_blocks, "k2"},
      {s.sf_blocks, "s"},
      {s.twisted_sf_blocks, "k3"},
  };
  for (const auto& [value, name] : counts) {
    if (value < 0) {
      out.push_back({Rule::NegativeCount, name, std::string(name) + " must be non-negative"});
    }
  }
  if (!is_orientable_base(s.epsilon) && s.genus < 1) {
    out.push_back({Rule::NonOrientableGenusZero, "g", "n-class requires g>=1"});
  }
  if (s.twisted_fixed_blocks > s.fixed_blocks) {
    out.push_back({Rule::TwistedFixedExceedsFixed, "k1", "k1 must be <= f"});
  }
  if (s.twisted_se_blocks > s.se_blocks) {
    out.push_back({Rule::TwistedSeExceedsSe, "k2", "k2 must be <= t"});
  }
  if (s.twisted_sf_blocks > s.sf_blocks) {
    out.push_back({Rule::TwistedSfExceedsSf, "k3", "k3 must be <= s"});
  } else if (static_cast<std::uint64_t>(s.sf_blocks - s.twisted_sf_blocks) !=
             s.simple_sf_singular.size()) {
    out.push_back({Rule::SimpleSfTupleLength, "r", "r tuple length must equal s-k3"});
  }
  if (s.twisted_sf_blocks >= 0 &&
      static_cast<std::uint64_t>(s.twisted_sf_blocks) != s.twisted_sf_singular.size()) {
    out.push_back({Rule::TwistedSfTupleLength, "q", "q tuple length must equal k3"});
  }
  check_tuple(s.simple_sf_singular, "r", out);
  check_tuple(s.twisted_sf_singular, "q", out);
  const bool forced = s.fixed_blocks > 0 || s.se_blocks > 0;
  detail::check_obstruction(s.obstruction, s.epsilon, s.pairs, forced,
                            Rule::ObstructionWithFixedBlocks, "b must be 0 when f+t>0", out);
  detail::check_pairs(s.pairs, out);
  return out;
}

LocalActionSymbol normalize_local(const LocalActionSymbol& s) {
  Violations fatal = validate_local(s);
  std::erase_if(fatal, [](const Violation& v) { return detail::is_repairable(v.rule); });
  if (!fatal.empty()) throw InvalidSymbol(std::move(fatal));

  LocalActionSymbol out = s;
  detail::normalize_pairs(out.obstruction, out.epsilon, out.pairs,
                          out.fixed_blocks > 0 || out.se_blocks > 0);
  std::sort(out.simple_sf_singular.begin(), out.simple_sf_singular.end());
  std::sort(out.twisted_sf_singular.begin(), out.twisted_sf_singular.end());
  return out;
}

bool equivalent_local(const LocalActionSymbol& a, const LocalActionSymbol& b) {
  for (const LocalActionSymbol* s : {&a, &b}) {
    if (auto v = validate_local(*s); !v.empty()) throw InvalidSymbol(std::move(v));
  }
  return normalize_local(a) == normalize_local(b);
}

LocalActionSymbol to_local_action(const GsfsSymbol& s) {
  if (auto v = validate_gsfs(s); !v.empty()) throw InvalidSymbol(std::move(v));
  LocalActionSymbol out;
  out.obstruction = s.obstruction;
  out.epsilon = s.epsilon;
  out.genus = s.genus;
  out.fixed_blocks = s.interval_fibers;
  out.twisted_fixed_blocks = s.interval_fibers;
  out.pairs = s.pairs;
  return out;
}

GsfsSymbol from_local_action(const LocalActionSymbol& s) {
  if (s.se_blocks != 0) throw NotInImage(ImageCondition::SeBlocksPresent);
  if (s.sf_blocks != 0) throw NotInImage(ImageCondition::SfBlocksPresent);
  if (s.twisted_fixed_blocks != s.fixed_blocks) {
    throw NotInImage(ImageCondition::UntwistedFixedBlocks);
  }
  if (auto v = validate_local(s); !v.empty()) throw InvalidSymbol(std::move(v));
  return GsfsSymbol{s.obstruction, s.epsilon, s.genus, s.fixed_blocks, s.pairs};
}

std::int64_t local_sing_count(const LocalActionSymbol& s) {
  const auto sum = [](const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  return sum(s.simple_sf_singular) + sum(s.twisted_sf_singular);
}

}  // namespace gsfs
