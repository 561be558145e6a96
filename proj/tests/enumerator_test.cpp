#include "gsfs/enumerator.hpp"

#include <set>
#include <string>

#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"
#include "gsfs/notation.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gsfs {
namespace {

EnumBounds bounds(std::int64_t g, std::int64_t i, std::int64_t n, std::int64_t a,
                  std::int64_t lo, std::int64_t hi, std::vector<Epsilon> eps) {
  return EnumBounds{g, i, n, a, lo, hi, std::move(eps)};
}

std::vector<std::string> texts(const std::vector<GsfsSymbol>& symbols) {
  std::vector<std::string> out;
  for (const auto& s : symbols) out.push_back(render_gsfs(s));
  return out;
}

// Census sizes frozen from the generate-validate-normalize-dedupe oracle
// (testing::oracle_census); never edit by hand.
constexpr std::size_t kSmallProfileCount = 1275;    // g<=1 i<=1 n<=2 a<=5 b=[-2,2] all eps
constexpr std::size_t kReferenceCount = 2627;       // g<=2 i<=2 n<=2 a<=5 b=[-2,2] all eps

TEST(Enumerate, SingleSymbolWhenEverythingPinned) {
  EXPECT_EQ(texts(enumerate(bounds(0, 0, 0, 2, 0, 0, {Epsilon::o1}))),
            std::vector<std::string>{"GSFS(b=0;eps=o1;g=0;i=0)"});
}

TEST(Enumerate, IotaRange) {
  EXPECT_EQ(texts(enumerate(bounds(0, 1, 0, 2, 0, 0, {Epsilon::o1}))),
            (std::vector<std::string>{"GSFS(b=0;eps=o1;g=0;i=0)", "GSFS(b=0;eps=o1;g=0;i=1)"}));
}

TEST(Enumerate, NonOrientableClassesStartAtOneCrosscap) {
  EXPECT_EQ(texts(enumerate(bounds(1, 0, 0, 2, 0, 1, {Epsilon::n1}))),
            (std::vector<std::string>{"GSFS(b=0;eps=n1;g=1;i=0)", "GSFS(b=1;eps=n1;g=1;i=0)"}));
  EXPECT_TRUE(enumerate(bounds(0, 3, 2, 5, -2, 2, {Epsilon::n4})).empty());
}

TEST(Enumerate, FrozenCounts) {
  const auto all = std::vector<Epsilon>(kAllEpsilons.begin(), kAllEpsilons.end());
  EXPECT_EQ(enumerate(bounds(1, 1, 2, 5, -2, 2, all)).size(), kSmallProfileCount);
  EXPECT_EQ(enumerate(testing::reference_bounds()).size(), kReferenceCount);
}

TEST(Enumerate, CanonicalDistinctAndOrdered) {
  const auto symbols = enumerate(testing::reference_bounds());
  const auto rendered = texts(symbols);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    EXPECT_TRUE(validate_gsfs(symbols[i]).empty()) << rendered[i];
    EXPECT_EQ(normalize_gsfs(symbols[i]), symbols[i]) << rendered[i];
    if (i > 0) EXPECT_LT(rendered[i - 1], rendered[i]);
  }
}

TEST(Enumerate, AgreesWithOracle) {
  const auto all = std::vector<Epsilon>(kAllEpsilons.begin(), kAllEpsilons.end());
  for (const auto& b : {bounds(1, 1, 2, 5, -2, 2, all),
                        bounds(3, 0, 1, 7, -3, 3, {Epsilon::o1, Epsilon::n2}),
                        bounds(1, 3, 3, 4, -1, 1, {Epsilon::o2, Epsilon::n1, Epsilon::n3})}) {
    const auto oracle = testing::oracle_census(b);
    ASSERT_LE(oracle.raw_tuples, 100000u);
    const auto listed = enumerate(b);
    EXPECT_EQ(std::set<GsfsSymbol>(listed.begin(), listed.end()), oracle.symbols)
        << render_bounds(b);
  }
}

TEST(Enumerate, BoundsApplyToCanonicalB) {
  for (const auto& s : enumerate(bounds(1, 1, 1, 4, 0, 0, {Epsilon::o1, Epsilon::o2}))) {
    EXPECT_EQ(s.obstruction, 0);
  }
  const auto z2 = enumerate(bounds(1, 0, 0, 2, -3, 3, {Epsilon::o2}));
  EXPECT_EQ(texts(z2), (std::vector<std::string>{"GSFS(b=0;eps=o2;g=0;i=0)",
                                                 "GSFS(b=0;eps=o2;g=1;i=0)",
                                                 "GSFS(b=1;eps=o2;g=0;i=0)",
                                                 "GSFS(b=1;eps=o2;g=1;i=0)"}));
}

TEST(Enumerate, CoversOfYieldedSymbolsAreAdmissible) {
  for (const auto& s : enumerate(testing::reference_bounds())) {
    if (s.interval_fibers == 0) continue;
    EXPECT_TRUE(validate_gsfs(make_record(s).cover.value()).empty());
  }
}

TEST(CheckedBounds, RejectsInvalidBounds) {
  EXPECT_THROW(checked_bounds(bounds(-1, 0, 0, 2, 0, 0, {Epsilon::o1})), BoundsError);
  EXPECT_THROW(checked_bounds(bounds(0, 0, 0, 1, 0, 0, {Epsilon::o1})), BoundsError);
  EXPECT_THROW(checked_bounds(bounds(0, 0, 0, 2, 1, 2, {Epsilon::o1})), BoundsError);
  EXPECT_THROW(checked_bounds(bounds(0, 0, 0, 2, 1, 0, {Epsilon::o1})), BoundsError);
  EXPECT_THROW(checked_bounds(bounds(0, 0, 0, 2, 0, 0, {})), BoundsError);
  EXPECT_THROW(enumerate(bounds(0, 0, -1, 2, 0, 0, {Epsilon::o1})), BoundsError);
  EXPECT_EQ(checked_bounds(bounds(0, 0, 0, 2, 0, 0, {Epsilon::n4, Epsilon::o1, Epsilon::n4})).epsilons,
            (std::vector<Epsilon>{Epsilon::o1, Epsilon::n4}));
}

}  // namespace
}  // namespace gsfs
