#include "gsfs/notation.hpp"

#include <random>
#include <set>
#include <string>

#include "gsfs/enumerator.hpp"
#include "gsfs/errors.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gsfs {
namespace {

GsfsSymbol sym(std::int64_t b, Epsilon e, std::int64_t g, std::int64_t i,
               std::vector<SeifertPair> pairs = {}) {
  return GsfsSymbol{b, e, g, i, std::move(pairs)};
}

std::size_t parse_error_offset(std::string_view text) {
  try {
    parse_gsfs(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for " << text;
  return 0;
}

TEST(ParseGsfs, TranscribesFields) {
  EXPECT_EQ(parse_gsfs("GSFS(b=0;eps=o1;g=1;i=2;(3,1),(5,2))"),
            sym(0, Epsilon::o1, 1, 2, {{3, 1}, {5, 2}}));
}

TEST(ParseGsfs, EmptyPairList) {
  EXPECT_EQ(parse_gsfs("GSFS(b=0;eps=o1;g=0;i=0)"), sym(0, Epsilon::o1, 0, 0));
}

TEST(ParseGsfs, RejectsUnknownEpsilonAtItsToken) {
  EXPECT_EQ(parse_error_offset("GSFS(b=0;eps=o7;g=0;i=0)"), 13u);
}

TEST(ParseGsfs, KeepsInputOrderAndUnnormalizedValues) {
  EXPECT_EQ(parse_gsfs("GSFS(b=-7;eps=n3;g=4;i=0;(5,-12),(1,3),(2,1))"),
            sym(-7, Epsilon::n3, 4, 0, {{5, -12}, {1, 3}, {2, 1}}));
}

TEST(ParseGsfs, AcceptsWhitespaceBetweenTokens) {
  EXPECT_EQ(parse_gsfs("  GSFS( b= -2 ;\teps=n1 ; g=3;i=1 ; ( 3 , 1 ) ,(5,2) )\n"),
            sym(-2, Epsilon::n1, 3, 1, {{3, 1}, {5, 2}}));
}

TEST(ParseGsfs, ReportsOffsets) {
  EXPECT_EQ(parse_error_offset(""), 0u);
  EXPECT_EQ(parse_error_offset("GSFS(b=x;eps=o1;g=0;i=0)"), 7u);
  EXPECT_EQ(parse_error_offset("GSFS(b=0;eps=o1;g=-1;i=0)"), 18u);
  EXPECT_EQ(parse_error_offset("GSFS(b=0;eps=o1;g=0;i=0;)"), 24u);
  EXPECT_EQ(parse_error_offset("GSFS(b=0;eps=o1;g=0;i=0)x"), 24u);
  EXPECT_EQ(parse_error_offset("GSFS(b=0;eps=o1;g=0;i=0;(3,1)"), 29u);
}

TEST(ParseGsfs, SixtyFourBitRange) {
  EXPECT_EQ(parse_gsfs("GSFS(b=-9223372036854775808;eps=o1;g=9223372036854775807;i=0)").obstruction,
            std::numeric_limits<std::int64_t>::min());
  EXPECT_THROW(parse_gsfs("GSFS(b=9223372036854775808;eps=o1;g=0;i=0)"), OverflowError);
  EXPECT_THROW(parse_gsfs("GSFS(b=-9223372036854775809;eps=o1;g=0;i=0)"), OverflowError);
  try {
    parse_gsfs("GSFS(b=0;eps=o1;g=0;i=0;(99999999999999999999,1))");
    FAIL();
  } catch (const OverflowError& e) {
    EXPECT_EQ(e.offset(), 25u);
  }
}

TEST(RenderGsfs, CanonicalText) {
  EXPECT_EQ(render_gsfs(sym(0, Epsilon::o1, 1, 2, {{3, 1}, {5, 2}})),
            "GSFS(b=0;eps=o1;g=1;i=2;(3,1),(5,2))");
  EXPECT_EQ(render_gsfs(sym(-2, Epsilon::o1, 3, 0)), "GSFS(b=-2;eps=o1;g=3;i=0)");
}

TEST(ParseLocal, TranscribesFields) {
  LocalActionSymbol expected;
  expected.genus = 1;
  expected.fixed_blocks = 2;
  expected.twisted_fixed_blocks = 2;
  EXPECT_EQ(parse_local("LSA(b=0;eps=o1;g=1;f=2/2;t=0/0;s=0/0;;r=[];q=[])"), expected);
}

TEST(ParseLocal, SimpleSfBlock) {
  const auto s = parse_local("LSA(b=0;eps=o1;g=0;f=0/0;t=0/0;s=1/0;;r=[2];q=[])");
  EXPECT_EQ(s.sf_blocks, 1);
  EXPECT_EQ(s.twisted_sf_blocks, 0);
  EXPECT_EQ(s.simple_sf_singular, std::vector<std::int64_t>{2});
}

TEST(ParseLocal, DoesNotValidate) {
  const auto s = parse_local("LSA(b=0;eps=o1;g=0;f=0/1;t=0/0;s=0/0;;r=[];q=[])");
  EXPECT_EQ(s.fixed_blocks, 0);
  EXPECT_EQ(s.twisted_fixed_blocks, 1);
}

TEST(ParseLocal, PairsAndLists) {
  const std::string text = "LSA(b=3;eps=n2;g=2;f=0/0;t=1/1;s=3/1;(2,1),(7,-3);r=[4,0];q=[2])";
  const auto s = parse_local(text);
  EXPECT_EQ(s.pairs, (std::vector<SeifertPair>{{2, 1}, {7, -3}}));
  EXPECT_EQ(s.twisted_sf_singular, std::vector<std::int64_t>{2});
  EXPECT_EQ(render_local(s), text);
  EXPECT_THROW(parse_local("LSA(b=0;eps=o1;g=0;f=0/0;t=0/0;s=0/0;r=[];q=[])"), ParseError);
  EXPECT_THROW(parse_local("LSA(b=0;eps=o1;g=0;f=0/0;t=0/0;s=0/0;;r=[,];q=[])"), ParseError);
}

TEST(NotationProperty, RoundTripOnFuzzedValues) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const GsfsSymbol s = testing::fuzz_gsfs(rng);
    ASSERT_EQ(parse_gsfs(render_gsfs(s)), s) << render_gsfs(s);
    const LocalActionSymbol l = testing::fuzz_local(rng);
    ASSERT_EQ(parse_local(render_local(l)), l) << render_local(l);
  }
}

TEST(NotationProperty, CanonicalRenderingsAreDistinctAndWhitespaceFree) {
  std::set<std::string> seen;
  for (const auto& s : enumerate(testing::reference_bounds())) {
    const std::string text = render_gsfs(s);
    EXPECT_EQ(text.find_first_of(" \t\r\n"), std::string::npos);
    EXPECT_TRUE(seen.insert(text).second) << text;
    EXPECT_EQ(render_gsfs(parse_gsfs(text)), text);
  }
}

TEST(NotationProperty, ArbitraryBytesParseOrThrowParseError) {
  std::mt19937_64 rng(11);
  const std::string alphabet = "GSFLA()=;,/[]-0123456789beipsgtfqrno ";
  for (int i = 0; i < 50000; ++i) {
    std::string text(std::uniform_int_distribution<int>(0, 48)(rng), '\0');
    for (char& c : text) {
      c = (i % 2 == 0) ? static_cast<char>(rng())
                       : alphabet[rng() % alphabet.size()];
    }
    try {
      parse_gsfs(text);
    } catch (const ParseError&) {
    }
    try {
      parse_local(text);
    } catch (const ParseError&) {
    }
  }
}

}  // namespace
}  // namespace gsfs
