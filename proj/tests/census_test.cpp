#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsfs/enumerator.hpp"
#include "gsfs/errors.hpp"
#include "gsfs/notation.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gsfs {
namespace {

std::string written(const Census& c) {
  std::ostringstream out;
  write_census(c, out);
  return out.str();
}

Census from_text(const std::string& text) {
  std::istringstream in(text);
  return read_census(in);
}

std::size_t format_error_line(const std::string& text) {
  try {
    from_text(text);
  } catch (const FormatError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no FormatError for:\n" << text;
  return 0;
}

const std::string kHeader = "# gsfs-census v1 g<=1 i<=1 n<=1 a<=3 b=[-1,1] eps=o1,n2\n";

Census small_census() {
  EnumBounds b{1, 1, 1, 3, -1, 1, {Epsilon::o1, Epsilon::n2}};
  return build_census(b);
}

TEST(WriteCensus, EmptyRecordListIsHeaderOnly) {
  Census c{EnumBounds{1, 1, 1, 3, -1, 1, {Epsilon::n2, Epsilon::o1}}, {}};
  c.bounds = checked_bounds(c.bounds);
  EXPECT_EQ(written(c), kHeader);
  EXPECT_EQ(from_text(kHeader), c);
}

TEST(WriteCensus, OneBranchedRecord) {
  Census c{checked_bounds(EnumBounds{1, 1, 1, 3, -1, 1, {Epsilon::o1, Epsilon::n2}}), {}};
  c.records.push_back(make_record(parse_gsfs("GSFS(b=0;eps=o1;g=1;i=1;(3,1))")));
  EXPECT_EQ(written(c), kHeader +
                            "GSFS(b=0;eps=o1;g=1;i=1;(3,1))\tsing=2\tmanifold=false\t"
                            "cover=GSFS(b=0;eps=o1;g=2;i=0;(3,1),(3,1))\n");
}

TEST(WriteCensus, ManifoldRecordHasNoCover) {
  Census c{checked_bounds(EnumBounds{1, 1, 1, 3, -1, 1, {Epsilon::o1, Epsilon::n2}}), {}};
  c.records.push_back(make_record(parse_gsfs("GSFS(b=-1;eps=n2;g=1;i=0;(2,1))")));
  EXPECT_EQ(written(c), kHeader + "GSFS(b=-1;eps=n2;g=1;i=0;(2,1))\tsing=0\tmanifold=true\n");
}

TEST(WriteCensus, SortsRecordsByRendering) {
  Census c = small_census();
  Census shuffled = c;
  std::reverse(shuffled.records.begin(), shuffled.records.end());
  EXPECT_EQ(written(shuffled), written(c));
}

TEST(Census, RoundTripAndDeterminism) {
  const Census c = build_census(testing::reference_bounds());
  const std::string text = written(c);
  EXPECT_EQ(written(build_census(testing::reference_bounds())), text);
  EXPECT_EQ(from_text(text), c);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find(" \n"), std::string::npos);
  EXPECT_EQ(text.find("\t\n"), std::string::npos);
}

TEST(Census, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "gsfs_census_test.tsv";
  const Census c = small_census();
  write_census(c, path);
  EXPECT_EQ(read_census(path), c);
  std::filesystem::remove(path);
  EXPECT_THROW(read_census(path), Error);
}

TEST(ReadCensus, FormatErrorsCarryLineNumbers) {
  const std::string good = "GSFS(b=0;eps=o1;g=0;i=0)\tsing=0\tmanifold=true\n";
  EXPECT_EQ(format_error_line(""), 1u);
  EXPECT_EQ(format_error_line("# gsfs-census v2 g<=1 i<=1 n<=1 a<=3 b=[-1,1] eps=o1,n2\n"), 1u);
  EXPECT_EQ(format_error_line("# gsfs-census v1 g<=1 i<=1 n<=1 a<=3 b=[-1,1] eps=n2,o1\n"), 1u);
  EXPECT_EQ(format_error_line(kHeader + good + "GSFS(b=0;eps=o1;g=0;i=0)"), 3u);
  EXPECT_EQ(format_error_line(kHeader + good + "GSFS(b=0;eps=o1;g=0;i=0)\tsing=2\tmanifold=true\n"), 3u);
  EXPECT_EQ(format_error_line(kHeader + good + good), 3u);
  EXPECT_EQ(format_error_line(kHeader + "GSFS(b=0;eps=o1;g=0;i=0;(3,4))\tsing=0\tmanifold=true\n"), 2u);
  EXPECT_EQ(format_error_line(kHeader + "GSFS(b=0;eps=o1;g=0;i=1)\tsing=2\tmanifold=false\n"), 2u);
  EXPECT_EQ(format_error_line(kHeader + "GSFS(b=0;eps=o1;g=0;i=0)\tsing=0\tmanifold=yes\n"), 2u);
  EXPECT_EQ(format_error_line(kHeader + "GSFS(b=0;eps=o1;g=0;i=0) \tsing=0\tmanifold=true\n"), 2u);
  EXPECT_EQ(format_error_line(kHeader + "\n"), 2u);
  EXPECT_EQ(format_error_line(kHeader + good + "GSFS(b=0;eps=o1;g=0;i=1)\tsing=2\tmanifold=false\t"
                                                "cover=GSFS(b=0;eps=o1;g=1;i=0)\n"), 3u);
}

}  // namespace
}  // namespace gsfs
