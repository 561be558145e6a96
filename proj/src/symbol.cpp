#include "gsfs/symbol.hpp"

#include "gsfs/errors.hpp"

namespace gsfs {

std::string_view to_string(Epsilon e) {
  switch (e) {
    case Epsilon::o1: return "o1";
    case Epsilon::o2: return "o2";
    case Epsilon::n1: return "n1";
    case Epsilon::n2: return "n2";
    case Epsilon::n3: return "n3";
    case Epsilon::n4: return "n4";
  }
  return "?";
}

std::optional<Epsilon> epsilon_from_string(std::string_view tag) {
  for (Epsilon e : kAllEpsilons) {
    if (to_string(e) == tag) return e;
  }
  return std::nullopt;
}

ParseError::ParseError(std::size_t offset, std::string expected)
    : ParseError(offset, expected,
                 "parse error at byte " + std::to_string(offset) +
                     ": expected " + expected) {}

ParseError::ParseError(std::size_t offset, std::string expected,
                       const std::string& what)
    : Error(what), offset_(offset), expected_(std::move(expected)) {}

OverflowError::OverflowError(std::size_t offset)
    : ParseError(offset, "integer within signed 64-bit range",
                 "integer overflow at byte " + std::to_string(offset)) {}

namespace {

std::string join_messages(const Violations& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out.empty() ? "invalid symbol" : out;
}

std::string condition_message(ImageCondition c) {
  switch (c) {
    case ImageCondition::SeBlocksPresent: return "not in image: t!=0";
    case ImageCondition::SfBlocksPresent: return "not in image: s!=0";
    case ImageCondition::UntwistedFixedBlocks: return "not in image: k1!=f";
  }
  return "not in image";
}

}  // namespace

InvalidSymbol::InvalidSymbol(Violations violations)
    : Error(join_messages(violations)), violations_(std::move(violations)) {}

InvalidSymbol::InvalidSymbol(const std::string& what) : Error(what) {}

NotBranched::NotBranched() : Error("not branched: iota=0") {}

NotInImage::NotInImage(ImageCondition condition)
    : Error(condition_message(condition)), condition_(condition) {}

FormatError::FormatError(std::size_t line, const std::string& reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace gsfs
