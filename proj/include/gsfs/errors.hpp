#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "gsfs/symbol.hpp"

namespace gsfs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grammar violation at a byte offset of the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected);
  ParseError(std::size_t offset, std::string expected, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// An integer literal does not fit in a signed 64-bit value.
class OverflowError : public ParseError {
 public:
  explicit OverflowError(std::size_t offset);
};

/// Input symbol fails admissibility; carries every violation found.
class InvalidSymbol : public Error {
 public:
  explicit InvalidSymbol(Violations violations);
  explicit InvalidSymbol(const std::string& what);

  const Violations& violations() const noexcept { return violations_; }

 private:
  Violations violations_;
};

/// The double branched cover is only defined for non-manifolds (iota > 0).
class NotBranched : public Error {
 public:
  NotBranched();
};

enum class ImageCondition : std::uint8_t { SeBlocksPresent, SfBlocksPresent, UntwistedFixedBlocks };

/// A local-action symbol has no generalized Seifert counterpart.
class NotInImage : public Error {
 public:
  explicit NotInImage(ImageCondition condition);

  ImageCondition condition() const noexcept { return condition_; }

 private:
  ImageCondition condition_;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Malformed census file content; `line` is 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gsfs
