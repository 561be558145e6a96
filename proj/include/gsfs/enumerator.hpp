#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gsfs/symbol.hpp"

namespace gsfs {

/// Complexity bounds on canonical symbols. `epsilons` is a set; it is kept
/// in declaration order o1, o2, n1, n2, n3, n4 without duplicates.
struct EnumBounds {
  std::int64_t max_genus = 0;
  std::int64_t max_interval_fibers = 0;
  std::int64_t max_pairs = 0;
  std::int64_t max_alpha = 2;
  std::int64_t b_min = 0;
  std::int64_t b_max = 0;
  std::vector<Epsilon> epsilons{Epsilon::o1};

  friend bool operator==(const EnumBounds&, const EnumBounds&) = default;
};

/// Throws BoundsError unless the bounds are non-negative, max_alpha >= 2,
/// b_min <= 0 <= b_max and the class set is non-empty. Returns the bounds
/// with the class set sorted and deduplicated.
EnumBounds checked_bounds(EnumBounds bounds);

/// Every admissible canonical symbol within bounds, each exactly once, in
/// byte order of canonical renderings. Bounds apply to the canonical form.
std::vector<GsfsSymbol> enumerate(const EnumBounds& bounds);

/// One census line: a canonical symbol and its derived data.
struct CensusRecord {
  GsfsSymbol symbol;
  std::uint64_t sing = 0;
  bool manifold = true;
  std::optional<GsfsSymbol> cover;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

CensusRecord make_record(const GsfsSymbol& canonical);

struct Census {
  EnumBounds bounds;
  std::vector<CensusRecord> records;

  friend bool operator==(const Census&, const Census&) = default;
};

Census build_census(const EnumBounds& bounds);

/// "g<=G i<=I n<=N a<=A b=[lo,hi] eps=o1,o2,..."
std::string render_bounds(const EnumBounds& bounds);

/// Census text format: a "# gsfs-census v1 <bounds>" header, then one
/// TAB-separated line per record sorted by symbol rendering, LF endings.
void write_census(const Census& census, std::ostream& out);
void write_census(const Census& census, const std::filesystem::path& path);

/// Throws FormatError with the 1-based line number on malformed input,
/// including derived fields that disagree with the symbol.
Census read_census(std::istream& in);
Census read_census(const std::filesystem::path& path);

}  // namespace gsfs
