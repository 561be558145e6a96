#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string_view>

#include "gsfs/enumerator.hpp"
#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"
#include "gsfs/notation.hpp"

namespace gsfs {

namespace {

constexpr std::string_view kHeaderPrefix = "# gsfs-census v1 ";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::int64_t to_int(std::string_view text, std::size_t line, std::string_view what) {
  std::int64_t value = 0;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw FormatError(line, "malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix,
                              std::size_t line) {
  if (text.substr(0, prefix.size()) != prefix) {
    throw FormatError(line, "expected field '" + std::string(prefix) + "'");
  }
  return text.substr(prefix.size());
}

EnumBounds parse_bounds(std::string_view text) {
  const auto tokens = split(text, ' ');
  if (tokens.size() != 6) throw FormatError(1, "malformed census header");
  EnumBounds b;
  b.max_genus = to_int(strip_prefix(tokens[0], "g<=", 1), 1, "genus bound");
  b.max_interval_fibers = to_int(strip_prefix(tokens[1], "i<=", 1), 1, "iota bound");
  b.max_pairs = to_int(strip_prefix(tokens[2], "n<=", 1), 1, "pair bound");
  b.max_alpha = to_int(strip_prefix(tokens[3], "a<=", 1), 1, "alpha bound");

  std::string_view range = strip_prefix(tokens[4], "b=[", 1);
  if (range.empty() || range.back() != ']') throw FormatError(1, "malformed b range");
  range.remove_suffix(1);
  const auto ends = split(range, ',');
  if (ends.size() != 2) throw FormatError(1, "malformed b range");
  b.b_min = to_int(ends[0], 1, "b range");
  b.b_max = to_int(ends[1], 1, "b range");

  b.epsilons.clear();
  for (std::string_view tag : split(strip_prefix(tokens[5], "eps=", 1), ',')) {
    const auto eps = epsilon_from_string(tag);
    if (!eps) throw FormatError(1, "unknown eps tag '" + std::string(tag) + "'");
    b.epsilons.push_back(*eps);
  }
  try {
    b = checked_bounds(b);
  } catch (const BoundsError& e) {
    throw FormatError(1, e.what());
  }
  if (render_bounds(b) != text) throw FormatError(1, "census header is not canonical");
  return b;
}

GsfsSymbol parse_field_symbol(std::string_view text, std::size_t line) {
  GsfsSymbol s;
  try {
    s = parse_gsfs(text);
  } catch (const ParseError& e) {
    throw FormatError(line, e.what());
  }
  if (render_gsfs(s) != text) throw FormatError(line, "symbol is not a canonical rendering");
  return s;
}

CensusRecord parse_record(std::string_view text, std::size_t line) {
  const auto fields = split(text, '\t');
  if (fields.size() != 3 && fields.size() != 4) {
    throw FormatError(line, "expected 3 or 4 TAB-separated fields");
  }
  CensusRecord r;
  r.symbol = parse_field_symbol(fields[0], line);
  if (!is_normalized(r.symbol)) throw FormatError(line, "symbol is not canonical");
  const std::int64_t sing = to_int(strip_prefix(fields[1], "sing=", line), line, "sing");
  if (sing < 0) throw FormatError(line, "sing must be non-negative");
  r.sing = static_cast<std::uint64_t>(sing);
  const std::string_view manifold = strip_prefix(fields[2], "manifold=", line);
  if (manifold != "true" && manifold != "false") {
    throw FormatError(line, "manifold must be true or false");
  }
  r.manifold = manifold == "true";
  if (fields.size() == 4) {
    r.cover = parse_field_symbol(strip_prefix(fields[3], "cover=", line), line);
  }
  if (r != make_record(r.symbol)) {
    throw FormatError(line, "derived fields disagree with the symbol");
  }
  return r;
}

}  // namespace

std::string render_bounds(const EnumBounds& bounds) {
  std::ostringstream out;
  out << "g<=" << bounds.max_genus << " i<=" << bounds.max_interval_fibers
      << " n<=" << bounds.max_pairs << " a<=" << bounds.max_alpha << " b=["
      << bounds.b_min << ',' << bounds.b_max << "] eps=";
  for (std::size_t i = 0; i < bounds.epsilons.size(); ++i) {
    if (i != 0) out << ',';
    out << to_string(bounds.epsilons[i]);
  }
  return out.str();
}

void write_census(const Census& census, std::ostream& out) {
  std::vector<std::pair<std::string, const CensusRecord*>> lines;
  lines.reserve(census.records.size());
  for (const auto& r : census.records) lines.emplace_back(render_gsfs(r.symbol), &r);
  std::stable_sort(lines.begin(), lines.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  out << kHeaderPrefix << render_bounds(census.bounds) << '\n';
  for (const auto& [key, r] : lines) {
    out << key << "\tsing=" << r->sing << "\tmanifold=" << (r->manifold ? "true" : "false");
    if (r->cover) out << "\tcover=" << render_gsfs(*r->cover);
    out << '\n';
  }
}

void write_census(const Census& census, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_census(census, out);
  out.flush();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

Census read_census(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error("read failed");
  if (text.empty()) throw FormatError(1, "missing census header");
  if (text.back() != '\n') {
    throw FormatError(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1,
                      "file must end with LF");
  }
  auto lines = split(std::string_view(text).substr(0, text.size() - 1), '\n');

  Census census;
  if (lines[0].substr(0, kHeaderPrefix.size()) != kHeaderPrefix) {
    throw FormatError(1, "missing '# gsfs-census v1' header");
  }
  census.bounds = parse_bounds(lines[0].substr(kHeaderPrefix.size()));

  std::string previous;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    CensusRecord r = parse_record(lines[i], line);
    std::string key = render_gsfs(r.symbol);
    if (i > 1 && !(previous < key)) throw FormatError(line, "records out of order or duplicated");
    previous = std::move(key);
    census.records.push_back(std::move(r));
  }
  return census;
}

Census read_census(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return read_census(in);
}

}  // namespace gsfs
