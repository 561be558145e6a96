#include "gsfs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "gsfs/branched_cover.hpp"
#include "gsfs/enumerator.hpp"
#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"
#include "gsfs/local_action.hpp"
#include "gsfs/notation.hpp"

namespace gsfs::cli {

namespace {

constexpr std::string_view kUsageText =
    "usage: gsfs [--quiet] <validate|normalize|sing|cover> <symbol|--file PATH|->"
    " | equiv <a> <b> [--up-to-orientation]"
    " | convert --to-local|--from-local <symbol>"
    " | census --max-g G --max-i I --max-pairs N --max-alpha A --b LO:HI [--eps LIST] --out FILE";

struct UsageError {
  std::string message;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  std::string location;  // "line N: " prefix in batch mode

  void print(const std::string& text) {
    if (!quiet) out << text << '\n';
  }
  void diagnose(const std::string& text) { err << location << text << '\n'; }
};

bool is_local_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text.substr(first, 4) == "LSA(";
}

void report(Io& io, const Violations& violations) {
  for (const auto& v : violations) io.diagnose(v.message);
}

// Runs `body`, mapping library errors onto exit statuses.
int guarded(Io& io, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    io.diagnose(e.what());
    return kUsage;
  } catch (const InvalidSymbol& e) {
    if (e.violations().empty()) {
      io.diagnose(e.what());
    } else {
      report(io, e.violations());
    }
    return kNegative;
  } catch (const NotBranched& e) {
    io.diagnose(e.what());
    return kNegative;
  } catch (const NotInImage& e) {
    io.diagnose(e.what());
    return kNegative;
  } catch (const Error& e) {
    io.diagnose(e.what());
    return kNegative;
  }
}

int cmd_validate(Io& io, const std::string& text) {
  const Violations v =
      is_local_text(text) ? validate_local(parse_local(text)) : validate_gsfs(parse_gsfs(text));
  report(io, v);
  return v.empty() ? kSuccess : kNegative;
}

int cmd_normalize(Io& io, const std::string& text) {
  io.print(is_local_text(text) ? render_local(normalize_local(parse_local(text)))
                               : render_gsfs(normalize_gsfs(parse_gsfs(text))));
  return kSuccess;
}

int cmd_sing(Io& io, const std::string& text) {
  if (is_local_text(text)) {
    const LocalActionSymbol s = parse_local(text);
    if (auto v = validate_local(s); !v.empty()) throw InvalidSymbol(std::move(v));
    io.print(std::to_string(local_sing_count(s)));
  } else {
    const GsfsSymbol s = parse_gsfs(text);
    if (auto v = validate_gsfs(s); !v.empty()) throw InvalidSymbol(std::move(v));
    io.print(std::to_string(sing_count(s)));
  }
  return kSuccess;
}

int cmd_cover(Io& io, const std::string& text) {
  io.print(render_gsfs(double_cover(parse_gsfs(text))));
  return kSuccess;
}

int cmd_equiv(Io& io, const std::string& a, const std::string& b, OrientationPolicy policy) {
  bool same = false;
  if (is_local_text(a) != is_local_text(b)) {
    io.diagnose("cannot compare a GSFS symbol with an LSA symbol");
    return kUsage;
  }
  if (is_local_text(a)) {
    same = equivalent_local(parse_local(a), parse_local(b));
  } else {
    same = equivalent(parse_gsfs(a), parse_gsfs(b), policy);
  }
  io.print(same ? "equivalent" : "not-equivalent");
  return same ? kSuccess : kNegative;
}

std::string trim_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Batch input: one record per line; blank lines and '#' comments skipped.
// Only the first `fields` TAB-separated fields are used, so census files can
// be fed back in directly.
int for_each_line(Io& io, const std::string& source, std::size_t fields,
                  const std::function<int(const std::vector<std::string>&)>& handle) {
  std::ifstream file;
  std::istream* stream = &io.in;
  if (source != "-") {
    file.open(source, std::ios::binary);
    if (!file) {
      io.diagnose("cannot open '" + source + "'");
      return kNegative;
    }
    stream = &file;
  }

  int worst = kSuccess;
  std::string line;
  for (std::size_t number = 1; std::getline(*stream, line); ++number) {
    line = trim_line(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> parts;
    std::istringstream split(line);
    for (std::string part; parts.size() < fields && std::getline(split, part, '\t');) {
      parts.push_back(part);
    }
    io.location = "line " + std::to_string(number) + ": ";
    if (parts.size() < fields) {
      io.diagnose("expected " + std::to_string(fields) + " TAB-separated symbols");
      worst = std::max(worst, static_cast<int>(kUsage));
      continue;
    }
    worst = std::max(worst, guarded(io, [&] { return handle(parts); }));
  }
  io.location.clear();
  return worst;
}

struct Options {
  std::vector<std::string> positional;
  std::optional<std::string> file;
  std::vector<std::pair<std::string, std::string>> valued;
  std::vector<std::string> flags;

  bool has_flag(std::string_view name) const {
    return std::find(flags.begin(), flags.end(), name) != flags.end();
  }
  std::optional<std::string> value(std::string_view name) const {
    for (const auto& [key, v] : valued) {
      if (key == name) return v;
    }
    return std::nullopt;
  }
};

Options parse_options(const std::vector<std::string>& args, std::size_t begin,
                      const std::vector<std::string_view>& valued_names,
                      const std::vector<std::string_view>& flag_names) {
  Options opts;
  for (std::size_t i = begin; i < args.size(); ++i) {
    const std::string& arg = args[i];
    const auto known = [&arg](const std::vector<std::string_view>& names) {
      return std::find(names.begin(), names.end(), arg) != names.end();
    };
    if (arg == "--file" || known(valued_names)) {
      if (i + 1 >= args.size()) throw UsageError{arg + " requires a value"};
      if (arg == "--file") {
        opts.file = args[++i];
      } else {
        opts.valued.emplace_back(arg, args[++i]);
      }
    } else if (known(flag_names)) {
      opts.flags.push_back(arg);
    } else if (arg == "-") {
      opts.file = "-";
    } else if (arg.size() > 2 && arg.starts_with("--")) {
      throw UsageError{"unknown option " + arg};
    } else {
      opts.positional.push_back(arg);
    }
  }
  return opts;
}

int single_symbol(Io& io, const Options& opts, const std::function<int(Io&, const std::string&)>& cmd) {
  if (opts.file && opts.positional.empty()) {
    return for_each_line(io, *opts.file, 1,
                         [&](const std::vector<std::string>& p) { return cmd(io, p[0]); });
  }
  if (opts.file || opts.positional.size() != 1) throw UsageError{"expected exactly one symbol"};
  return guarded(io, [&] { return cmd(io, opts.positional[0]); });
}

std::int64_t to_int(const std::string& text, std::string_view flag) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError{std::string(flag) + " expects an integer, got '" + text + "'"};
  }
  return value;
}

int cmd_census(Io& io, const Options& opts) {
  if (!opts.positional.empty() || opts.file) throw UsageError{"census takes only flags"};
  const auto required = [&opts](std::string_view name) {
    auto v = opts.value(name);
    if (!v) throw UsageError{"census requires " + std::string(name)};
    return *v;
  };
  EnumBounds bounds;
  bounds.max_genus = to_int(required("--max-g"), "--max-g");
  bounds.max_interval_fibers = to_int(required("--max-i"), "--max-i");
  bounds.max_pairs = to_int(required("--max-pairs"), "--max-pairs");
  bounds.max_alpha = to_int(required("--max-alpha"), "--max-alpha");
  const std::string range = required("--b");
  const auto colon = range.find(':', 1);
  if (colon == std::string::npos) throw UsageError{"--b expects LO:HI"};
  bounds.b_min = to_int(range.substr(0, colon), "--b");
  bounds.b_max = to_int(range.substr(colon + 1), "--b");
  if (auto eps = opts.value("--eps")) {
    bounds.epsilons.clear();
    std::istringstream tags(*eps);
    for (std::string tag; std::getline(tags, tag, ',');) {
      const auto e = epsilon_from_string(tag);
      if (!e) throw UsageError{"unknown eps tag '" + tag + "'"};
      bounds.epsilons.push_back(*e);
    }
  } else {
    bounds.epsilons.assign(kAllEpsilons.begin(), kAllEpsilons.end());
  }
  const std::string path = required("--out");

  Census census;
  try {
    census = build_census(bounds);
  } catch (const BoundsError& e) {
    throw UsageError{e.what()};
  }
  try {
    write_census(census, std::filesystem::path(path));
  } catch (const Error& e) {
    io.diagnose(e.what());
    return kNegative;
  }
  io.print(std::to_string(census.records.size()));
  return kSuccess;
}

int dispatch(Io& io, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError{"missing command"};
  const std::string& command = args[0];

  if (command == "validate") {
    return single_symbol(io, parse_options(args, 1, {}, {}), cmd_validate);
  }
  if (command == "normalize") {
    return single_symbol(io, parse_options(args, 1, {}, {}), cmd_normalize);
  }
  if (command == "sing") return single_symbol(io, parse_options(args, 1, {}, {}), cmd_sing);
  if (command == "cover") return single_symbol(io, parse_options(args, 1, {}, {}), cmd_cover);

  if (command == "equiv") {
    const Options opts = parse_options(args, 1, {}, {"--up-to-orientation"});
    const OrientationPolicy policy = opts.has_flag("--up-to-orientation")
                                         ? OrientationPolicy::UpToOrientation
                                         : OrientationPolicy::Strict;
    if (opts.file && opts.positional.empty()) {
      return for_each_line(io, *opts.file, 2, [&](const std::vector<std::string>& p) {
        return cmd_equiv(io, p[0], p[1], policy);
      });
    }
    if (opts.file || opts.positional.size() != 2) throw UsageError{"equiv expects two symbols"};
    return guarded(io, [&] { return cmd_equiv(io, opts.positional[0], opts.positional[1], policy); });
  }

  if (command == "convert") {
    const Options opts = parse_options(args, 1, {}, {"--to-local", "--from-local"});
    const bool to_local = opts.has_flag("--to-local");
    if (to_local == opts.has_flag("--from-local")) {
      throw UsageError{"convert needs exactly one of --to-local, --from-local"};
    }
    return single_symbol(io, opts, [to_local](Io& io, const std::string& text) {
      io.print(to_local ? render_local(to_local_action(parse_gsfs(text)))
                        : render_gsfs(from_local_action(parse_local(text))));
      return static_cast<int>(kSuccess);
    });
  }

  if (command == "census") {
    return cmd_census(io, parse_options(args, 1,
                                        {"--max-g", "--max-i", "--max-pairs", "--max-alpha",
                                         "--b", "--eps", "--out"},
                                        {}));
  }
  throw UsageError{"unknown command '" + command + "'"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err, false, {}};
  std::vector<std::string> rest;
  for (const auto& a : args) {
    if (a == "--quiet" || a == "-q") {
      io.quiet = true;
    } else {
      rest.push_back(a);
    }
  }
  try {
    return dispatch(io, rest);
  } catch (const UsageError& e) {
    err << "gsfs: " << e.message << '\n' << kUsageText << '\n';
    return kUsage;
  }
}

}  // namespace gsfs::cli
