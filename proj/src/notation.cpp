#include "gsfs/notation.hpp"

#include <cstdint>
#include <limits>

#include "gsfs/errors.hpp"

namespace gsfs {

namespace {

constexpr bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void expect(std::string_view literal) {
    skip_space();
    if (text_.substr(pos_, literal.size()) != literal) {
      throw ParseError(pos_, "'" + std::string(literal) + "'");
    }
    pos_ += literal.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::int64_t read_int() { return read_number(true); }
  std::int64_t read_uint() { return read_number(false); }

  Epsilon read_epsilon() {
    skip_space();
    if (auto e = epsilon_from_string(text_.substr(pos_, 2))) {
      pos_ += 2;
      return *e;
    }
    throw ParseError(pos_, "one of o1,o2,n1,n2,n3,n4");
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  // Accumulates towards the sign so the full int64 range round-trips.
  std::int64_t read_number(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    const bool negative = allow_sign && pos_ < text_.size() && text_[pos_] == '-';
    if (negative) ++pos_;
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
      throw ParseError(pos_, allow_sign ? "integer" : "unsigned integer");
    }
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    std::int64_t value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      const int digit = text_[pos_] - '0';
      if (negative) {
        if (value < (kMin + digit) / 10) throw OverflowError(start);
        value = value * 10 - digit;
      } else {
        if (value > (kMax - digit) / 10) throw OverflowError(start);
        value = value * 10 + digit;
      }
      ++pos_;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

SeifertPair read_pair(Cursor& in) {
  SeifertPair p;
  in.expect("(");
  p.alpha = in.read_uint();
  in.expect(",");
  p.beta = in.read_int();
  in.expect(")");
  return p;
}

std::vector<SeifertPair> read_pairs(Cursor& in) {
  std::vector<SeifertPair> pairs{read_pair(in)};
  while (in.accept(',')) pairs.push_back(read_pair(in));
  return pairs;
}

std::vector<std::int64_t> read_list(Cursor& in) {
  std::vector<std::int64_t> out;
  in.expect("[");
  if (in.accept(']')) return out;
  out.push_back(in.read_uint());
  while (in.accept(',')) out.push_back(in.read_uint());
  in.expect("]");
  return out;
}

void write_pairs(std::string& out, const std::vector<SeifertPair>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i != 0) out += ',';
    out += '(';
    out += std::to_string(pairs[i].alpha);
    out += ',';
    out += std::to_string(pairs[i].beta);
    out += ')';
  }
}

void write_list(std::string& out, const std::vector<std::int64_t>& list) {
  out += '[';
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(list[i]);
  }
  out += ']';
}

void write_block(std::string& out, const char* key, std::int64_t count,
                 std::int64_t twisted) {
  out += key;
  out += std::to_string(count);
  out += '/';
  out += std::to_string(twisted);
  out += ';';
}

}  // namespace

GsfsSymbol parse_gsfs(std::string_view text) {
  Cursor in(text);
  GsfsSymbol s;
  in.expect("GSFS(");
  in.expect("b=");
  s.obstruction = in.read_int();
  in.expect(";");
  in.expect("eps=");
  s.epsilon = in.read_epsilon();
  in.expect(";");
  in.expect("g=");
  s.genus = in.read_uint();
  in.expect(";");
  in.expect("i=");
  s.interval_fibers = in.read_uint();
  if (in.accept(';')) s.pairs = read_pairs(in);
  in.expect(")");
  in.expect_end();
  return s;
}

std::string render_gsfs(const GsfsSymbol& s) {
  std::string out = "GSFS(b=";
  out += std::to_string(s.obstruction);
  out += ";eps=";
  out += to_string(s.epsilon);
  out += ";g=";
  out += std::to_string(s.genus);
  out += ";i=";
  out += std::to_string(s.interval_fibers);
  if (!s.pairs.empty()) {
    out += ';';
    write_pairs(out, s.pairs);
  }
  out += ')';
  return out;
}

LocalActionSymbol parse_local(std::string_view text) {
  Cursor in(text);
  LocalActionSymbol s;
  in.expect("LSA(");
  in.expect("b=");
  s.obstruction = in.read_int();
  in.expect(";");
  in.expect("eps=");
  s.epsilon = in.read_epsilon();
  in.expect(";");
  in.expect("g=");
  s.genus = in.read_uint();
  in.expect(";");
  const auto block = [&in](const char* key, std::int64_t& count, std::int64_t& twisted) {
    in.expect(key);
    count = in.read_uint();
    in.expect("/");
    twisted = in.read_uint();
    in.expect(";");
  };
  block("f=", s.fixed_blocks, s.twisted_fixed_blocks);
  block("t=", s.se_blocks, s.twisted_se_blocks);
  block("s=", s.sf_blocks, s.twisted_sf_blocks);
  if (in.peek('(')) s.pairs = read_pairs(in);
  in.expect(";");
  in.expect("r=");
  s.simple_sf_singular = read_list(in);
  in.expect(";");
  in.expect("q=");
  s.twisted_sf_singular = read_list(in);
  in.expect(")");
  in.expect_end();
  return s;
}

std::string render_local(const LocalActionSymbol& s) {
  std::string out = "LSA(b=";
  out += std::to_string(s.obstruction);
  out += ";eps=";
  out += to_string(s.epsilon);
  out += ";g=";
  out += std::to_string(s.genus);
  out += ';';
  write_block(out, "f=", s.fixed_blocks, s.twisted_fixed_blocks);
  write_block(out, "t=", s.se_blocks, s.twisted_se_blocks);
  write_block(out, "s=", s.sf_blocks, s.twisted_sf_blocks);
  write_pairs(out, s.pairs);
  out += ";r=";
  write_list(out, s.simple_sf_singular);
  out += ";q=";
  write_list(out, s.twisted_sf_singular);
  out += ')';
  return out;
}

}  // namespace gsfs
