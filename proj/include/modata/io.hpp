#ifndef MODATA_IO_HPP
#define MODATA_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "modata/matrix.hpp"

namespace modata {

namespace detail {

class EntryParser {
 public:
  EntryParser(std::string s, long disc) : disc_(disc) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  QuadNum parse() {
    if (s_.empty()) fail("empty entry");
    int sign = take_sign();
    if (peek() == 'r') {
      ++pos_;
      return finish(0, sign);
    }
    Rational x = number();
    if (done()) return finish(sign * x, 0);
    if (peek() == '*') {
      ++pos_;
      expect_r();
      return finish(0, sign * x);
    }
    if (peek() != '+' && peek() != '-') fail("unexpected '" + std::string(1, peek()) + "'");
    int sign2 = take_sign();
    if (peek() == 'r') {
      ++pos_;
      return finish(sign * x, sign2);
    }
    Rational y = number();
    if (peek() != '*') fail("expected '*r'");
    ++pos_;
    expect_r();
    return finish(sign * x, sign2 * y);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError("bad entry '" + s_ + "': " + why); }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  int take_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return 1;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  Rational number() {
    Integer n = digits();
    Integer d = 1;
    if (peek() == '/') {
      ++pos_;
      d = digits();
      if (d == 0) fail("zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  void expect_r() {
    if (peek() != 'r') fail("expected 'r'");
    ++pos_;
  }

  QuadNum finish(const Rational& a, const Rational& b) {
    if (!done()) fail("trailing characters");
    if (b != 0 && disc_ == 0) fail("'r' used in a rational table");
    return QuadNum(a, b, disc_);
  }

  std::string s_;
  long disc_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + " '" + s + "'");
  }
}

}  // namespace detail

// Grammar: INT, INT/INT, r, b*r, a+b*r, a-b*r (whitespace ignored).
inline QuadNum parse_entry(const std::string& text, long disc) { return detail::EntryParser(text, disc).parse(); }

inline std::string format_entry(const QuadNum& x) { return x.to_string("r"); }

using TableInput = std::variant<ExactMatrix, DegreeVector>;

inline TableInput parse_input(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      if (!detail::tokens(line).empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw ParseError("empty input");

  auto head = detail::tokens(lines[0]);
  if (head[0] == "degrees:" || head[0].rfind("degrees:", 0) == 0) {
    if (lines.size() != 1) throw ParseError("degree file must be a single line");
    std::string rest = lines[0].substr(lines[0].find(':') + 1);
    std::vector<Rational> k;
    for (const auto& t : detail::tokens(rest)) {
      QuadNum x = parse_entry(t, 0);
      k.push_back(x.rational_part());
    }
    if (k.empty()) throw ParseError("no degrees");
    try {
      return DegreeVector(std::move(k));
    } catch (const ShapeError& e) {
      throw ParseError(e.what());
    }
  }

  long rank = -1, disc = 0;
  std::optional<Role> role;
  for (std::size_t i = 0; i < head.size(); i += 2) {
    if (i + 1 >= head.size()) throw ParseError("header key '" + head[i] + "' has no value");
    const std::string& key = head[i];
    const std::string& val = head[i + 1];
    if (key == "rank") rank = detail::parse_long(val, "rank");
    else if (key == "disc") disc = detail::parse_long(val, "disc");
    else if (key == "role") {
      role = parse_role(val);
      if (!role) throw ParseError("unknown role '" + val + "'");
    } else throw ParseError("unknown header key '" + key + "'");
  }
  if (rank < 1) throw ParseError("missing or invalid rank");
  if (!role) throw ParseError("missing role");
  if (disc != 0) {
    if (disc == 1) throw ParseError("disc 1 is not a quadratic field");
    if (squarefree_part(Integer(disc)) != disc) throw ParseError("disc must be squarefree");
  }
  if (static_cast<long>(lines.size()) != rank + 1)
    throw ParseError("expected " + std::to_string(rank) + " rows, found " + std::to_string(lines.size() - 1));

  Grid g;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto row = detail::tokens(lines[i]);
    if (static_cast<long>(row.size()) != rank)
      throw ParseError("row " + std::to_string(i - 1) + " has " + std::to_string(row.size()) + " entries");
    Row r;
    for (const auto& t : row) r.push_back(parse_entry(t, disc));
    g.push_back(std::move(r));
  }
  try {
    return ExactMatrix(std::move(g), *role, disc);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline ExactMatrix parse_table(const std::string& text) {
  TableInput in = parse_input(text);
  if (!std::holds_alternative<ExactMatrix>(in)) throw ParseError("expected a table, found a degree vector");
  return std::get<ExactMatrix>(in);
}

inline std::string format_table(const ExactMatrix& m) {
  std::string s = "rank " + std::to_string(m.rank());
  if (m.disc() != 0) s += " disc " + std::to_string(m.disc());
  s += " role " + std::string(role_name(m.role())) + "\n";
  for (const auto& row : m.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + format_entry(row[j]);
    s += "\n";
  }
  return s;
}

inline std::string format_degrees(const DegreeVector& k) {
  std::string s = "degrees:";
  for (const auto& x : k.degrees) s += " " + x.get_str();
  return s + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline TableInput read_input(const std::string& path) { return parse_input(read_file(path)); }

}  // namespace modata

#endif
