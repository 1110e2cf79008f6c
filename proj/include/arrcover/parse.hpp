// Text format for arrangements (.arr):
//   '#' starts a comment to end of line; blank lines are skipped.
//   Affine file: each line holds three field elements  a b c  for a*x+b*y=c.
//   Central file: a header line `central`, then rows  a b c  for a*x+b*y+c*z=0.
// Field elements are expressions over integers with + - * / ( ) and the token
// s5 for sqrt(5), e.g.  (1+1*s5)/4  or  -2/3. No whitespace inside a field.
#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "arrcover/arrangement.hpp"
#include "arrcover/field_element.hpp"

namespace arrcover {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                           ": " + msg),
        line(l),
        col(c) {}
};

struct CentralArrangement {
  std::vector<std::array<FieldElement, 3>> planes;  // a*x + b*y + c*z = 0
};

namespace detail {

class FieldParser {
 public:
  FieldParser(std::string_view s, int line, int col0) : s_(s), line_(line), col0_(col0) {}

  FieldElement parse() {
    FieldElement v = expr();
    if (pos_ != s_.size()) fail("trailing characters in field element");
    return v;
  }

 private:
  FieldElement expr() {
    FieldElement v = term();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      char op = s_[pos_++];
      FieldElement t = term();
      v = (op == '+') ? v + t : v - t;
    }
    return v;
  }
  FieldElement term() {
    FieldElement v = unary();
    while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
      char op = s_[pos_++];
      FieldElement t = unary();
      if (op == '*') {
        v = v * t;
      } else {
        if (t.is_zero()) fail("division by zero");
        v = v / t;
      }
    }
    return v;
  }
  FieldElement unary() {
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    return atom();
  }
  FieldElement atom() {
    if (pos_ >= s_.size()) fail("unexpected end of field element");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 's') {
      if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '5') {
        pos_ += 2;
        return FieldElement::sqrt5();
      }
      fail("unknown token (did you mean s5?)");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer n(std::string(s_.substr(start, pos_ - start)), 10);
      return FieldElement(Rational(n));
    }
    fail(std::string("unexpected character '") + c + "'");
    return FieldElement();  // unreachable
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_), msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_, col0_;
};

struct RawFile {
  bool central = false;
  std::vector<std::array<FieldElement, 3>> rows;
};

inline RawFile parse_arr_text(std::string_view text) {
  RawFile out;
  int lineno = 0;
  std::size_t pos = 0;
  bool saw_row = false;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    std::size_t hash = raw.find('#');
    std::string_view body = hash == std::string_view::npos ? raw : raw.substr(0, hash);

    // split on whitespace
    std::vector<std::pair<std::string_view, int>> fields;  // text, 1-based column
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      std::size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i > start) fields.push_back({body.substr(start, i - start), static_cast<int>(start) + 1});
    }

    if (!fields.empty()) {
      if (!saw_row && !out.central && fields.size() == 1 && fields[0].first == "central") {
        out.central = true;
      } else {
        if (fields.size() != 3)
          throw ParseError(lineno, fields.size() > 3 ? fields[3].second : 1,
                           "expected three field elements, got " + std::to_string(fields.size()));
        std::array<FieldElement, 3> row;
        for (int k = 0; k < 3; ++k)
          row[k] = FieldParser(fields[k].first, lineno, fields[k].second).parse();
        out.rows.push_back(std::move(row));
        saw_row = true;
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace detail

inline Arrangement parse_arrangement(std::string_view text) {
  detail::RawFile raw = detail::parse_arr_text(text);
  if (raw.central)
    throw std::invalid_argument("central file given where an affine arrangement was expected");
  if (raw.rows.empty()) throw std::invalid_argument("no lines in arrangement file");
  std::vector<Line> lines;
  for (const auto& r : raw.rows) lines.push_back(Line{r[0], r[1], r[2]});
  return Arrangement(std::move(lines));
}

inline CentralArrangement parse_central(std::string_view text) {
  detail::RawFile raw = detail::parse_arr_text(text);
  if (!raw.central)
    throw std::invalid_argument("not a central arrangement file (missing `central` header)");
  if (raw.rows.empty()) throw std::invalid_argument("no planes in central file");
  CentralArrangement ca;
  ca.planes = raw.rows;
  for (std::size_t i = 0; i < ca.planes.size(); ++i) {
    const auto& p = ca.planes[i];
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
      throw std::invalid_argument("plane " + std::to_string(i + 1) + ": zero normal vector");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = ca.planes[j];
      bool prop = (p[0] * q[1] - q[0] * p[1]).is_zero() &&
                  (p[0] * q[2] - q[0] * p[2]).is_zero() &&
                  (p[1] * q[2] - q[1] * p[2]).is_zero();
      if (prop)
        throw std::invalid_argument("duplicate plane: " + std::to_string(j + 1) + " and " +
                                    std::to_string(i + 1));
    }
  }
  return ca;
}

}  // namespace arrcover
