#pragma once

// Shared pieces of the element text syntax.

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "threept/rational.hpp"

namespace threept {

class RingElem;

/// Malformed element text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace text {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws();
  bool done() const { return pos_ >= s_.size(); }
  char peek();
  bool accept(char c);
  void expect(char c);
  bool accept_word(std::string_view w);
  bool at_digit();
  long long integer();  // optional sign
  Rational rational_literal();  // unsigned "p" or "p/q"
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Emits " + c*mono" / " - c*mono" (or the leading form when `first`).
void write_term(std::ostream& os, const Rational& c, const std::string& mono, bool first);

/// sum := ['+'|'-'] product (('+'|'-') product)*
RingElem parse_ring_sum(Cursor& cur);

}  // namespace text
}  // namespace threept
