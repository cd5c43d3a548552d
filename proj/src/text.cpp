#include "threept/text.hpp"

#include <cctype>

#include "threept/ring.hpp"

namespace threept::text {

void Cursor::skip_ws() {
  while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
}

char Cursor::peek() {
  skip_ws();
  return done() ? '\0' : s_[pos_];
}

bool Cursor::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void Cursor::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

bool Cursor::accept_word(std::string_view w) {
  skip_ws();
  if (s_.substr(pos_, w.size()) != w) return false;
  pos_ += w.size();
  return true;
}

bool Cursor::at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

long long Cursor::integer() {
  skip_ws();
  const std::size_t start = pos_;
  if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
  const std::size_t digits = pos_;
  while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  if (pos_ == digits) fail("expected an integer");
  try {
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  } catch (const std::out_of_range&) {
    fail("integer out of range");
  }
}

Rational Cursor::rational_literal() {
  skip_ws();
  const std::size_t start = pos_;
  while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  if (pos_ == start) fail("expected a number");
  if (pos_ < s_.size() && s_[pos_] == '/') {
    ++pos_;
    const std::size_t den = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == den) fail("expected a denominator");
  }
  try {
    return Rational::parse(s_.substr(start, pos_ - start));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

void Cursor::fail(const std::string& what) const {
  throw ParseError("parse error at position " + std::to_string(pos_) + " in '" + std::string(s_) + "': " + what);
}

void write_term(std::ostream& os, const Rational& c, const std::string& mono, bool first) {
  const bool neg = c.sign() < 0;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  const Rational mag = neg ? -c : c;
  if (mono.empty()) {
    os << mag;
  } else if (mag.is_one()) {
    os << mono;
  } else {
    os << mag << "*" << mono;
  }
}

namespace {

RingElem parse_factor(Cursor& cur) {
  if (cur.at_digit()) return RingElem(cur.rational_literal());
  if (cur.accept('t')) {
    long long e = 1;
    if (cur.accept('^')) e = cur.integer();
    return RingElem::monomial(static_cast<int>(e), 0);
  }
  if (cur.accept('u')) {
    long long e = 1;
    if (cur.accept('^')) e = cur.integer();
    if (e < 0) cur.fail("u has no inverse in R");
    return RingElem::u().pow(static_cast<unsigned>(e));
  }
  cur.fail("expected a number, 't' or 'u'");
}

RingElem parse_product(Cursor& cur) {
  RingElem r = parse_factor(cur);
  while (cur.accept('*')) r = r * parse_factor(cur);
  return r;
}

}  // namespace

RingElem parse_ring_sum(Cursor& cur) {
  RingElem sum;
  bool neg = false;
  if (cur.accept('-')) {
    neg = true;
  } else {
    cur.accept('+');
  }
  for (;;) {
    RingElem term = parse_product(cur);
    if (neg) term = -term;
    sum += term;
    if (cur.accept('+')) {
      neg = false;
    } else if (cur.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  return sum;
}

}  // namespace threept::text
