#include "threept/current.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "threept/text.hpp"

namespace threept {

std::pair<Rational, Sl2Basis> sl2_bracket(Sl2Basis x, Sl2Basis y) {
  using B = Sl2Basis;
  if (x == B::H && y == B::E) return {2, B::E};
  if (x == B::E && y == B::H) return {-2, B::E};
  if (x == B::H && y == B::F) return {-2, B::F};
  if (x == B::F && y == B::H) return {2, B::F};
  if (x == B::E && y == B::F) return {1, B::H};
  if (x == B::F && y == B::E) return {-1, B::H};
  return {0, B::H};
}

Rational sl2_form(Sl2Basis x, Sl2Basis y) {
  using B = Sl2Basis;
  if ((x == B::E && y == B::F) || (x == B::F && y == B::E)) return 1;
  if (x == B::H && y == B::H) return 2;
  return 0;
}

char sl2_name(Sl2Basis b) {
  switch (b) {
    case Sl2Basis::E: return 'e';
    case Sl2Basis::F: return 'f';
    case Sl2Basis::H: return 'h';
  }
  return '?';
}

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::e: return "e";
    case Gen::f: return "f";
    case Gen::h: return "h";
    case Gen::e1: return "e1";
    case Gen::f1: return "f1";
    case Gen::h1: return "h1";
    case Gen::w0: return "w0";
    case Gen::w1: return "w1";
  }
  return "?";
}

Gen parse_gen(std::string_view name) {
  for (Gen g : {Gen::e, Gen::f, Gen::h, Gen::e1, Gen::f1, Gen::h1, Gen::w0, Gen::w1})
    if (gen_name(g) == name) return g;
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

Sl2Basis gen_basis(Gen g) {
  switch (g) {
    case Gen::e:
    case Gen::e1: return Sl2Basis::E;
    case Gen::f:
    case Gen::f1: return Sl2Basis::F;
    case Gen::h:
    case Gen::h1: return Sl2Basis::H;
    default: throw std::invalid_argument("gen_basis: central generator has no sl2 part");
  }
}

int gen_u_exponent(Gen g) { return (g == Gen::e1 || g == Gen::f1 || g == Gen::h1) ? 1 : 0; }

// ---------------------------------------------------------------------------
// CurrentElem

CurrentElem CurrentElem::loop(Sl2Basis x, const RingElem& f) {
  CurrentElem r;
  for (const auto& [key, c] : f.terms()) r.add_term(x, key.first, key.second, c);
  return r;
}

CurrentElem CurrentElem::generator(Gen g, int m) {
  if (g == Gen::w0) return central({1, 0});
  if (g == Gen::w1) return central({0, 1});
  CurrentElem r;
  r.add_term(gen_basis(g), m, gen_u_exponent(g), 1);
  return r;
}

CurrentElem CurrentElem::central(const CentralPair& c) {
  CurrentElem r;
  r.central_ = c;
  return r;
}

RingElem CurrentElem::component(Sl2Basis x) const {
  RingElem f;
  for (const auto& [key, c] : terms_)
    if (std::get<0>(key) == x) f.add_term(std::get<1>(key), std::get<2>(key), c);
  return f;
}

void CurrentElem::add_term(Sl2Basis x, int k, int eps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{x, k, eps}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CurrentElem CurrentElem::operator-() const {
  CurrentElem r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  r.central_ = -central_;
  return r;
}

CurrentElem& CurrentElem::operator+=(const CurrentElem& o) {
  for (const auto& [key, c] : o.terms_) add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
  central_ += o.central_;
  return *this;
}

CurrentElem& CurrentElem::operator-=(const CurrentElem& o) { return *this += -o; }

CurrentElem& CurrentElem::operator*=(const Rational& c) {
  if (c.is_zero()) {
    *this = CurrentElem();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  central_ = c * central_;
  return *this;
}

std::string CurrentElem::loop_str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // e, f, h blocks; inside each, decreasing quasi-degree.
  for (Sl2Basis b : {Sl2Basis::E, Sl2Basis::F, Sl2Basis::H}) {
    const RingElem f = component(b);
    for (const auto& [key, c] : f.terms()) {
      const std::string inner = RingElem::monomial(key.first, key.second).str();
      text::write_term(os, c, std::string(1, sl2_name(b)) + "[" + inner + "]", first);
      first = false;
    }
  }
  return os.str();
}

std::string CurrentElem::str() const {
  std::ostringstream os;
  bool first = terms_.empty();
  if (!terms_.empty()) os << loop_str();
  if (!central_.c0.is_zero()) {
    text::write_term(os, central_.c0, "w0", first);
    first = false;
  }
  if (!central_.c1.is_zero()) {
    text::write_term(os, central_.c1, "w1", first);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

namespace {

CurrentElem parse_current_atom(text::Cursor& cur) {
  if (cur.accept_word("w0")) return CurrentElem::generator(Gen::w0);
  if (cur.accept_word("w1")) return CurrentElem::generator(Gen::w1);
  Sl2Basis b;
  if (cur.accept('e')) {
    b = Sl2Basis::E;
  } else if (cur.accept('f')) {
    b = Sl2Basis::F;
  } else if (cur.accept('h')) {
    b = Sl2Basis::H;
  } else {
    cur.fail("expected e, f, h, e1, f1, h1, w0 or w1");
  }
  // "x1[n]" names x (x) t^n u; "x[f]" carries a ring element.
  if (cur.peek() == '1') {
    cur.accept('1');
    cur.expect('[');
    const long long n = cur.integer();
    cur.expect(']');
    CurrentElem r;
    r.add_term(b, static_cast<int>(n), 1, 1);
    return r;
  }
  cur.expect('[');
  RingElem f = text::parse_ring_sum(cur);
  cur.expect(']');
  return CurrentElem::loop(b, f);
}

}  // namespace

CurrentElem CurrentElem::parse(std::string_view text) {
  text::Cursor cur(text);
  CurrentElem sum;
  bool neg = false;
  if (cur.accept('-')) {
    neg = true;
  } else {
    cur.accept('+');
  }
  for (;;) {
    const std::size_t at = cur.pos();
    if (cur.at_digit()) {
      Rational c = cur.rational_literal();
      if (!cur.accept('*')) {
        cur.reset(at);
        cur.fail("a scalar is not an element of the current algebra");
      }
      CurrentElem t = c * parse_current_atom(cur);
      sum += neg ? -t : t;
    } else {
      CurrentElem t = parse_current_atom(cur);
      sum += neg ? -t : t;
    }
    if (cur.accept('+')) {
      neg = false;
    } else if (cur.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected trailing input");
  return sum;
}

// ---------------------------------------------------------------------------
// Brackets

CurrentElem bracket(const CurrentElem& x, const CurrentElem& y) {
  CurrentElem out;
  CentralPair central;
  for (const auto& [kx, cx] : x.terms()) {
    const auto [bx, k, ex] = kx;
    for (const auto& [ky, cy] : y.terms()) {
      const auto [by, l, ey] = ky;
      const Rational c = cx * cy;
      const auto [sc, bz] = sl2_bracket(bx, by);
      if (!sc.is_zero()) {
        const RingElem fg = basis_product(k, ex, l, ey);
        for (const auto& [key, v] : fg.terms()) out.add_term(bz, key.first, key.second, c * sc * v);
      }
      const Rational form = sl2_form(bx, by);
      if (!form.is_zero())
        central += (c * form) * pairing(RingElem::monomial(k, ex), RingElem::monomial(l, ey));
    }
  }
  return out + CurrentElem::central(central);
}

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

CurrentElem gen(Gen g, int m, const Rational& c = 1) { return c * CurrentElem::generator(g, m); }

CurrentElem w0(const Rational& c) { return CurrentElem::central({c, 0}); }
CurrentElem w1(const Rational& c) { return CurrentElem::central({0, c}); }

// The relations exactly as listed (one order per unordered pair).
std::optional<CurrentElem> listed_relation(Gen x, int m, Gen y, int n) {
  using G = Gen;
  auto is = [&](G a, G b) { return x == a && y == b; };
  if (x == G::w0 || x == G::w1 || y == G::w0 || y == G::w1) return CurrentElem();
  // [x_m, x_n] = [x_m, x1_n] = [x1_m, x1_n] = 0 for x = e, f
  for (G a : {G::e, G::f}) {
    const G a1 = a == G::e ? G::e1 : G::f1;
    if (is(a, a) || is(a, a1) || is(a1, a1)) return CurrentElem();
  }
  if (is(G::h, G::h)) return w0(-2 * m * delta(m, -n));
  if (is(G::h1, G::h1)) return w0(2 * ((n + 1) * delta(m + n, -2) + (4 * n + 2) * delta(m + n, -1)));
  if (is(G::h, G::h1)) return w1(-2 * m * delta(m, -n));
  if (is(G::e, G::f)) return gen(G::h, m + n) + w0(-m * delta(m, -n));
  if (is(G::e, G::f1) || is(G::e1, G::f)) return gen(G::h1, m + n) + w1(-m * delta(m, -n));
  if (is(G::e1, G::f1))
    return gen(G::h, m + n + 2) + gen(G::h, m + n + 1, 4) +
           w0((n + 1) * delta(m + n, -2) + (4 * n + 2) * delta(m + n, -1));
  if (is(G::h, G::e)) return gen(G::e, m + n, 2);
  if (is(G::h, G::e1) || is(G::h1, G::e)) return gen(G::e1, m + n, 2);
  if (is(G::h1, G::e1)) return gen(G::e, m + n + 2, 2) + gen(G::e, m + n + 1, 8);
  if (is(G::h, G::f)) return gen(G::f, m + n, -2);
  if (is(G::h, G::f1) || is(G::h1, G::f)) return gen(G::f1, m + n, -2);
  if (is(G::h1, G::f1)) return gen(G::f, m + n + 2, -2) + gen(G::f, m + n + 1, -8);
  return std::nullopt;
}

}  // namespace

CurrentElem relation_table_rhs(Gen x, int m, Gen y, int n) {
  if (auto r = listed_relation(x, m, y, n)) return *r;
  if (auto r = listed_relation(y, n, x, m)) return -*r;
  throw std::logic_error("relation_table_rhs: no relation for " + gen_name(x) + ", " + gen_name(y));
}

Rational quasi_degree(const CurrentElem& x) {
  if (x.terms().size() != 1 || !x.central_part().is_zero())
    throw std::invalid_argument("quasi_degree: argument must be a single loop term");
  const auto& [b, k, eps] = x.terms().begin()->first;
  return Rational(2 * k + eps, 2);
}

Parity parity(const RingElem& x) {
  bool even = false;
  bool odd = false;
  for (const auto& [key, c] : x.terms()) (key.second ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

}  // namespace threept
