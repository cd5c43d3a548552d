#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "threept/rational.hpp"

namespace threept {

/// Element of R = Q[t, t^-1, u | u^2 = t^2 + 4t] on the basis {t^k, t^k u}.
///
/// Keys are (k, eps) with eps in {0, 1}; zero coefficients are never stored,
/// so two equal elements always have identical term maps.
class RingElem {
 public:
  using Key = std::pair<int, int>;
  // Descending (k, eps) keeps printing in decreasing quasi-degree.
  using TermMap = std::map<Key, Rational, std::greater<Key>>;

  RingElem() = default;
  RingElem(const Rational& c);  // NOLINT(google-explicit-constructor)

  static RingElem monomial(int k, int eps, const Rational& c = 1);
  static RingElem t() { return monomial(1, 0); }
  static RingElem u() { return monomial(0, 1); }

  /// Parses the text syntax: signed terms like "3/2*t^-1*u - 2*t^3".
  static RingElem parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  Rational coeff(int k, int eps) const;
  bool is_zero() const { return terms_.empty(); }
  /// Single basis element with any nonzero coefficient.
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(int k, int eps, const Rational& c);

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const Rational& c);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const Rational& c) { return a *= c; }
  friend RingElem operator*(const Rational& c, RingElem a) { return a *= c; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  RingElem pow(unsigned e) const;
  /// The involution t -> t, u -> -u.
  RingElem conjugate() const;

  std::string str() const;

 private:
  TermMap terms_;
};

RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_mul(const RingElem& x, const RingElem& y);

/// Product of two basis monomials t^k u^e1 * t^l u^e2 with u^2 rewritten.
RingElem basis_product(int k, int e1, int l, int e2);

/// Dense polynomial over Q with non-negative exponents; trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c) { return Poly({c}); }
  /// x - root
  static Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational eval(const Rational& x) const;

  /// Exact division by (x - root); returns the quotient and sets `remainder`.
  Poly divide_linear(const Rational& root, Rational& remainder) const;
  /// p(scale * x + shift)
  Poly affine_substitute(const Rational& scale, const Rational& shift) const;

  Poly& operator+=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  Poly pow(unsigned e) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q[x, (x - r0)^-1, (x - r1)^-1] stored as N(x) / ((x-r0)^p0 (x-r1)^p1).
///
/// With (r0, r1) = (0, 1) this is S = Q[s, s^-1, (s-1)^-1]; with (r0, r1) = (-a, a)
/// it is A_a = Q[z, (z+a)^-1, (z-a)^-1]. Canonical: N is not divisible by a
/// denominator factor that is present, and zero is (0, 0, 0).
class SFraction {
 public:
  SFraction() = default;
  SFraction(Rational r0, Rational r1) : r0_(std::move(r0)), r1_(std::move(r1)) {}

  /// N * (x - r0)^e0 * (x - r1)^e1 with signed exponents, canonicalised.
  static SFraction from_parts(Poly numer, int e0, int e1, Rational r0 = 0, Rational r1 = 1);
  /// Sum of c_k x^k over possibly negative k, for r0 = 0 only.
  static SFraction from_laurent(const std::map<int, Rational>& terms, Rational r1 = 1);

  const Poly& numerator() const { return numer_; }
  int pow0() const { return p0_; }
  int pow1() const { return p1_; }
  const Rational& root0() const { return r0_; }
  const Rational& root1() const { return r1_; }
  bool is_zero() const { return numer_.is_zero(); }

  friend SFraction operator+(const SFraction& a, const SFraction& b);
  friend SFraction operator-(const SFraction& a, const SFraction& b);
  friend SFraction operator*(const SFraction& a, const SFraction& b);
  friend bool operator==(const SFraction& a, const SFraction& b);
  friend bool operator!=(const SFraction& a, const SFraction& b) { return !(a == b); }

  std::string str(char var = 's') const;

 private:
  void check_compatible(const SFraction& o) const;
  void canonicalize();

  Poly numer_;
  int p0_ = 0;
  int p1_ = 0;
  Rational r0_ = 0;
  Rational r1_ = 1;
};

/// R -> S: t -> s^-1 (s-1)^2, u -> s - s^-1.
SFraction to_s(const RingElem& x);
/// S -> R: s -> (t+2+u)/2, s^-1 -> (t+2-u)/2, (s-1)^-1 -> (t^-1 u - 1)/2.
RingElem from_s(const SFraction& y);

/// R -> A_a, the composite of to_s with s = (z + a) / (2a). Throws on a = 0.
SFraction to_a(const RingElem& x, const Rational& a);
/// A_a -> R: z -> a(t+u+1), (z+a)^-1 -> (t+2-u)/(4a), (z-a)^-1 -> (t^-1 u - 1)/(4a).
RingElem from_a(const SFraction& y, const Rational& a);

}  // namespace threept
