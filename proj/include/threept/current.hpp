#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>

#include "threept/kahler.hpp"
#include "threept/ring.hpp"

namespace threept {

enum class Sl2Basis { E, F, H };

/// Structure constants of sl(2): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
/// Returns the coefficient and basis element of [x, y] (coefficient 0 if the bracket vanishes).
std::pair<Rational, Sl2Basis> sl2_bracket(Sl2Basis x, Sl2Basis y);

/// Trace form of the defining representation: (E,F) = (F,E) = 1, (H,H) = 2.
Rational sl2_form(Sl2Basis x, Sl2Basis y);

char sl2_name(Sl2Basis b);

/// Generator symbols of the presentation of the extended current algebra.
/// x_n = x (x) t^n, x1_n = x (x) t^n u, w0/w1 the central basis.
enum class Gen { e, f, h, e1, f1, h1, w0, w1 };

inline constexpr Gen kCurrentGens[] = {Gen::e, Gen::f, Gen::h, Gen::e1, Gen::f1, Gen::h1};

std::string gen_name(Gen g);
Gen parse_gen(std::string_view name);
Sl2Basis gen_basis(Gen g);
/// 1 for e1, f1, h1; 0 for e, f, h.
int gen_u_exponent(Gen g);

/// Element of (sl2 (x) R) + Q w0 + Q w1.
class CurrentElem {
 public:
  using Key = std::tuple<Sl2Basis, int, int>;  // (basis, t-exponent, u-exponent)

  CurrentElem() = default;

  static CurrentElem loop(Sl2Basis x, const RingElem& f);
  static CurrentElem generator(Gen g, int m = 0);
  static CurrentElem central(const CentralPair& c);

  /// Text syntax: "2*e[t^2] + 8*e[t^1]", "h1[0]" (= h (x) u), "f[t^-1*u]", "w0".
  static CurrentElem parse(std::string_view text);

  const std::map<Key, Rational>& terms() const { return terms_; }
  const CentralPair& central_part() const { return central_; }
  /// The sl2 (x) R part as a ring element attached to each basis vector.
  RingElem component(Sl2Basis x) const;
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  void add_term(Sl2Basis x, int k, int eps, const Rational& c);

  CurrentElem operator-() const;
  CurrentElem& operator+=(const CurrentElem& o);
  CurrentElem& operator-=(const CurrentElem& o);
  CurrentElem& operator*=(const Rational& c);
  friend CurrentElem operator+(CurrentElem a, const CurrentElem& b) { return a += b; }
  friend CurrentElem operator-(CurrentElem a, const CurrentElem& b) { return a -= b; }
  friend CurrentElem operator*(const Rational& c, CurrentElem a) { return a *= c; }
  friend bool operator==(const CurrentElem& a, const CurrentElem& b) {
    return a.terms_ == b.terms_ && a.central_ == b.central_;
  }
  friend bool operator!=(const CurrentElem& a, const CurrentElem& b) { return !(a == b); }

  /// Loop part only, e.g. "2*e[t^2] + 8*e[t^1]" ("0" if empty).
  std::string loop_str() const;
  /// Loop part followed by "+ c*w0 + c*w1" for nonzero central coordinates.
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
  CentralPair central_;
};

/// [x (x) f, y (x) g] = [x,y] (x) fg + (x,y) class(f dg); the centre is central.
CurrentElem bracket(const CurrentElem& x, const CurrentElem& y);

/// Right-hand side of the printed relation for [X_m, Y_n], transcribed from the
/// presentation table (reverse orders by antisymmetry of the listed relation).
CurrentElem relation_table_rhs(Gen x, int m, Gen y, int n);

/// deg t^i = i, deg t^i u = i + 1/2. Throws std::invalid_argument unless the
/// element is a single loop term.
Rational quasi_degree(const CurrentElem& x);

enum class Parity { Even, Odd, Mixed };

/// Membership in R^0 = Q[t^+-1] or R^1 = Q[t^+-1] u; zero counts as even.
Parity parity(const RingElem& x);

}  // namespace threept
