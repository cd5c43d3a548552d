#pragma once

#include <string>

#include "threept/ring.hpp"

namespace threept {

/// One-form dt_part*dt + du_part*du in the Kaehler differentials of R.
struct OneForm {
  RingElem dt_part;
  RingElem du_part;

  OneForm& operator+=(const OneForm& o) {
    dt_part += o.dt_part;
    du_part += o.du_part;
    return *this;
  }
  friend OneForm operator*(const RingElem& f, const OneForm& w) { return {f * w.dt_part, f * w.du_part}; }
  friend bool operator==(const OneForm& a, const OneForm& b) = default;
};

/// Coordinates on the basis {w0 = t^-1 dt, w1 = t^-1 u dt} of Omega_R / dR.
struct CentralPair {
  Rational c0;
  Rational c1;

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  CentralPair& operator+=(const CentralPair& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  friend CentralPair operator+(CentralPair a, const CentralPair& b) { return a += b; }
  friend CentralPair operator-(const CentralPair& a) { return {-a.c0, -a.c1}; }
  friend CentralPair operator*(const Rational& r, const CentralPair& p) { return {r * p.c0, r * p.c1}; }
  friend bool operator==(const CentralPair& a, const CentralPair& b) = default;

  /// "c0 = p/q, c1 = p/q"
  std::string str() const;
};

/// d(t^k) = k t^(k-1) dt, d(t^k u) = t^k du + k t^(k-1) u dt, extended linearly.
OneForm differential(const RingElem& g);

/// Class of t^k u dt in Omega_R / dR as a multiple of w1.
///
/// Walks (k+3) t^(k+1) u dt + (4k+6) t^k u dt == 0 one step at a time toward
/// k = -1 from above; t^-2 u dt == w1/2 and t^k u dt == 0 for k <= -3.
Rational u_dt_class(int k);

/// Reduces a one-form to its coordinates modulo exact forms.
///
/// Rewrites u du = (t+2) dt, then t^k du == -k t^(k-1) u dt, drops t^m dt for
/// m != -1 and folds every t^k u dt onto t^-1 u dt.
CentralPair reduce(const OneForm& w);

/// Class of f dg.
CentralPair pairing(const RingElem& f, const RingElem& g);

enum class PairingKind {
  TT,  ///< t^k d(t^l)
  UU,  ///< t^k u d(t^l u)
  TU,  ///< t^k d(t^l u)
};

/// The printed closed formulas for the three basis pairings, evaluated as
/// stated without any rewriting:
///   TT: -k delta(l,-k) w0
///   UU: ((l+1) delta(k+l,-2) + (4l+2) delta(k+l,-1)) w0
///   TU: -k delta(k,-l) w1
CentralPair closed_form_pairing(PairingKind kind, int k, int l);

}  // namespace threept
