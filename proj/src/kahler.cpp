#include "threept/kahler.hpp"

namespace threept {

std::string CentralPair::str() const { return "c0 = " + c0.str() + ", c1 = " + c1.str(); }

OneForm differential(const RingElem& g) {
  OneForm w;
  for (const auto& [key, c] : g.terms()) {
    const auto [k, eps] = key;
    if (eps == 0) {
      w.dt_part.add_term(k - 1, 0, c * k);
    } else {
      w.du_part.add_term(k, 0, c);
      w.dt_part.add_term(k - 1, 1, c * k);
    }
  }
  return w;
}

Rational u_dt_class(int k) {
  if (k <= -3) return 0;
  if (k == -2) return Rational(1, 2);
  // t^(j+1) u dt == -(4j+6)/(j+3) t^j u dt, starting from t^-1 u dt = w1.
  Rational c = 1;
  for (int j = -1; j < k; ++j) c *= Rational(-(4 * j + 6), j + 3);
  return c;
}

CentralPair reduce(const OneForm& w) {
  RingElem dt = w.dt_part;
  for (const auto& [key, c] : w.du_part.terms()) {
    const auto [k, eps] = key;
    if (eps == 1) {
      // t^k u du = (t^(k+1) + 2 t^k) dt
      dt.add_term(k + 1, 0, c);
      dt.add_term(k, 0, c * 2);
    } else {
      // t^k du == -k t^(k-1) u dt   (d(t^k u) is exact)
      dt.add_term(k - 1, 1, -c * k);
    }
  }
  CentralPair out;
  for (const auto& [key, c] : dt.terms()) {
    const auto [k, eps] = key;
    if (eps == 0) {
      if (k == -1) out.c0 += c;
    } else {
      out.c1 += c * u_dt_class(k);
    }
  }
  return out;
}

CentralPair pairing(const RingElem& f, const RingElem& g) { return reduce(f * differential(g)); }

CentralPair closed_form_pairing(PairingKind kind, int k, int l) {
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  switch (kind) {
    case PairingKind::TT:
      return {Rational(-k * delta(l, -k)), 0};
    case PairingKind::UU:
      return {Rational((l + 1) * delta(k + l, -2) + (4 * l + 2) * delta(k + l, -1)), 0};
    case PairingKind::TU:
      return {0, Rational(-k * delta(k, -l))};
  }
  return {};
}

}  // namespace threept
