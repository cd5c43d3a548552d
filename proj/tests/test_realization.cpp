#include <doctest.h>

#include "generators.hpp"
#include "threept/realization.hpp"

using namespace threept;

namespace {

FockVector F(std::string_view s) { return FockVector::parse(s); }

HeisParams params(const Rational& kappa0) {
  HeisParams p;
  p.lambda = Rational(2, 3);
  p.mu = -1;
  p.nu = Rational(1, 2);
  p.varkappa = 3;
  p.kappa0 = kappa0;
  return p;
}

/// [X_m, Y_n] v minus tau of the algebra bracket applied to v.
FockVector commutator_residual(const ModeEngine& eng, Gen x, int m, Gen y, int n, const FockVector& v) {
  FockVector r = eng.apply_mode(x, m, eng.apply_mode(y, n, v));
  r -= eng.apply_mode(y, n, eng.apply_mode(x, m, v));
  r -= eng.tau_extend(bracket(CurrentElem::generator(x, m), CurrentElem::generator(y, n)), v);
  return r;
}

}  // namespace

TEST_SUITE("realization") {
  TEST_CASE("field images") {
    CHECK(field_str(tau_field(Gen::f, 5)) == "-1*:alpha:");
    CHECK(field_str(tau_field(Gen::h, 5)) == "2*:alpha alpha*: + 2*:alpha1 alpha1*: + 1*:beta:");
    CHECK(field_str(tau_field(Gen::h1, 0)) ==
          "2*:alpha1 alpha*: + 2*(z^2 + 4*z)*:alpha alpha1*: + 1*:beta1:");
    const Field e1 = tau_field(Gen::e1, 3);
    CHECK(e1.size() == 7);
    CHECK(e1.back().str() == "3*(z + 2)*:alpha1*:");
    CHECK(tau_field(Gen::e, 5).back().str() == "5*:d(alpha*):");
    CHECK_THROWS(tau_field(Gen::w0, 1));
    CHECK(field_weight(FieldKind::AlphaStar) == 0);
    CHECK(field_weight(FieldKind::DAlpha1Star) == 1);
  }

  TEST_CASE("config") {
    CHECK(RealizationConfig::make(0, params(1)).chi0() == 5);
    CHECK(RealizationConfig::make(1, params(-2)).chi0() == -2);
    HeisParams p = params(1);
    p.chi1 = 1;
    CHECK_THROWS_AS(RealizationConfig::make(0, p), std::invalid_argument);
    CHECK_THROWS_AS(RealizationConfig::make(2, params(1)), std::invalid_argument);
  }

  TEST_CASE("vacuum examples") {
    const ModeEngine r0(RealizationConfig::make(0, params(1)));
    const ModeEngine r1(RealizationConfig::make(1, params(1)));
    const FockVector vac = F("v0");
    // beta_0 = lambda and beta1_0 = B0 survive on the vacuum.
    CHECK(r0.apply_mode(Gen::e, -1, vac) ==
          F("x_-1*x_0^2 + 2*x1_-1*x_0*x1_0 + y_-1*x_0 + y1_-1*x1_0 + 17/3*x_1 - x1_1 + 1/2*x1_1*v1"));
    CHECK(r0.apply_mode(Gen::f, 0, vac).is_zero());
    CHECK(r0.apply_mode(Gen::f, -2, vac) == F("-x_-2"));
    CHECK(r0.apply_mode(Gen::h, 0, vac) == Rational(2, 3) * vac);
    CHECK(r0.apply_mode(Gen::h, 0, F("v1")) == Rational(2, 3) * F("v1"));
    for (int m = -3; m <= 3; ++m) {
      CHECK(r1.apply_mode(Gen::f, m, vac) == -1 * FockVector::parse("x_" + std::to_string(m)));
      CHECK(r1.apply_mode(Gen::f1, m, F("v1")) == -1 * FockVector::parse("x1_" + std::to_string(m) + "*v1"));
    }
    CHECK(r1.apply_mode(Gen::e, 0, vac).is_zero());
    CHECK(r1.apply_mode(Gen::e1, 2, vac).is_zero());
    // [h_1, h_-1] = -2 w0 acts as -2 chi0.
    const FockVector hh = r0.apply_mode(Gen::h, 1, r0.apply_mode(Gen::h, -1, vac)) -
                          r0.apply_mode(Gen::h, -1, r0.apply_mode(Gen::h, 1, vac));
    CHECK(hh == Rational(-10) * vac);
  }

  TEST_CASE("central elements") {
    const ModeEngine eng(RealizationConfig::make(0, params(-2)));
    const FockVector v = F("x_1*y_-2 + 1/2*v1");
    CHECK(eng.tau_extend(CurrentElem::parse("w0"), v) == Rational(2) * v);
    CHECK(eng.tau_extend(CurrentElem::parse("w1"), v).is_zero());
    CHECK(eng.tau_extend(CurrentElem::parse("3*w0 + h[1]"), v) ==
          Rational(6) * v + eng.apply_mode(Gen::h, 0, v));
    CHECK(eng.apply_mode(Gen::w0, 4, v) == Rational(2) * v);
  }

  TEST_CASE("binomials") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-1, 1) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(2, 3) == 0);
  }

  TEST_CASE("pairwise lambda-brackets hold on every state of a window") {
    const auto vars = gen::all_vars(-5, 5);
    const auto states = enumerate_states(vars, 1);
    for (int r = 0; r <= 1; ++r)
      for (const Rational k0 : {Rational(0), Rational(1), Rational(-2)}) {
        const ModeEngine eng(RealizationConfig::make(r, params(k0)));
        for (const PairItem item : {PairItem::Beta1Beta1, PairItem::AlphaAlphaStar, PairItem::AlphaAlphaStarSq})
          for (int m = -2; m <= 2; ++m)
            for (int n = -2; n <= 2; ++n)
              for (const BasisState& s : states) CHECK(pair_residual(eng, item, m, n, FockVector(s)).is_zero());
      }
  }

  TEST_CASE("pairwise coefficient sign matters") {
    RealizationConfig cfg = RealizationConfig::make(0, params(1));
    const ModeEngine eng(cfg);
    // Without the lambda term the alpha alpha* pair leaves m * v at m + n = 0.
    const FockVector v = F("v0");
    const Field a = pair_field(PairItem::AlphaAlphaStar);
    const FockVector comm = eng.apply_field(a, 2, eng.apply_field(a, -2, v)) -
                            eng.apply_field(a, -2, eng.apply_field(a, 2, v));
    CHECK(comm == Rational(-2) * v);
    CHECK(pair_residual(eng, PairItem::AlphaAlphaStar, 2, -2, v).is_zero());
  }

  TEST_CASE("commutators match the algebra on random states") {
    gen::Rng rng(41);
    const auto vars = gen::all_vars(-4, 4);
    const Gen gens[] = {Gen::e, Gen::f, Gen::h, Gen::e1, Gen::f1, Gen::h1};
    for (int trial = 0; trial < 150; ++trial) {
      const int r = gen::uniform(rng, 0, 1);
      const Rational k0 = std::array<Rational, 3>{0, 1, -2}[gen::uniform(rng, 0, 2)];
      const ModeEngine eng(RealizationConfig::make(r, params(k0)));
      const Gen x = gens[gen::uniform(rng, 0, 5)], y = gens[gen::uniform(rng, 0, 5)];
      const int m = gen::uniform(rng, -2, 2), n = gen::uniform(rng, -2, 2);
      const FockVector v = gen::fock_vector(rng, vars, 3, 2);
      CAPTURE(r);
      CAPTURE(k0);
      CAPTURE(gen_name(x));
      CAPTURE(m);
      CAPTURE(gen_name(y));
      CAPTURE(n);
      CAPTURE(v.str());
      CHECK(commutator_residual(eng, x, m, y, n, v).is_zero());
    }
  }

  TEST_CASE("mode order within normal-ordered groups is irrelevant") {
    gen::Rng rng(59);
    const auto vars = gen::all_vars(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
      const ModeEngine eng(RealizationConfig::make(gen::uniform(rng, 0, 1), params(1)));
      const Gen g = kCurrentGens[gen::uniform(rng, 0, 5)];
      const int m = gen::uniform(rng, -3, 3);
      const FockVector v = gen::fock_vector(rng, vars, 3, 2);
      CHECK(eng.apply_field(eng.tau(g), m, v, false) == eng.apply_field(eng.tau(g), m, v, true));
    }
  }

  TEST_CASE("states outside the precomputed table are rejected") {
    const ModeEngine eng(RealizationConfig::make(0, params(1)), 16);
    CHECK_THROWS_AS(eng.apply_mode(Gen::e, 0, F("x_40")), std::out_of_range);
  }

  TEST_CASE("linearity") {
    gen::Rng rng(7);
    const auto vars = gen::all_vars(-3, 3);
    const ModeEngine eng(RealizationConfig::make(0, params(1)));
    for (int trial = 0; trial < 40; ++trial) {
      const FockVector a = gen::fock_vector(rng, vars, 2), b = gen::fock_vector(rng, vars, 2);
      const Rational c = gen::rational(rng);
      const Gen g = kCurrentGens[gen::uniform(rng, 0, 5)];
      const int m = gen::uniform(rng, -2, 2);
      CHECK(eng.apply_mode(g, m, a + c * b) == eng.apply_mode(g, m, a) + c * eng.apply_mode(g, m, b));
    }
  }
}
