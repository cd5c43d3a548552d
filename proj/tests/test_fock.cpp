#include <doctest.h>

#include "generators.hpp"
#include "threept/fock.hpp"
#include "threept/text.hpp"

using namespace threept;

namespace {

FockVector F(std::string_view s) { return FockVector::parse(s); }

const OscConfig kR0{0};
const OscConfig kR1{1};

HeisParams generic_params(HeisVariant v) {
  HeisParams p;
  p.lambda = Rational(3, 4);
  p.mu = Rational(-2, 5);
  p.nu = 3;
  p.varkappa = Rational(1, 7);
  p.kappa0 = Rational(7, 3);
  p.chi1 = Rational(5, 2);
  p.variant = v;
  return p;
}

std::vector<Var> y_vars(int lo) {
  std::vector<Var> v;
  for (int i = lo; i <= -1; ++i) {
    v.emplace_back(VarKind::Y, i);
    v.emplace_back(VarKind::Y1, i);
  }
  return v;
}

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("vector syntax") {
    CHECK(F("2*x_-1^2*y1_-2*v1 - 1/3*v0").str() == "-1/3*v0 + 2*x_-1^2*y1_-2*v1");
    CHECK(F("x1_3") == F("x1_3*v0"));
    CHECK(F("x_0*x_-1 - x_-1*x_0").is_zero());
    CHECK(F("1").str() == "v0");
    CHECK(F("0").is_zero());
    CHECK_THROWS_AS(F("y_2"), ParseError);
    CHECK_THROWS_AS(F("x_1*v2"), ParseError);
    CHECK_THROWS_AS(F("v0*v1"), ParseError);
    CHECK_THROWS_AS(F("z_1"), ParseError);
    gen::Rng rng(3);
    const auto vars = gen::all_vars(-4, 4);
    for (int i = 0; i < 100; ++i) {
      const FockVector v = gen::fock_vector(rng, vars, 4);
      CHECK(FockVector::parse(v.str()) == v);
    }
  }

  TEST_CASE("state enumeration counts") {
    const auto vars = gen::all_vars(-6, 6);
    CHECK(vars.size() == 38);
    CHECK(enumerate_states(vars, 2).size() == 1560);
    CHECK(enumerate_states(vars, 0, {0}).size() == 1);
    CHECK(enumerate_states({Var(VarKind::X, 0), Var(VarKind::X, 1)}, 3, {0}).size() == 10);
  }

  TEST_CASE("oscillator examples") {
    CHECK(apply_osc(OscKind::A, 1, F("x_1*x_0"), kR0) == F("x_0"));
    CHECK(apply_osc(OscKind::AStar, 2, F("x_-2"), kR0) == F("-v0"));
    CHECK(apply_osc(OscKind::A, -3, F("v0"), kR0) == F("x_-3"));
    for (int m = -5; m <= 5; ++m) {
      CHECK(apply_osc(OscKind::AStar, m, F("v0 + v1"), kR1).is_zero());
      CHECK(apply_osc(OscKind::A1Star, m, F("v0"), kR1).is_zero());
    }
    CHECK(apply_osc(OscKind::AStar, 0, F("v0"), kR0) == F("x_0"));
    CHECK(apply_osc(OscKind::A1, 2, F("v1"), kR1) == F("x1_2*v1"));
  }

  TEST_CASE("oscillator commutators on random vectors") {
    gen::Rng rng(17);
    std::vector<Var> vars;
    for (int i = -4; i <= 4; ++i) {
      vars.emplace_back(VarKind::X, i);
      vars.emplace_back(VarKind::X1, i);
    }
    const OscKind kinds[] = {OscKind::A, OscKind::AStar, OscKind::A1, OscKind::A1Star};
    for (int trial = 0; trial < 400; ++trial) {
      const OscConfig cfg{gen::uniform(rng, 0, 1)};
      const OscKind x = kinds[gen::uniform(rng, 0, 3)], y = kinds[gen::uniform(rng, 0, 3)];
      const int m = gen::uniform(rng, -4, 4), n = gen::uniform(rng, -4, 4);
      const FockVector v = gen::fock_vector(rng, vars, 3);
      Rational want = 0;
      if (m + n == 0) {
        if ((x == OscKind::A && y == OscKind::AStar) || (x == OscKind::A1 && y == OscKind::A1Star)) want = 1;
        if ((x == OscKind::AStar && y == OscKind::A) || (x == OscKind::A1Star && y == OscKind::A1)) want = -1;
      }
      CHECK(apply_osc(x, m, apply_osc(y, n, v, cfg), cfg) - apply_osc(y, n, apply_osc(x, m, v, cfg), cfg) ==
            want * v);
    }
  }

  TEST_CASE("Heisenberg examples") {
    HeisParams p;
    p.kappa0 = 1;
    CHECK(apply_heis(HeisKind::B, -2, F("v0"), p) == F("y_-2*v0"));
    CHECK(apply_heis(HeisKind::B, 2, F("y_-2*v0"), p) == F("-4*v0"));
    CHECK(apply_heis(HeisKind::B, 0, F("y_-1*v1"), p) == F("y_-1*v1"));
    p.mu = Rational(2, 3);
    p.varkappa = 5;
    CHECK(apply_heis(HeisKind::B1, 0, F("v1"), p) == F("5*v0 + 2/3*v1"));
    CHECK(apply_heis(HeisKind::B1, 0, F("v0"), p) == F("2/3*v0 + v1"));
    // The derivative corrections of b1_0 see y1_-2 and y1_-1.
    CHECK(apply_heis(HeisKind::B1, 0, F("y1_-2*v0"), p) == F("2/3*y1_-2*v0 + y1_-2*v1 - 2*v0"));
    CHECK(apply_heis(HeisKind::B1, 1, F("y1_-3*y1_-2"), p) == F("-4*y1_-2 - 12*y1_-3"));
    p.variant = HeisVariant::Paper;
    CHECK(apply_heis(HeisKind::B1, -1, F("y1_-3"), p) == F("y1_-3*y1_-1 + v0"));
    CHECK(apply_heis(HeisKind::B1, 0, F("y1_-4"), p) == F("2/3*y1_-4 + y1_-4*v1 + 4*v0"));
  }

  TEST_CASE("bracket values") {
    HeisParams p = generic_params(HeisVariant::Derived);
    CHECK(heis_bracket_value(HeisKind::B1, 0, HeisKind::B1, -2, p) == Rational(-2) * p.kappa0);
    CHECK(heis_bracket_value(HeisKind::B, 1, HeisKind::B, -1, p) == Rational(-2) * p.kappa0);
    CHECK(heis_bracket_value(HeisKind::B1, 2, HeisKind::B1, -3, p) == Rational(-20) * p.kappa0);
    CHECK(heis_bracket_value(HeisKind::B, 2, HeisKind::B1, -2, p) == Rational(-4) * p.chi1);
    CHECK(heis_bracket_value(HeisKind::B1, 2, HeisKind::B, -2, p) == Rational(-4) * p.chi1);
    CHECK(heis_bracket_value(HeisKind::B, 0, HeisKind::B1, 0, p) == 0);
  }

  TEST_CASE("derived variant satisfies the Heisenberg relations") {
    const HeisParams p = generic_params(HeisVariant::Derived);
    gen::Rng rng(23);
    const auto vars = y_vars(-8);
    for (int trial = 0; trial < 600; ++trial) {
      const HeisKind x = gen::uniform(rng, 0, 1) ? HeisKind::B : HeisKind::B1;
      const HeisKind y = gen::uniform(rng, 0, 1) ? HeisKind::B : HeisKind::B1;
      const FockVector v = gen::fock_vector(rng, vars, 3);
      CHECK(heis_bracket_check(x, gen::uniform(rng, -4, 4), y, gen::uniform(rng, -4, 4), v, p).is_zero());
    }
    CHECK(heis_bracket_check(HeisKind::B1, 0, HeisKind::B1, -2, F("v0"), p).is_zero());
    CHECK(heis_bracket_check(HeisKind::B, 0, HeisKind::B1, 0, F("y1_-1*v1"), p).is_zero());
  }

  TEST_CASE("literal variant leaves residuals where the delta patterns disagree") {
    HeisParams p = generic_params(HeisVariant::Paper);
    p.chi1 = 0;
    const FockVector v = F("v0");
    // b1_0 differentiates y1_-4 (pattern m + n = -4) where b1 b1 expects none.
    CHECK(heis_bracket_check(HeisKind::B1, -4, HeisKind::B1, 0, v, p) == Rational(-4) * p.kappa0 * v);
    // The b/b relation is untouched.
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n) CHECK(heis_bracket_check(HeisKind::B, m, HeisKind::B, n, v, p).is_zero());
    int failing = 0;
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        if (!heis_bracket_check(HeisKind::B1, m, HeisKind::B1, n, F("v0 + y1_-1*y1_-3*v1"), p).is_zero())
          ++failing;
    CHECK(failing > 0);
  }
}
