#include <doctest.h>

#include "generators.hpp"
#include "threept/ring.hpp"
#include "threept/text.hpp"

using namespace threept;

namespace {

RingElem R(std::string_view s) { return RingElem::parse(s); }

SFraction laurent(std::map<int, Rational> terms) { return SFraction::from_laurent(terms); }

/// z-polynomial in A_a with no denominator.
SFraction zpoly(std::vector<Rational> c, const Rational& a) { return SFraction::from_parts(Poly(std::move(c)), 0, 0, -a, a); }

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("addition") {
    CHECK(ring_add(R("t"), RingElem()) == R("t"));
    CHECK(ring_add(R("t + u"), R("t - u")) == R("2*t"));
    CHECK(ring_add(R("t^-1*u"), R("t^-1*u")) == R("2*t^-1*u"));
  }

  TEST_CASE("multiplication reduces u^2") {
    CHECK(ring_mul(R("u"), R("u")) == R("t^2 + 4*t"));
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n)
        CHECK(basis_product(m, 1, n, 1) == RingElem::monomial(m + n + 2, 0) + RingElem::monomial(m + n + 1, 0, 4));
    CHECK(ring_mul(R("1"), R("3/2*t^-1*u - 2*t^3")) == R("3/2*t^-1*u - 2*t^3"));
  }

  TEST_CASE("text roundtrip") {
    for (const char* s : {"3/2*t^-1*u - 2*t^3", "u", "1", "-t^2*u + 7", "0"}) CHECK(R(s).str() == R(R(s).str()).str());
    CHECK(R("3/2*t^-1*u - 2*t^3").str() == "-2*t^3 + 3/2*t^-1*u");
    CHECK(R("u*u").str() == "t^2 + 4*t^1");
    CHECK_THROWS_AS(R("t^"), ParseError);
    CHECK_THROWS_AS(R("u^-1"), ParseError);
    CHECK_THROWS_AS(R("2*x"), ParseError);
  }

  TEST_CASE("isomorphism with S") {
    CHECK(to_s(R("t")) == laurent({{1, 1}, {0, -2}, {-1, 1}}));
    CHECK(to_s(R("u")) == laurent({{1, 1}, {-1, -1}}));
    CHECK(from_s(laurent({{1, 1}})) == R("1/2*t + 1 + 1/2*u"));
    CHECK(from_s(laurent({{-1, 1}})) == R("1/2*t + 1 - 1/2*u"));
    CHECK(from_s(SFraction::from_parts(Poly({1}), 0, -1)) == R("1/2*t^-1*u - 1/2"));
    CHECK(to_s(R("t^-3*u")).str() == "(s^3 + s^2)/((s - 1)^5)");
  }

  TEST_CASE("isomorphism with A_a") {
    // z corresponds to a(t + u + 1); a(t + u) is z - a.
    CHECK(to_a(R("t + u + 1"), 1) == zpoly({0, 1}, 1));
    CHECK(to_a(R("t + u"), 1) == zpoly({-1, 1}, 1));
    CHECK(to_a(R("1"), Rational(5, 2)) == zpoly({1}, Rational(5, 2)));
    CHECK(from_a(to_a(R("t^-1*u"), 2), 2) == R("t^-1*u"));
    CHECK(from_a(zpoly({0, 1}, 3), 3) == R("3*t + 3*u + 3"));
    CHECK_THROWS_AS(to_a(R("t"), 0), std::invalid_argument);
    CHECK_THROWS_AS(from_a(to_a(R("t"), 1), 2), std::invalid_argument);
  }

  TEST_CASE("basis roundtrips and multiplicativity") {
    for (int k = -5; k <= 5; ++k) {
      for (int e = 0; e <= 1; ++e) {
        const RingElem x = RingElem::monomial(k, e);
        CHECK(from_s(to_s(x)) == x);
        CHECK(from_a(to_a(x, Rational(-1, 3)), Rational(-1, 3)) == x);
        for (int l = -5; l <= 5; ++l)
          for (int f = 0; f <= 1; ++f) {
            const RingElem y = RingElem::monomial(l, f);
            CHECK(to_s(x * y) == to_s(x) * to_s(y));
          }
      }
    }
  }

  TEST_CASE("ring axioms on random elements") {
    gen::Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
      const RingElem a = gen::ring_elem(rng), b = gen::ring_elem(rng), c = gen::ring_elem(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(to_s(a * b + c) == to_s(a) * to_s(b) + to_s(c));
      CHECK(from_s(to_s(a)) == a);
      CHECK(RingElem::parse(a.str()) == a);
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
  }

  TEST_CASE("canonical representation is unique") {
    // (t + 4) t = u^2 built two ways.
    CHECK(R("u") * R("u") == (R("t") + R("4")) * R("t"));
    CHECK((R("u") * R("t^-1")) * R("u") == R("t + 4"));
    CHECK((R("t + u") - R("u")) == R("t"));
    CHECK((R("t + u") - R("t + u")).is_zero());
    CHECK((R("t + u") - R("t + u")).terms().empty());
  }
}
