#include <doctest.h>

#include <random>

#include "thv/central_poly.hpp"

using namespace thv;

namespace {

CentralPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CentralPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    CentralExponents e{static_cast<std::uint32_t>(expo(rng)),
                       static_cast<std::uint32_t>(expo(rng)),
                       static_cast<std::uint32_t>(expo(rng))};
    p.add_term(e, Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("central poly canonical form") {
  CHECK(CentralPoly::zero().is_zero());
  CHECK(CentralPoly::zero().terms().empty());

  CentralPoly p = CentralPoly::variable(CentralVar::CLI);
  p -= CentralPoly::variable(CentralVar::CLI);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());  // the zero polynomial is the empty map

  CHECK(CentralPoly::constant(Rational(0)).is_zero());
  CHECK(CentralPoly::variable(CentralVar::C, 0) == CentralPoly::one());
}

TEST_CASE("arithmetic identities") {
  const CentralPoly x = CentralPoly::variable(CentralVar::C);
  CHECK((CentralPoly::one() + x) * (CentralPoly::one() - x) == CentralPoly::one() - x * x);
  CHECK((x * Rational(0)).is_zero());
  CHECK(-(-x) == x);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const CentralPoly a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK((a + b) + d == a + (b + d));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation and substitution") {
  const CentralPoly key = CentralPoly::variable(CentralVar::CLI, 3) * Rational(-48);
  CHECK(key.evaluate(Rational(0), Rational(0), Rational(1, 2)) == Rational(-6));
  CHECK(key.degree_in(CentralVar::CLI) == 3);
  CHECK(key.degree_in(CentralVar::C) == 0);

  // substituting one indeterminate keeps the others symbolic
  CentralPoly mixed =
      CentralPoly::variable(CentralVar::CI) * CentralPoly::variable(CentralVar::CLI);
  mixed += CentralPoly::variable(CentralVar::C);
  CHECK(mixed.substitute(std::nullopt, Rational(0), std::nullopt) ==
        CentralPoly::variable(CentralVar::C));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CentralPoly a = random_poly(rng), b = random_poly(rng);
    const Rational pc(1, 3), pci(-2), pcli(5, 7);
    CHECK((a * b).evaluate(pc, pci, pcli) ==
          a.evaluate(pc, pci, pcli) * b.evaluate(pc, pci, pcli));
  }
}

TEST_CASE("constant accessors") {
  CHECK(CentralPoly::constant(Rational(5)).is_constant());
  CHECK(CentralPoly::constant(Rational(5)).constant_value() == Rational(5));
  CHECK(CentralPoly::zero().is_constant());
  CHECK_FALSE(CentralPoly::variable(CentralVar::CI).is_constant());
}
