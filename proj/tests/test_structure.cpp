#include <doctest.h>

#include "thv/structure.hpp"

using namespace thv;

namespace {

LieElement gen_term(const Generator& g, const Rational& coeff) {
  return LieElement::generator(g, CentralPoly::constant(coeff));
}

LieElement central_term(CentralVar v, const Rational& coeff) {
  return LieElement::central(CentralPoly::variable(v) * coeff);
}

}  // namespace

TEST_CASE("bracket of basis generators") {
  // [L_2, L_-2] = -4 L_0 + 1/2 C
  CHECK(bracket_basis(gen_l(2), gen_l(-2)) ==
        gen_term(gen_l(0), Rational(-4)) + central_term(CentralVar::C, Rational(1, 2)));
  // [L_1, I_-1] = -I_0 + 2 C_LI
  CHECK(bracket_basis(gen_l(1), gen_i(-1)) ==
        gen_term(gen_i(0), Rational(-1)) + central_term(CentralVar::CLI, Rational(2)));
  // [I_3, I_-3] = 3 C_I
  CHECK(bracket_basis(gen_i(3), gen_i(-3)) == central_term(CentralVar::CI, Rational(3)));
  // [x, x] = 0
  CHECK(bracket_basis(gen_l(0), gen_l(0)).is_zero());
  // [L_1, L_-1] = -2 L_0 (the delta coefficient (n^3-n)/12 vanishes at n=1)
  CHECK(bracket_basis(gen_l(1), gen_l(-1)) == gen_term(gen_l(0), Rational(-2)));
  // I_0 is central in the algebra
  for (int m = -3; m <= 3; ++m) {
    CHECK(bracket_basis(gen_l(m), gen_i(0)).is_zero());
    CHECK(bracket_basis(gen_i(m), gen_i(0)).is_zero());
  }
}

TEST_CASE("bilinear extension") {
  // [2 L_1, 3 L_2] = 6 L_3
  const LieElement a = gen_term(gen_l(1), Rational(2));
  const LieElement b = gen_term(gen_l(2), Rational(3));
  CHECK(bracket(a, b) == gen_term(gen_l(3), Rational(6)));

  // coefficient linearity: [c_LI L_0, y] = c_LI [L_0, y]
  const CentralPoly cli = CentralPoly::variable(CentralVar::CLI);
  const LieElement scaled = LieElement::generator(gen_l(0), cli);
  const LieElement y = LieElement::generator(gen_l(4));
  CHECK(bracket(scaled, y) == bracket(LieElement::generator(gen_l(0)), y) * cli);

  // termwise: [L_1 + I_1, L_-1]
  const LieElement sum = LieElement::generator(gen_l(1)) + LieElement::generator(gen_i(1));
  CHECK(bracket(sum, LieElement::generator(gen_l(-1))) ==
        bracket_basis(gen_l(1), gen_l(-1)) + bracket_basis(gen_i(1), gen_l(-1)));

  // central parts contribute nothing
  const LieElement pure_central = central_term(CentralVar::C, Rational(7));
  CHECK(bracket(pure_central, sum).is_zero());
  CHECK(bracket(sum, pure_central).is_zero());
}

TEST_CASE("grading") {
  CHECK(grade(gen_l(-3)) == -3);
  CHECK(grade(gen_i(5)) == 5);
  // [L_0, I_5] = 5 I_5
  CHECK(bracket_basis(gen_l(0), gen_i(5)) == gen_term(gen_i(5), Rational(5)));
}

TEST_CASE("grade additivity and central support") {
  for (int n = -4; n <= 4; ++n) {
    for (int m = -4; m <= 4; ++m) {
      for (Kind kx : {Kind::L, Kind::I}) {
        for (Kind ky : {Kind::L, Kind::I}) {
          const LieElement br = bracket_basis(Generator(kx, n), Generator(ky, m));
          for (const auto& [g, coeff] : br.generator_terms()) CHECK(g.index() == n + m);
          if (!br.central_term().is_zero()) CHECK(n + m == 0);
        }
      }
    }
  }
}

TEST_CASE("exhaustive antisymmetry and Jacobi on a window") {
  const StructureCheckReport r = verify_structure_window(-4, 4, Exec::Serial);
  CHECK(r.ok);
  CHECK(r.first_violation.empty());
  CHECK(r.pairs_checked == 18u * 18u);
  CHECK(r.triples_checked == 18u * 18u * 18u);
}

TEST_CASE("parallel sweep matches the serial reference") {
  CHECK(verify_structure_window(-5, 5, Exec::Parallel) ==
        verify_structure_window(-5, 5, Exec::Serial));
}

TEST_CASE("index range is enforced") {
  CHECK_THROWS_AS(Generator(Kind::L, kMaxIndex + 1), RangeError);
  CHECK_THROWS_AS(Generator(Kind::I, -kMaxIndex - 1), RangeError);
  CHECK_THROWS_AS(bracket_basis(gen_l(kMaxIndex), gen_l(kMaxIndex - 1)), RangeError);
  CHECK_NOTHROW(bracket_basis(gen_l(kMaxIndex), gen_l(-kMaxIndex)));
  CHECK_THROWS_AS(verify_structure_window(3, 2), UsageError);
}
