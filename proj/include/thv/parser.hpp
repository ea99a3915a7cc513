#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <variant>

#include "thv/central_poly.hpp"
#include "thv/generator.hpp"
#include "thv/rational.hpp"

namespace thv {

struct Expression;
using ExprPtr = std::unique_ptr<Expression>;

/// Abstract syntax for the surface grammar:
///
///   expr    := term (("+" | "-") term)*
///   term    := ("-")? factor ("*" factor)*
///   factor  := primary ("^" nat)?
///   primary := atom | "[" expr "," expr "]" | "(" expr ")" | rational
///   atom    := ("L" | "I") "[" int "]" | "C" | "CI" | "CLI"
///   rational := int ("/" nat)?
///
/// Precedence: ^ over * (left-assoc) over unary minus over binary +/- (left-assoc).
struct Expression {
  struct GeneratorAtom {
    Generator g;
  };
  struct CentralAtom {
    CentralVar v;
  };
  struct RationalLit {
    Rational value;
  };
  struct Bracket {
    ExprPtr lhs, rhs;
  };
  struct Product {
    ExprPtr lhs, rhs;
  };
  struct Power {
    ExprPtr base;
    std::uint32_t exponent;
  };
  struct Sum {
    ExprPtr lhs, rhs;
  };
  struct Difference {
    ExprPtr lhs, rhs;
  };
  struct Negate {
    ExprPtr operand;
  };

  std::variant<GeneratorAtom, CentralAtom, RationalLit, Bracket, Product, Power, Sum, Difference,
               Negate>
      node;
};

/// Power exponents beyond this are rejected at parse time.
inline constexpr std::uint32_t kMaxExponent = 4096;

/// Throws ParseError (offset, line, column, expected-token message) on
/// malformed input, out-of-range generator indices, negative exponents, and
/// zero denominators.
ExprPtr parse(std::string_view input);

}  // namespace thv
