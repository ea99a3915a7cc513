#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "thv/rational.hpp"

namespace thv {

/// The three commuting central indeterminates.
enum class CentralVar : std::uint8_t { C = 0, CI = 1, CLI = 2 };

/// Exponent triple for (c, c_I, c_LI).
struct CentralExponents {
  std::uint32_t c = 0;
  std::uint32_t ci = 0;
  std::uint32_t cli = 0;

  friend bool operator==(const CentralExponents&, const CentralExponents&) = default;
  friend bool operator<(const CentralExponents& a, const CentralExponents& b) {
    if (a.c != b.c) return a.c < b.c;
    if (a.ci != b.ci) return a.ci < b.ci;
    return a.cli < b.cli;
  }

  std::uint32_t get(CentralVar v) const;
  bool is_constant() const { return c == 0 && ci == 0 && cli == 0; }
};

/// Polynomial in c, c_I, c_LI with exact rational coefficients. Canonical:
/// zero coefficients are never stored, the zero polynomial is the empty map.
class CentralPoly {
 public:
  using Terms = std::map<CentralExponents, Rational>;

  CentralPoly() = default;

  static CentralPoly zero() { return CentralPoly(); }
  static CentralPoly constant(Rational value);
  static CentralPoly one() { return constant(Rational(1)); }
  static CentralPoly variable(CentralVar v, std::uint32_t power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 for the zero polynomial).
  Rational constant_value() const;

  std::uint32_t degree_in(CentralVar v) const;

  CentralPoly& operator+=(const CentralPoly& o);
  CentralPoly& operator-=(const CentralPoly& o);
  CentralPoly& operator*=(const CentralPoly& o);
  CentralPoly& operator*=(const Rational& r);
  CentralPoly operator-() const;

  friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
  friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
  friend CentralPoly operator*(CentralPoly a, const CentralPoly& b) { return a *= b; }
  friend CentralPoly operator*(CentralPoly a, const Rational& r) { return a *= r; }

  friend bool operator==(const CentralPoly& a, const CentralPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Full evaluation at a rational point.
  Rational evaluate(const Rational& c, const Rational& ci, const Rational& cli) const;

  /// Partial substitution; absent values leave the indeterminate in place.
  CentralPoly substitute(const std::optional<Rational>& c,
                         const std::optional<Rational>& ci,
                         const std::optional<Rational>& cli) const;

  void add_term(const CentralExponents& e, const Rational& coeff);

 private:
  Terms terms_;
};

}  // namespace thv
