#pragma once

#include <map>

#include "thv/central_poly.hpp"
#include "thv/generator.hpp"

namespace thv {

/// An element of the Lie algebra with CentralPoly coefficients: a finite
/// combination of generators plus a central part. Canonical (no stored
/// zeros). The bracket of two basis generators is always of this shape.
class LieElement {
 public:
  using GeneratorTerms = std::map<Generator, CentralPoly, CanonicalGenLess>;

  LieElement() = default;

  static LieElement zero() { return LieElement(); }
  static LieElement generator(const Generator& g, CentralPoly coeff = CentralPoly::one());
  static LieElement central(CentralPoly p);

  const GeneratorTerms& generator_terms() const { return gens_; }
  const CentralPoly& central_term() const { return central_; }
  bool is_zero() const { return gens_.empty() && central_.is_zero(); }

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement operator-() const;
  LieElement& operator*=(const CentralPoly& p);
  LieElement& operator*=(const Rational& r);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const CentralPoly& p) { return a *= p; }
  friend LieElement operator*(LieElement a, const Rational& r) { return a *= r; }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.gens_ == b.gens_ && a.central_ == b.central_;
  }

  void add_generator_term(const Generator& g, const CentralPoly& coeff);
  void add_central_term(const CentralPoly& p) { central_ += p; }

 private:
  GeneratorTerms gens_;
  CentralPoly central_;
};

}  // namespace thv
