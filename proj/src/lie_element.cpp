#include "thv/lie_element.hpp"

namespace thv {

LieElement LieElement::generator(const Generator& g, CentralPoly coeff) {
  LieElement x;
  x.add_generator_term(g, coeff);
  return x;
}

LieElement LieElement::central(CentralPoly p) {
  LieElement x;
  x.central_ = std::move(p);
  return x;
}

void LieElement::add_generator_term(const Generator& g, const CentralPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = gens_.emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) gens_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [g, coeff] : o.gens_) add_generator_term(g, coeff);
  central_ += o.central_;
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [g, coeff] : o.gens_) add_generator_term(g, -coeff);
  central_ -= o.central_;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement x;
  for (const auto& [g, coeff] : gens_) x.gens_.emplace(g, -coeff);
  x.central_ = -central_;
  return x;
}

LieElement& LieElement::operator*=(const CentralPoly& p) {
  if (p.is_zero()) {
    gens_.clear();
    central_ = CentralPoly::zero();
    return *this;
  }
  GeneratorTerms out;
  for (auto& [g, coeff] : gens_) {
    CentralPoly c = coeff * p;
    if (!c.is_zero()) out.emplace(g, std::move(c));
  }
  gens_ = std::move(out);
  central_ *= p;
  return *this;
}

LieElement& LieElement::operator*=(const Rational& r) { return *this *= CentralPoly::constant(r); }

}  // namespace thv
