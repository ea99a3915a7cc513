#include "thv/central_poly.hpp"

#include "thv/errors.hpp"

namespace thv {

std::uint32_t CentralExponents::get(CentralVar v) const {
  switch (v) {
    case CentralVar::C: return c;
    case CentralVar::CI: return ci;
    default: return cli;
  }
}

CentralPoly CentralPoly::constant(Rational value) {
  CentralPoly p;
  p.add_term(CentralExponents{}, value);
  return p;
}

CentralPoly CentralPoly::variable(CentralVar v, std::uint32_t power) {
  CentralPoly p;
  if (power == 0) return one();
  CentralExponents e;
  switch (v) {
    case CentralVar::C: e.c = power; break;
    case CentralVar::CI: e.ci = power; break;
    case CentralVar::CLI: e.cli = power; break;
  }
  p.add_term(e, Rational(1));
  return p;
}

bool CentralPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_constant();
}

Rational CentralPoly::constant_value() const {
  auto it = terms_.find(CentralExponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t CentralPoly::degree_in(CentralVar v) const {
  std::uint32_t d = 0;
  for (const auto& [e, coeff] : terms_) d = std::max(d, e.get(v));
  return d;
}

void CentralPoly::add_term(const CentralExponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e, coeff);
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e, -coeff);
  return *this;
}

namespace {
std::uint32_t checked_exp_sum(std::uint32_t a, std::uint32_t b) {
  std::uint64_t s = std::uint64_t(a) + b;
  if (s > 0x7fffffffu) throw RangeError("central exponent overflow");
  return static_cast<std::uint32_t>(s);
}
}  // namespace

CentralPoly& CentralPoly::operator*=(const CentralPoly& o) {
  CentralPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      CentralExponents e{checked_exp_sum(ea.c, eb.c), checked_exp_sum(ea.ci, eb.ci),
                         checked_exp_sum(ea.cli, eb.cli)};
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

CentralPoly& CentralPoly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= r;
  return *this;
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly p(*this);
  for (auto& [e, coeff] : p.terms_) coeff = -coeff;
  return p;
}

namespace {
Rational pow_rational(const Rational& base, std::uint32_t e) {
  Rational r(1);
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}
}  // namespace

Rational CentralPoly::evaluate(const Rational& c, const Rational& ci, const Rational& cli) const {
  Rational out(0);
  for (const auto& [e, coeff] : terms_)
    out += coeff * pow_rational(c, e.c) * pow_rational(ci, e.ci) * pow_rational(cli, e.cli);
  return out;
}

CentralPoly CentralPoly::substitute(const std::optional<Rational>& c,
                                    const std::optional<Rational>& ci,
                                    const std::optional<Rational>& cli) const {
  CentralPoly out;
  for (const auto& [e, coeff] : terms_) {
    Rational r = coeff;
    CentralExponents kept = e;
    if (c) {
      r *= pow_rational(*c, e.c);
      kept.c = 0;
    }
    if (ci) {
      r *= pow_rational(*ci, e.ci);
      kept.ci = 0;
    }
    if (cli) {
      r *= pow_rational(*cli, e.cli);
      kept.cli = 0;
    }
    out.add_term(kept, r);
  }
  return out;
}

}  // namespace thv
