#pragma once

#include <string>

#include <json.hpp>

#include "thv/enveloping.hpp"
#include "thv/modules.hpp"
#include "thv/structure.hpp"
#include "thv/verify.hpp"

namespace thv {

// Canonical text and structured (JSON) serialization. Text output is
// deterministic, byte-stable, and for elements it is parseable back by the
// frontend grammar (round-trip: eval(parse(to_text(x))) == x). Monomials are
// emitted in the fixed enumeration order (length, then lexicographic).

inline constexpr const char* kSchema = "thv/1";

std::string to_text(const CentralPoly& p);
std::string to_text(const EnvelopingElement& a);
std::string to_text(const LieElement& x);

nlohmann::json to_json(const CentralPoly& p);
nlohmann::json to_json(const EnvelopingElement& a);

nlohmann::json to_json(const StructureCheckReport& r);
nlohmann::json to_json(const SupportReport& r);
nlohmann::json to_json(const HarishChandraReport& r);
nlohmann::json to_json(const AxiomCheckReport& r);
nlohmann::json to_json(const VerificationReport& r);

std::string to_text(const VerificationReport& r);

/// "3/2*L[-1]*vac + I[-1]*vac", "0"; terms by basis id.
template <WeightModule M>
std::string to_text(const ModuleVector& v, const M& m) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [id, r] : v.terms()) {
    const bool neg = r < 0;
    const Rational mag = neg ? Rational(-r) : r;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += m.basis_label(id);
  }
  return out;
}

template <WeightModule M>
nlohmann::json to_json(const ModuleVector& v, const M& m) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [id, r] : v.terms())
    terms.push_back({{"basis", m.basis_label(id)}, {"coefficient", to_string(r)}});
  return {{"schema", kSchema},
          {"kind", "module-vector"},
          {"terms", terms},
          {"text", to_text(v, m)}};
}

}  // namespace thv
