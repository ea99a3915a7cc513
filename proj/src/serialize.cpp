#include "thv/serialize.hpp"

namespace thv {

namespace {

std::string central_monomial_text(const CentralExponents& e) {
  std::string s;
  auto append = [&s](const char* name, std::uint32_t p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (p > 1) s += "^" + std::to_string(p);
  };
  append("C", e.c);
  append("CI", e.ci);
  append("CLI", e.cli);
  return s;  // empty for a constant term
}

// One polynomial term, sign split off: (negative?, "48*CLI^3").
std::pair<bool, std::string> poly_term_parts(const CentralExponents& e, const Rational& r) {
  const bool neg = r < 0;
  const Rational mag = neg ? Rational(-r) : r;
  const std::string vars = central_monomial_text(e);
  std::string body;
  if (vars.empty())
    body = to_string(mag);
  else if (mag == 1)
    body = vars;
  else
    body = to_string(mag) + "*" + vars;
  return {neg, body};
}

void join_term(std::string& out, bool neg, const std::string& body) {
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  out += body;
}

}  // namespace

std::string to_text(const CentralPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Higher exponent triples first, so "2*CLI + 1" rather than "1 + 2*CLI".
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [neg, body] = poly_term_parts(it->first, it->second);
    join_term(out, neg, body);
  }
  return out;
}

std::string to_text(const EnvelopingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [w, poly] : a.terms()) {
    if (w.empty()) {
      if (poly.terms().size() == 1) {
        auto [neg, body] = poly_term_parts(poly.terms().begin()->first,
                                           poly.terms().begin()->second);
        join_term(out, neg, body);
      } else {
        join_term(out, false, out.empty() ? to_text(poly) : "(" + to_text(poly) + ")");
      }
      continue;
    }
    const std::string mono = word_text(w);
    if (poly.terms().size() == 1) {
      auto [neg, body] = poly_term_parts(poly.terms().begin()->first,
                                         poly.terms().begin()->second);
      join_term(out, neg, body == "1" ? mono : body + "*" + mono);
    } else {
      join_term(out, false, "(" + to_text(poly) + ")*" + mono);
    }
  }
  return out;
}

std::string to_text(const LieElement& x) { return to_text(lift(x)); }

nlohmann::json to_json(const CentralPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exponents", {it->first.c, it->first.ci, it->first.cli}},
                     {"value", to_string(it->second)}});
  return terms;
}

nlohmann::json to_json(const EnvelopingElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, poly] : a.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const Generator& g : w) mono.push_back(to_string(g));
    terms.push_back({{"monomial", mono}, {"coefficient", to_json(poly)}});
  }
  return {{"schema", kSchema},
          {"kind", "element"},
          {"order", a.order().describe()},
          {"terms", terms},
          {"text", to_text(a)}};
}

nlohmann::json to_json(const StructureCheckReport& r) {
  return {{"schema", kSchema},
          {"kind", "structure-check"},
          {"window", {r.window_lo, r.window_hi}},
          {"pairs_checked", r.pairs_checked},
          {"triples_checked", r.triples_checked},
          {"ok", r.ok},
          {"first_violation", r.first_violation}};
}

nlohmann::json to_json(const SupportReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SupportRow& row : r.rows)
    rows.push_back(
        {{"offset", row.offset}, {"weight", to_string(row.weight)}, {"dim", row.dim}});
  return {{"schema", kSchema},
          {"kind", "support"},
          {"base_weight", to_string(r.base)},
          {"rows", rows}};
}

nlohmann::json to_json(const HarishChandraReport& r) {
  nlohmann::json j = to_json(r.support);
  j["kind"] = "harish-chandra";
  j["harish_chandra"] = r.harish_chandra;
  j["max_dim"] = r.max_dim;
  return j;
}

nlohmann::json to_json(const AxiomCheckReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const AxiomViolation& v : r.violations)
    violations.push_back(
        {{"x", v.x}, {"y", v.y}, {"vector", v.vector_label}, {"detail", v.detail}});
  return {{"schema", kSchema},
          {"kind", "axiom-check"},
          {"checks", r.checks},
          {"skipped", r.skipped},
          {"pass", r.pass()},
          {"violations", violations}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, flagged = 0;
  for (const VerificationEntry& e : r.entries) {
    entries.push_back({{"id", e.id},
                       {"statement", e.statement},
                       {"status", to_string(e.status)},
                       {"witness", e.witness},
                       {"computed", e.computed}});
    switch (e.status) {
      case ClaimStatus::Pass: ++pass; break;
      case ClaimStatus::Fail: ++fail; break;
      case ClaimStatus::FlaggedInconsistent: ++flagged; break;
    }
  }
  return {{"schema", kSchema},
          {"kind", "verification-report"},
          {"window", r.window},
          {"entries", entries},
          {"summary", {{"pass", pass}, {"fail", fail}, {"flagged_inconsistent", flagged}}},
          {"expected_flagged", {kExpectedFlaggedId}},
          {"ok", suite_ok(r)}};
}

std::string to_text(const VerificationReport& r) {
  std::string out;
  std::size_t pass = 0, fail = 0, flagged = 0;
  for (const VerificationEntry& e : r.entries) {
    out += "[" + to_string(e.status) + "] " + e.id + " -- " + e.statement + "\n";
    if (e.status != ClaimStatus::Pass) {
      out += "    witness:  " + e.witness + "\n";
      out += "    computed: " + e.computed + "\n";
    }
    switch (e.status) {
      case ClaimStatus::Pass: ++pass; break;
      case ClaimStatus::Fail: ++fail; break;
      case ClaimStatus::FlaggedInconsistent: ++flagged; break;
    }
  }
  out += std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
         std::to_string(flagged) + " flagged-inconsistent (expected exactly 1: " +
         kExpectedFlaggedId + "); window " + std::to_string(r.window) + "\n";
  return out;
}

}  // namespace thv
