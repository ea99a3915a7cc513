#include <doctest.h>

#include "thv/eval.hpp"
#include "thv/parser.hpp"
#include "thv/serialize.hpp"

using namespace thv;

namespace {

EnvelopingElement ev(const std::string& s) { return eval(*parse(s)); }

}  // namespace

TEST_CASE("golden text forms") {
  CHECK(to_text(EnvelopingElement::zero()) == "0");
  CHECK(to_text(EnvelopingElement::unit()) == "1");
  CHECK(to_text(EnvelopingElement::central(CentralPoly::variable(CentralVar::CLI, 3) *
                                           Rational(-48))) == "-48*CLI^3");
  CHECK(to_text(ev("L[2]*L[1]")) == "L[1]*L[2] - L[3]");
  CHECK(to_text(ev("I[-1]^3")) == "I[-1]^3");
  CHECK(to_text(ev("[L[2], L[-2]]")) == "-4*L[0] + 1/2*C");
  CHECK(to_text(ev("[L[1], I[-1]]")) == "-I[0] + 2*CLI");
  CHECK(to_text(ev("(2*CLI + 1)*L[0]")) == "(2*CLI + 1)*L[0]");
  CHECK(to_text(ev("1/2*C")) == "1/2*C");
  CHECK(to_text(ev("C - CI")) == "C - CI");  // fixed exponent-triple order
  // longer monomials print first, the pure central part last
  CHECK(to_text(ev("5 + L[1] + L[1]*L[2]")) == "L[1]*L[2] + L[1] + 5");
}

TEST_CASE("text forms round trip") {
  for (const char* s :
       {"L[1]*L[2] - L[3]", "-48*CLI^3", "(2*CLI + 1)*L[0]", "-I[0] + 2*CLI",
        "I[-1]^3*L[1]^2 - 1/3*I[2]", "0", "1"}) {
    const EnvelopingElement x = ev(s);
    CHECK(ev(to_text(x)) == x);
    CHECK(to_text(ev(to_text(x))) == to_text(x));  // fixpoint
  }
}

TEST_CASE("json document shape is pinned") {
  const nlohmann::json j = to_json(ev("1/2*C"));
  CHECK(j.dump() ==
        R"({"kind":"element","order":"default","schema":"thv/1",)"
        R"("terms":[{"coefficient":[{"exponents":[1,0,0],"value":"1/2"}],"monomial":[]}],)"
        R"("text":"1/2*C"})");

  const nlohmann::json k = to_json(ev("L[2]*L[1]"));
  CHECK(k["schema"] == "thv/1");
  CHECK(k["text"] == "L[1]*L[2] - L[3]");
  REQUIRE(k["terms"].size() == 2);
  CHECK(k["terms"][0]["monomial"] == nlohmann::json::array({"L[1]", "L[2]"}));
  CHECK(k["terms"][1]["coefficient"][0]["value"] == "-1");
}

TEST_CASE("module vector text") {
  const TruncatedVermaModule m(
      VermaParams{Rational(3), Rational(0), Rational(0), Rational(0), Rational(0), 2});
  const ModuleVector vac = ModuleVector::basis_vector(m.flat_id(0, 0));
  CHECK(to_text(vac, m) == "vac");
  CHECK(to_text(vac * Rational(-6), m) == "-6*vac");
  ModuleVector mixed = ModuleVector::basis_vector(m.flat_id(1, 0)) * Rational(3, 2);
  mixed += ModuleVector::basis_vector(m.flat_id(1, 1));
  CHECK(to_text(mixed, m) == "3/2*L[-1]*vac + I[-1]*vac");
  CHECK(to_text(ModuleVector(), m) == "0");

  const nlohmann::json j = to_json(mixed, m);
  CHECK(j["schema"] == "thv/1");
  CHECK(j["kind"] == "module-vector");
  CHECK(j["terms"][0]["basis"] == "L[-1]*vac");
}

TEST_CASE("report serialization is stable") {
  const VerificationReport r = run_paper_suite(4);
  const std::string text = to_text(r);
  CHECK(text.find("[pass] key-identity") != std::string::npos);
  CHECK(text.find("[flagged-inconsistent] i-lowering-as-printed") != std::string::npos);
  CHECK(text.find("1 flagged-inconsistent") != std::string::npos);

  const nlohmann::json j = to_json(r);
  CHECK(j["schema"] == "thv/1");
  CHECK(j["ok"] == true);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["flagged_inconsistent"] == 1);
  CHECK(j["expected_flagged"] == nlohmann::json::array({"i-lowering-as-printed"}));
}

TEST_CASE("structure and axiom report json") {
  const StructureCheckReport s = verify_structure_window(-2, 2);
  const nlohmann::json js = to_json(s);
  CHECK(js["ok"] == true);
  CHECK(js["pairs_checked"] == 100);
  CHECK(js["triples_checked"] == 1000);

  const IntermediateSeriesModule series(
      IntermediateSeriesParams{Rational(0), Rational(1), Rational(0), 2});
  const nlohmann::json ja = to_json(check_module_axioms(series, -1, 1));
  CHECK(ja["pass"] == true);
  CHECK(ja["violations"].empty());

  const nlohmann::json jh = to_json(is_harish_chandra_window(series, -2, 2));
  CHECK(jh["harish_chandra"] == true);
  CHECK(jh["max_dim"] == 1);
  CHECK(jh["rows"].size() == 5);
}
