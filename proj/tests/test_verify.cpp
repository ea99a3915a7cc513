#include <doctest.h>

#include <set>

#include "thv/serialize.hpp"
#include "thv/verify.hpp"

using namespace thv;

TEST_CASE("each group passes on its own") {
  CHECK(verify_key_identity().all_pass());
  CHECK(verify_cubic_annihilation(8).all_pass());
  CHECK(verify_bracket_facts(8).all_pass());  // the flagged entry is not a failure
  CHECK(verify_generation(8).all_pass());
  CHECK(verify_support_consistency(8).all_pass());
}

TEST_CASE("full suite: pass with exactly one flagged entry") {
  const VerificationReport r = run_paper_suite(8);
  CHECK(suite_ok(r));
  CHECK(r.all_pass());
  CHECK(r.flagged_ids() == std::vector<std::string>{kExpectedFlaggedId});

  std::set<std::string> ids;
  for (const VerificationEntry& e : r.entries) CHECK(ids.insert(e.id).second);

  // the claims the harness must cover
  for (const char* id :
       {"key-identity", "key-identity-specialized", "cubic-ideal-membership",
        "i-ladder-raising", "i-past-l2-straightening", "virasoro-raising", "mixed-raising",
        "virasoro-lowering", "i-lowering-as-printed", "i0-from-lowering-bracket",
        "heisenberg-central-bracket", "positive-part-generation", "negative-part-generation",
        "finite-weight-space-witnesses", "i-lowering-ladder"})
    CHECK(r.find(id) != nullptr);

  CHECK(r.find("key-identity")->computed == "-48*CLI^3");
  // the flagged entry carries the consistent substitute
  CHECK(r.find(kExpectedFlaggedId)->statement.find("[L[-1], I[l]] = l*I[l-1]") !=
        std::string::npos);
}

TEST_CASE("reports are deterministic and policy-independent") {
  const VerificationReport a = run_paper_suite(8, Exec::Parallel);
  const VerificationReport b = run_paper_suite(8, Exec::Parallel);
  const VerificationReport c = run_paper_suite(8, Exec::Serial);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(to_text(a) == to_text(c));
  CHECK(to_json(a).dump() == to_json(c).dump());
}

TEST_CASE("window is configurable") {
  const VerificationReport r = run_paper_suite(4);
  CHECK(suite_ok(r));
  CHECK(r.window == 4);
  CHECK_THROWS_AS(verify_generation(1), UsageError);
}

TEST_CASE("status strings") {
  CHECK(to_string(ClaimStatus::Pass) == "pass");
  CHECK(to_string(ClaimStatus::Fail) == "fail");
  CHECK(to_string(ClaimStatus::FlaggedInconsistent) == "flagged-inconsistent");
}
