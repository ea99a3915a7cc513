#include <doctest.h>

#include "thv/cli.hpp"

using namespace thv;

namespace {

CommandResult run(std::initializer_list<std::string> args) {
  return run_command(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("bracket / normalize / reduce") {
  CommandResult r = run({"normalize", "L[2]*L[1]"});
  CHECK(r.code == 0);
  CHECK(r.text == "L[1]*L[2] - L[3]\n");

  r = run({"bracket", "L[2]", "L[-2]"});
  CHECK(r.code == 0);
  CHECK(r.text == "-4*L[0] + 1/2*C\n");

  r = run({"reduce", "I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3])", "--ideal", "all-I"});
  CHECK(r.code == 0);
  CHECK(r.text == "-48*CLI^3\n");

  r = run({"reduce", "(L[1]^3 - 6*L[2]*L[1] + 6*L[3])*L[2]", "--ideal", "gens=L[1],I[1]"});
  CHECK(r.code == 0);
  CHECK(r.text == "0\n");

  r = run({"normalize", "L[1]*I[1]", "--order", "ideal-last=L[1]"});
  CHECK(r.code == 0);
  CHECK(r.text == "I[1]*L[1] + I[2]\n");
}

TEST_CASE("verify-jacobi") {
  const CommandResult r = run({"verify-jacobi", "--window", "-3..3"});
  CHECK(r.code == 0);
  CHECK(r.text == "ok: antisymmetry on 196 pairs, jacobi on 2744 triples, window [-3, 3]\n");
}

TEST_CASE("verma modes") {
  CommandResult r = run({"verma", "--lambda", "0", "--hi", "0", "--c", "0", "--ci", "0",
                         "--cli", "0", "--depth", "5", "--dims"});
  CHECK(r.code == 0);
  CHECK(r.text == "1 2 5 10 20 36\n");

  r = run({"verma", "--lambda", "3", "--hi", "0", "--c", "0", "--ci", "0", "--cli", "0",
           "--depth", "2", "--act", "L[1]", "--on", "L[-1]"});
  CHECK(r.code == 0);
  CHECK(r.text == "-6*vac\n");

  r = run({"verma", "--lambda", "1/2", "--hi", "0", "--c", "0", "--ci", "0", "--cli", "0",
           "--depth", "3", "--support", "-3..1"});
  CHECK(r.code == 0);
  CHECK(r.text ==
        "offset -3: weight -5/2, dim 10\n"
        "offset -2: weight -3/2, dim 5\n"
        "offset -1: weight -1/2, dim 2\n"
        "offset 0: weight 1/2, dim 1\n"
        "offset 1: weight 3/2, dim 0\n");

  // exactly one mode
  r = run({"verma", "--lambda", "0", "--hi", "0", "--c", "0", "--ci", "0", "--cli", "0",
           "--depth", "1", "--dims", "--support", "0..0"});
  CHECK(r.code == 2);
}

TEST_CASE("intseries modes") {
  CommandResult r = run({"intseries", "--alpha", "1/3", "--beta", "2", "--f", "5", "--window",
                         "3", "--check-axioms"});
  CHECK(r.code == 0);
  CHECK(r.text.rfind("pass:", 0) == 0);

  r = run({"intseries", "--alpha", "1/3", "--beta", "0", "--f", "1", "--window", "2",
           "--support", "-2..2"});
  CHECK(r.code == 0);
  CHECK(r.text.find("dim 1") != std::string::npos);
}

TEST_CASE("verify-paper") {
  const CommandResult r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.text.find("[flagged-inconsistent] i-lowering-as-printed") != std::string::npos);
  CHECK(r.text.find("0 fail") != std::string::npos);
}

TEST_CASE("json mode") {
  const CommandResult r = run({"--json", "reduce", "I[-1]*L[1]", "--ideal", "all-I"});
  CHECK(r.code == 0);
  REQUIRE(r.doc.has_value());
  CHECK((*r.doc)["schema"] == "thv/1");
  CHECK((*r.doc)["text"] == "-2*CLI");
  CHECK(r.text == r.doc->dump(2) + "\n");

  // global flags also work after the subcommand
  const CommandResult r2 = run({"verify-paper", "--json"});
  CHECK(r2.code == 0);
  REQUIRE(r2.doc.has_value());
  CHECK((*r2.doc)["ok"] == true);
}

TEST_CASE("exit code contract") {
  CHECK(run({"normalize", "L[1"}).code == 2);                  // parse error
  CHECK(run({"bogus"}).code == 2);                             // unknown command
  CHECK(run({"normalize"}).code == 2);                         // missing positional
  CHECK(run({"reduce", "L[1]", "--ideal", "nonsense"}).code == 2);
  CHECK(run({"normalize", "L[1]", "--order", "nonsense"}).code == 2);
  CHECK(run({"verify-jacobi", "--window", "oops"}).code == 2);
  CHECK(run({}).code == 2);                                    // no command: usage
  CHECK(run({"--help"}).code == 0);

  // arithmetic / resource errors exit 1
  const CommandResult trunc = run({"verma", "--lambda", "0", "--hi", "0", "--c", "0", "--ci",
                                   "0", "--cli", "0", "--depth", "1", "--act", "L[-1]", "--on",
                                   "L[-1]"});
  CHECK(trunc.code == 1);
  CHECK(run({"--step-budget", "2", "reduce", "I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3])",
             "--ideal", "all-I"})
            .code == 1);
  CHECK(run({"normalize", "L[2000000000]*L[1000000000]"}).code == 1);  // bracket overflow
}

TEST_CASE("deterministic output") {
  const CommandResult a = run({"--json", "verify-paper", "--window", "4"});
  const CommandResult b = run({"--json", "verify-paper", "--window", "4"});
  CHECK(a.text == b.text);
  CHECK(a.code == 0);
}
