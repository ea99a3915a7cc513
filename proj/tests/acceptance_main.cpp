// Acceptance suite: one checked criterion per line, exact arithmetic
// throughout, wall-clock budgets enforced. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "thv/cli.hpp"
#include "thv/eval.hpp"
#include "thv/modules.hpp"
#include "thv/parser.hpp"
#include "thv/serialize.hpp"
#include "thv/structure.hpp"
#include "thv/verify.hpp"

using namespace thv;

namespace {

struct Check {
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

// Independent oracle for criterion 5: count pairs of partitions with total
// size n by explicit enumeration (no generating-function shortcut, no reuse
// of the module code).
void enumerate_partitions(int n, int cap, std::vector<int>& cur, std::size_t& count) {
  if (n == 0) {
    ++count;
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    cur.push_back(part);
    enumerate_partitions(n - part, part, cur, count);
    cur.pop_back();
  }
}

std::size_t count_partitions(int n) {
  std::size_t count = 0;
  std::vector<int> cur;
  enumerate_partitions(n, std::max(n, 1), cur, count);
  return count;
}

std::size_t count_two_colored(int n) {
  std::size_t total = 0;
  for (int s = 0; s <= n; ++s) total += count_partitions(s) * count_partitions(n - s);
  return total;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len, int max_idx) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(-max_idx, max_idx), kind(0, 1);
  Word w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i)
    w.push_back(Generator(kind(rng) ? Kind::I : Kind::L, idx(rng)));
  return w;
}

bool criterion_key_identity(std::string& detail) {
  const CommandResult r =
      run_command({"reduce", "I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3])", "--ideal", "all-I"});
  detail = "output: " + r.text.substr(0, r.text.find('\n'));
  return r.code == 0 && r.text == "-48*CLI^3\n";
}

bool criterion_cubic_membership(std::string& detail) {
  const CommandResult r = run_command(
      {"reduce", "(L[1]^3 - 6*L[2]*L[1] + 6*L[3])*L[2]", "--ideal", "gens=L[1],I[1]"});
  detail = "output: " + r.text.substr(0, r.text.find('\n'));
  return r.code == 0 && r.text == "0\n";
}

bool criterion_structure_suite(std::string& detail) {
  const StructureCheckReport par = verify_structure_window(-6, 6, Exec::Parallel);
  const StructureCheckReport ser = verify_structure_window(-6, 6, Exec::Serial);
  detail = std::to_string(par.pairs_checked) + " pairs, " +
           std::to_string(par.triples_checked) + " triples";
  if (!par.ok || !(par == ser)) {
    detail += "; " + par.first_violation;
    return false;
  }
  return par.pairs_checked == 26u * 26u && par.triples_checked == 26u * 26u * 26u;
}

bool criterion_enveloping_suite(std::string& detail) {
  std::mt19937_64 rng(0xC0FFEE);
  const GeneratorOrder def;
  const GeneratorOrder alt = GeneratorOrder::with_last_set({gen_i(2), gen_l(3)});
  std::size_t words = 0;

  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, 6, 4);
    ++words;
    const EnvelopingElement right = normal_order(w, def, {0, RewriteStrategy::RightmostFirst});
    const EnvelopingElement left = normal_order(w, def, {0, RewriteStrategy::LeftmostFirst});
    if (!(right == left)) {
      detail = "confluence fails on " + word_text(w);
      return false;
    }
    if (!(normal_order(right) == right)) {
      detail = "idempotence fails on " + word_text(w);
      return false;
    }
    const std::int64_t g = word_grade(w);
    for (const auto& [mono, coeff] : right.terms()) {
      if (word_grade(mono) != g || !is_sorted_word(mono, def)) {
        detail = "grade conservation fails on " + word_text(w);
        return false;
      }
    }
    if (!(renormalize(renormalize(right, alt), def) == right)) {
      detail = "renormalize round trip fails on " + word_text(w);
      return false;
    }
  }

  auto random_element = [&rng, &def](int terms) {
    EnvelopingElement out(def);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int t = 0; t < terms; ++t)
      out += normal_order(random_word(rng, 3, 3), def) * Rational(num(rng));
    return out;
  };
  for (int trial = 0; trial < 120; ++trial) {
    const EnvelopingElement a = random_element(2), b = random_element(2), c = random_element(2);
    if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) {
      detail = "associativity fails";
      return false;
    }
  }
  detail = std::to_string(words) + " random words, 120 associativity triples";
  return true;
}

bool criterion_verma_dims(std::string& detail) {
  const TruncatedVermaModule m(
      VermaParams{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), 5});
  const std::vector<std::size_t> expected{1, 2, 5, 10, 20, 36};
  detail = "dims:";
  for (int n = 0; n <= 5; ++n) {
    detail += " " + std::to_string(m.dim_at_depth(n));
    if (m.dim_at_depth(n) != expected[static_cast<std::size_t>(n)]) return false;
    if (m.dim_at_depth(n) != count_two_colored(n)) {
      detail += " (oracle disagrees at n=" + std::to_string(n) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_module_axioms(std::string& detail) {
  const std::vector<VermaParams> verma_points{
      {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), 6},
      {Rational(1, 2), Rational(-3), Rational(2), Rational(1, 3), Rational(-1, 5), 6},
      {Rational(-2), Rational(1), Rational(26), Rational(1), Rational(7, 11), 6},
  };
  std::uint64_t checks = 0;
  for (const VermaParams& p : verma_points) {
    const TruncatedVermaModule m(p);
    const AxiomCheckReport r = check_module_axioms(m, -2, 2);
    checks += r.checks;
    if (!r.pass()) {
      detail = "verma violation: " + r.violations.front().detail;
      return false;
    }
  }
  const std::vector<IntermediateSeriesParams> series_points{
      {Rational(1, 3), Rational(0), Rational(1), 3},
      {Rational(0), Rational(1), Rational(0), 3},
      {Rational(2), Rational(-1, 2), Rational(5), 3},
  };
  for (const IntermediateSeriesParams& p : series_points) {
    const IntermediateSeriesModule m(p);
    const AxiomCheckReport r = check_module_axioms(m, -3, 3);
    checks += r.checks;
    if (!r.pass()) {
      detail = "series violation: " + r.violations.front().detail;
      return false;
    }
  }
  detail = std::to_string(checks) + " exact compatibility checks";
  return true;
}

bool criterion_paper_harness(std::string& detail) {
  const CommandResult r = run_command({"verify-paper"});
  if (r.code != 0) {
    detail = "exit code " + std::to_string(r.code);
    return false;
  }
  const VerificationReport report = run_paper_suite(8);
  if (!suite_ok(report)) {
    detail = "suite not ok";
    return false;
  }
  std::size_t flagged = 0;
  for (const VerificationEntry& e : report.entries)
    if (e.status == ClaimStatus::FlaggedInconsistent) ++flagged;
  const VerificationEntry* f = report.find(kExpectedFlaggedId);
  if (flagged != 1 || f == nullptr ||
      f->statement.find("[L[-1], I[l]] = l*I[l-1]") == std::string::npos) {
    detail = "flagged entry missing or lacks the consistent substitute";
    return false;
  }
  detail = std::to_string(report.entries.size()) + " claims, exactly 1 flagged-inconsistent";
  return true;
}

bool criterion_harish_chandra(std::string& detail) {
  const std::vector<IntermediateSeriesParams> points{
      {Rational(1, 3), Rational(0), Rational(1), 4},
      {Rational(0), Rational(1), Rational(0), 4},
      {Rational(2), Rational(-1, 2), Rational(5), 4},
  };
  for (const IntermediateSeriesParams& p : points) {
    const IntermediateSeriesModule m(p);
    const HarishChandraReport hc = is_harish_chandra_window(m, -4, 4);
    if (!hc.harish_chandra || hc.max_dim > 1) {
      detail = "series window has dim > 1";
      return false;
    }
    // off-lattice queries are outside the support
    if (weight_space_dim(m, m.base_weight() + Rational(1, 2)) != 0 ||
        weight_space_dim(m, m.base_weight() - Rational(7, 3)) != 0) {
      detail = "off-lattice weight reported nonzero dimension";
      return false;
    }
  }
  const TruncatedVermaModule v(
      VermaParams{Rational(5, 7), Rational(0), Rational(0), Rational(0), Rational(0), 4});
  if (weight_space_dim(v, Rational(5, 7) + Rational(1, 2)) != 0) {
    detail = "off-lattice weight reported nonzero dimension (highest-weight module)";
    return false;
  }
  detail = "all witness dims <= 1; off-lattice dims all 0";
  return true;
}

}  // namespace

int main() {
  const std::vector<Check> checks{
      {"1 key identity reduces to -48*CLI^3 (< 1 s)", 1.0, criterion_key_identity},
      {"2 cubic element lies in the <L1,I1> left ideal (< 1 s)", 1.0,
       criterion_cubic_membership},
      {"3 antisymmetry + Jacobi exhaustive on [-6, 6] (< 30 s)", 30.0,
       criterion_structure_suite},
      {"4 enveloping ring suite on 500 random words (< 60 s)", 60.0,
       criterion_enveloping_suite},
      {"5 depth-5 dims match the 2-colored partition oracle (< 1 s)", 1.0,
       criterion_verma_dims},
      {"6 module axioms at the pinned parameter points (< 30 s)", 30.0,
       criterion_module_axioms},
      {"7 verify-paper passes with exactly one flagged entry (< 60 s)", 60.0,
       criterion_paper_harness},
      {"8 Harish-Chandra witnesses and lattice support", 60.0, criterion_harish_chandra},
  };

  int failures = 0;
  for (const Check& check : checks) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed >= check.limit_seconds) {
      ok = false;
      detail += " [time budget exceeded]";
    }
    std::printf("%s criterion %s [%.2fs] %s\n", ok ? "PASS" : "FAIL", check.name.c_str(),
                elapsed, detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria pass\n", checks.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
