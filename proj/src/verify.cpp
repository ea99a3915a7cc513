#include "thv/verify.hpp"

#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thv/enveloping.hpp"
#include "thv/modules.hpp"
#include "thv/serialize.hpp"
#include "thv/structure.hpp"

namespace thv {

const char* const kExpectedFlaggedId = "i-lowering-as-printed";

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    default: return "flagged-inconsistent";
  }
}

bool VerificationReport::all_pass() const {
  for (const VerificationEntry& e : entries)
    if (e.status == ClaimStatus::Fail) return false;
  return true;
}

std::vector<std::string> VerificationReport::flagged_ids() const {
  std::vector<std::string> ids;
  for (const VerificationEntry& e : entries)
    if (e.status == ClaimStatus::FlaggedInconsistent) ids.push_back(e.id);
  return ids;
}

const VerificationEntry* VerificationReport::find(const std::string& id) const {
  for (const VerificationEntry& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

bool suite_ok(const VerificationReport& report) {
  return report.all_pass() && report.flagged_ids() == std::vector<std::string>{kExpectedFlaggedId};
}

namespace {

ClaimStatus status_of(bool ok) { return ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

// L_1^3 - 6 L_2 L_1 + 6 L_3, canonicalized under the default order.
EnvelopingElement cubic_element() {
  EnvelopingElement e =
      EnvelopingElement::monomial(Word{gen_l(1), gen_l(1), gen_l(1)});
  e -= multiply(EnvelopingElement::generator(gen_l(2)), EnvelopingElement::generator(gen_l(1))) *
       Rational(6);
  e += EnvelopingElement::generator(gen_l(3)) * Rational(6);
  return e;
}

EnvelopingElement key_identity_residue() {
  const EnvelopingElement icubed =
      EnvelopingElement::monomial(Word{gen_i(-1), gen_i(-1), gen_i(-1)});
  return reduce_mod_left_ideal(multiply(icubed, cubic_element()), LeftIdeal::all_i());
}

// Identity entries shared between groups are built by one helper each, so a
// merged report sees byte-identical duplicates.

VerificationEntry entry_i0_from_lowering() {
  const LieElement got = bracket_basis(gen_l(-1), gen_i(1));
  const LieElement want = LieElement::generator(gen_i(0));
  return VerificationEntry{"i0-from-lowering-bracket",
                           "[L[-1], I[1]] = I[0] exactly; the central cocycle term carries "
                           "(-1)^2 + (-1) = 0",
                           status_of(got == want), "[L[-1], I[1]]", to_text(got)};
}

VerificationEntry entry_heisenberg_central() {
  const LieElement got = bracket_basis(gen_i(1), gen_i(-1));
  const LieElement want = LieElement::central(CentralPoly::variable(CentralVar::CI));
  return VerificationEntry{"heisenberg-central-bracket", "[I[1], I[-1]] = CI",
                           status_of(got == want), "[I[1], I[-1]]", to_text(got)};
}

VerificationEntry entry_key_specialized() {
  const EnvelopingElement specialized =
      specialize_centrals(key_identity_residue(), std::nullopt, std::nullopt, Rational(0));
  return VerificationEntry{
      "key-identity-specialized",
      "the reduced cubic residue vanishes once CLI is specialized to 0",
      status_of(specialized.is_zero()),
      "specialize CLI=0 of reduce(I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3]), all-I)",
      to_text(specialized)};
}

// Checks got == want over an index range and builds a compact value list.
struct RangeCheck {
  bool ok = true;
  std::string values;

  void note(const std::string& var, int i, const LieElement& got, const LieElement& want,
            bool require_nonzero) {
    if (!(got == want) || (require_nonzero && got.is_zero())) ok = false;
    if (!values.empty()) values += "; ";
    values += var + "=" + std::to_string(i) + ": " + to_text(got);
  }
};

}  // namespace

VerificationReport verify_key_identity() {
  VerificationReport rep;
  const EnvelopingElement reduced = key_identity_residue();
  const EnvelopingElement expected =
      EnvelopingElement::central(CentralPoly::variable(CentralVar::CLI, 3) * Rational(-48));
  rep.entries.push_back(VerificationEntry{
      "key-identity",
      "I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3]) = -48*CLI^3 modulo the left ideal spanned by "
      "all U(L)*I[k]",
      status_of(reduced == expected),
      "reduce I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3]) --ideal all-I", to_text(reduced)});
  rep.entries.push_back(entry_key_specialized());
  return rep;
}

VerificationReport verify_cubic_annihilation(int window) {
  VerificationReport rep;
  rep.window = window;

  const EnvelopingElement a =
      multiply(cubic_element(), EnvelopingElement::generator(gen_l(2)));
  const EnvelopingElement red =
      reduce_mod_left_ideal(a, LeftIdeal::from_generators({gen_l(1), gen_i(1)}));
  rep.entries.push_back(VerificationEntry{
      "cubic-ideal-membership",
      "(L[1]^3 - 6*L[2]*L[1] + 6*L[3])*L[2] lies in U(L)*L[1] + U(L)*I[1], so it kills every "
      "vector annihilated by L[1] and I[1]",
      status_of(red.is_zero()),
      "reduce (L[1]^3 - 6*L[2]*L[1] + 6*L[3])*L[2] --ideal gens=L[1],I[1]", to_text(red)});

  {
    RangeCheck rc;
    for (int l = 1; l <= window; ++l) {
      const LieElement got = bracket_basis(gen_i(l), gen_l(1));
      const LieElement want =
          LieElement::generator(gen_i(l + 1), CentralPoly::constant(Rational(-l)));
      rc.note("l", l, got, want, /*require_nonzero=*/true);
    }
    rep.entries.push_back(VerificationEntry{
        "i-ladder-raising",
        "[I[l], L[1]] = -l*I[l+1] != 0 for l = 1.." + std::to_string(window) +
            ", the induction step that propagates I-annihilation upward",
        status_of(rc.ok), "bracket_basis(I[l], L[1]) over the window", rc.values});
  }

  {
    bool ok = true;
    std::string values;
    for (int k = 1; k <= window; ++k) {
      const EnvelopingElement lhs = multiply(EnvelopingElement::generator(gen_i(k)),
                                             EnvelopingElement::generator(gen_l(2)));
      EnvelopingElement rhs = multiply(EnvelopingElement::generator(gen_l(2)),
                                       EnvelopingElement::generator(gen_i(k)));
      rhs -= EnvelopingElement::generator(gen_i(k + 2)) * Rational(k);
      if (!(lhs == rhs)) ok = false;
      if (!values.empty()) values += "; ";
      values += "k=" + std::to_string(k) + ": " + to_text(lhs - rhs);
    }
    rep.entries.push_back(VerificationEntry{
        "i-past-l2-straightening",
        "I[k]*L[2] = L[2]*I[k] - k*I[k+2] in U(L) for k = 1.." + std::to_string(window),
        status_of(ok), "I[k]*L[2] - (L[2]*I[k] - k*I[k+2]) over the window", values});
  }
  return rep;
}

VerificationReport verify_bracket_facts(int window) {
  VerificationReport rep;
  rep.window = window;

  {
    RangeCheck rc;
    for (int k = 1; k <= window; ++k) {
      const LieElement got = bracket_basis(gen_l(1), gen_l(k));
      const LieElement want =
          LieElement::generator(gen_l(k + 1), CentralPoly::constant(Rational(k - 1)));
      rc.note("k", k, got, want, /*require_nonzero=*/k >= 2);
    }
    rep.entries.push_back(VerificationEntry{
        "virasoro-raising",
        "[L[1], L[k]] = (k-1)*L[k+1] for k = 1.." + std::to_string(window) +
            ", nonzero for k >= 2 (the range the annihilation argument uses)",
        status_of(rc.ok), "bracket_basis(L[1], L[k]) over the window", rc.values});
  }

  {
    RangeCheck rc;
    for (int l = 1; l <= window; ++l) {
      const LieElement got = bracket_basis(gen_i(1), gen_l(l));
      const LieElement want =
          LieElement::generator(gen_i(l + 1), CentralPoly::constant(Rational(-1)));
      rc.note("l", l, got, want, /*require_nonzero=*/true);
    }
    rep.entries.push_back(VerificationEntry{
        "mixed-raising",
        "[I[1], L[l]] = -I[l+1] != 0 for l = 1.." + std::to_string(window),
        status_of(rc.ok), "bracket_basis(I[1], L[l]) over the window", rc.values});
  }

  {
    RangeCheck rc;
    for (int l = 1; l <= window; ++l) {
      const LieElement got = bracket_basis(gen_l(-1), gen_l(l));
      const LieElement want =
          LieElement::generator(gen_l(l - 1), CentralPoly::constant(Rational(l + 1)));
      rc.note("l", l, got, want, /*require_nonzero=*/l >= 2);
    }
    rep.entries.push_back(VerificationEntry{
        "virasoro-lowering",
        "[L[-1], L[l]] = (l+1)*L[l-1] for l = 1.." + std::to_string(window) +
            ", nonzero for l > 1",
        status_of(rc.ok), "bracket_basis(L[-1], L[l]) over the window", rc.values});
  }

  {
    // Stated: [I[-1], I[l]] = I[l-1] != 0 for all l > 1. The structure
    // constants give 0 (the Heisenberg bracket only pairs opposite indices),
    // so the claim is flagged, and the consistent substitute
    // [L[-1], I[l]] = l*I[l-1] != 0 is verified instead. Never silently
    // repaired: the relations are the source of truth and this entry
    // documents the discrepancy.
    bool computed_zero = true;
    bool substitute_ok = true;
    std::string values;
    for (int l = 2; l <= window; ++l) {
      const LieElement got = bracket_basis(gen_i(-1), gen_i(l));
      if (!got.is_zero()) computed_zero = false;
      const LieElement sub = bracket_basis(gen_l(-1), gen_i(l));
      const LieElement sub_want =
          LieElement::generator(gen_i(l - 1), CentralPoly::constant(Rational(l)));
      if (!(sub == sub_want) || sub.is_zero()) substitute_ok = false;
      if (!values.empty()) values += "; ";
      values += "l=" + std::to_string(l) + ": [I[-1],I[l]] = " + to_text(got) +
                ", [L[-1],I[l]] = " + to_text(sub);
    }
    rep.entries.push_back(VerificationEntry{
        kExpectedFlaggedId,
        "stated: [I[-1], I[l]] = I[l-1] != 0 for l > 1; the structure constants give "
        "[I[-1], I[l]] = 0 for l != 1 -- flagged inconsistent, with consistent substitute "
        "[L[-1], I[l]] = l*I[l-1] != 0",
        computed_zero && substitute_ok ? ClaimStatus::FlaggedInconsistent : ClaimStatus::Fail,
        "bracket_basis(I[-1], I[l]) and bracket_basis(L[-1], I[l]) for l = 2.." +
            std::to_string(window),
        values});
  }

  rep.entries.push_back(entry_i0_from_lowering());
  rep.entries.push_back(entry_heisenberg_central());
  return rep;
}

namespace {

// Bracket closure of the seed set, restricted to indices with |m| <= bound.
std::set<std::pair<std::uint8_t, std::int64_t>> bracket_closure(
    const std::vector<Generator>& seeds, int bound) {
  std::set<std::pair<std::uint8_t, std::int64_t>> span;
  std::vector<Generator> members = seeds;
  for (const Generator& g : seeds)
    span.insert({static_cast<std::uint8_t>(g.kind()), g.index()});
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Generator> snapshot = members;
    for (const Generator& x : snapshot) {
      for (const Generator& y : snapshot) {
        const LieElement br = bracket_basis(x, y);
        for (const auto& [g, coeff] : br.generator_terms()) {
          if (g.index() < -bound || g.index() > bound) continue;
          if (coeff.is_zero()) continue;
          if (span.insert({static_cast<std::uint8_t>(g.kind()), g.index()}).second) {
            members.push_back(g);
            changed = true;
          }
        }
      }
    }
  }
  return span;
}

VerificationEntry generation_entry(const std::string& id, const std::string& statement,
                                   const std::vector<Generator>& seeds, int lo, int hi,
                                   int bound) {
  const auto span = bracket_closure(seeds, bound);
  bool ok = true;
  for (int k = lo; k <= hi; ++k) {
    if (!span.count({static_cast<std::uint8_t>(Kind::L), k})) ok = false;
    if (!span.count({static_cast<std::uint8_t>(Kind::I), k})) ok = false;
  }
  std::string computed = "closure = {";
  bool first = true;
  for (const auto& [kind, index] : span) {
    if (!first) computed += ", ";
    first = false;
    computed += to_string(Generator(static_cast<Kind>(kind), index));
  }
  computed += "}";
  std::string witness = "iterated bracket_basis closure of {";
  for (std::size_t i = 0; i < seeds.size(); ++i)
    witness += (i ? ", " : "") + to_string(seeds[i]);
  witness += "}";
  return VerificationEntry{id, statement, status_of(ok), witness, computed};
}

}  // namespace

VerificationReport verify_generation(int grade_bound) {
  if (grade_bound < 2) throw UsageError("generation check needs grade_bound >= 2");
  VerificationReport rep;
  rep.window = grade_bound;
  rep.entries.push_back(generation_entry(
      "positive-part-generation",
      "the bracket closure of {L[1], L[2], I[1]} spans every L[k], I[k] with 1 <= k <= " +
          std::to_string(grade_bound) +
          ", so annihilation by those three forces annihilation by the whole positive part",
      {gen_l(1), gen_l(2), gen_i(1)}, 1, grade_bound, grade_bound));
  rep.entries.push_back(generation_entry(
      "negative-part-generation",
      "mirror statement: the bracket closure of {L[-1], L[-2], I[-1]} spans every L[-k], "
      "I[-k] with 1 <= k <= " +
          std::to_string(grade_bound),
      {gen_l(-1), gen_l(-2), gen_i(-1)}, -grade_bound, -1, grade_bound));
  return rep;
}

namespace {

// Number of 2-colored partitions of n for n = 0..depth, by direct dynamic
// programming over parts of each color.
std::vector<Integer> two_colored_partition_counts(int depth) {
  std::vector<Integer> p(depth + 1, Integer(0));
  p[0] = 1;
  for (int color = 0; color < 2; ++color)
    for (int part = 1; part <= depth; ++part)
      for (int n = part; n <= depth; ++n) p[n] += p[n - part];
  return p;
}

}  // namespace

VerificationReport verify_support_consistency(int window) {
  VerificationReport rep;
  rep.window = window;

  {
    const IntermediateSeriesModule series(
        IntermediateSeriesParams{Rational(1, 3), Rational(0), Rational(1), window});
    const HarishChandraReport hc = is_harish_chandra_window(series, -window, window);
    bool ok = hc.harish_chandra;
    for (const SupportRow& row : hc.support.rows)
      if (row.dim != 1) ok = false;

    const int depth = std::min(window, 6);
    const TruncatedVermaModule verma(
        VermaParams{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), depth});
    const auto counts = two_colored_partition_counts(depth);
    std::string dims;
    for (int n = 0; n <= depth; ++n) {
      if (Integer(verma.dim_at_depth(n)) != counts[n]) ok = false;
      if (!dims.empty()) dims += " ";
      dims += std::to_string(verma.dim_at_depth(n));
    }
    rep.entries.push_back(VerificationEntry{
        "finite-weight-space-witnesses",
        "on the finite witnesses the infinite-dimensionality hypothesis never fires: series "
        "weight spaces all have dim 1, truncated highest-weight spaces have the 2-colored "
        "partition dimensions",
        status_of(ok),
        "support sweep over the window; highest-weight dims vs the partition count",
        "series max dim = " + std::to_string(hc.max_dim) + "; highest-weight dims = " + dims});
  }

  {
    RangeCheck rc;
    for (int k = 1; k <= window; ++k) {
      const LieElement got = bracket_basis(gen_l(-1), gen_i(-k + 1));
      const LieElement want =
          LieElement::generator(gen_i(-k), CentralPoly::constant(Rational(1 - k)));
      rc.note("k", k, got, want, /*require_nonzero=*/false);
    }
    rep.entries.push_back(VerificationEntry{
        "i-lowering-ladder",
        "[L[-1], I[-k+1]] = (1-k)*I[-k] for k = 1.." + std::to_string(window) +
            ", the induction that drives the I[-k]-annihilation chain downward",
        status_of(rc.ok), "bracket_basis(L[-1], I[-k+1]) over the window", rc.values});
  }

  rep.entries.push_back(entry_i0_from_lowering());
  rep.entries.push_back(entry_heisenberg_central());
  rep.entries.push_back(entry_key_specialized());
  return rep;
}

VerificationReport run_paper_suite(int window, Exec exec) {
  std::vector<VerificationReport> parts(5);
  auto run_part = [&](int i) {
    switch (i) {
      case 0: parts[0] = verify_key_identity(); break;
      case 1: parts[1] = verify_cubic_annihilation(window); break;
      case 2: parts[2] = verify_bracket_facts(window); break;
      case 3: parts[3] = verify_generation(window); break;
      default: parts[4] = verify_support_consistency(window); break;
    }
  };

#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < 5; ++i) run_part(i);
  } else {
    for (int i = 0; i < 5; ++i) run_part(i);
  }
#else
  (void)exec;
  for (int i = 0; i < 5; ++i) run_part(i);
#endif

  VerificationReport out;
  out.window = window;
  std::map<std::string, std::size_t> seen;
  for (const VerificationReport& part : parts) {
    for (const VerificationEntry& e : part.entries) {
      auto [it, inserted] = seen.emplace(e.id, out.entries.size());
      if (inserted) {
        out.entries.push_back(e);
      } else if (!(out.entries[it->second] == e)) {
        // Entries shared between groups must agree exactly; a mismatch is a
        // determinism regression and reported as such.
        out.entries[it->second].status = ClaimStatus::Fail;
        out.entries[it->second].computed += " / DUPLICATE MISMATCH: " + e.computed;
      }
    }
  }
  return out;
}

}  // namespace thv
