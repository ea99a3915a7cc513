#pragma once

#include <string>
#include <vector>

#include "thv/exec.hpp"

namespace thv {

enum class ClaimStatus { Pass, Fail, FlaggedInconsistent };

std::string to_string(ClaimStatus s);

/// One machine-checked claim. `statement` is the identity being checked,
/// `witness` the computation that checked it, `computed` the canonical
/// serialization of what came out. All equalities are exact; there are no
/// tolerances anywhere in this module.
struct VerificationEntry {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::Pass;
  std::string witness;
  std::string computed;

  friend bool operator==(const VerificationEntry&, const VerificationEntry&) = default;
};

struct VerificationReport {
  int window = 0;
  std::vector<VerificationEntry> entries;

  bool all_pass() const;  // no Fail entries (flagged entries do not fail)
  std::vector<std::string> flagged_ids() const;
  const VerificationEntry* find(const std::string& id) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Entry groups. Each is an independent pure computation; ids are unique
// across the whole suite, and the few identities that belong to more than
// one group are emitted identically and merged by id.

/// The central cubic identity: I_-1^3 (L_1^3 - 6 L_2 L_1 + 6 L_3) reduces to
/// -48 c_LI^3 modulo the left ideal spanned by all U(L) I_k, and the residue
/// vanishes once c_LI is specialized to 0.
VerificationReport verify_key_identity();

/// (L_1^3 - 6 L_2 L_1 + 6 L_3) L_2 lies in U(L)L_1 + U(L)I_1, plus the two
/// ladder identities that propagate annihilation upward.
VerificationReport verify_cubic_annihilation(int window = 8);

/// The raising/lowering bracket identities, recomputed from the structure
/// constants, with their non-vanishing ranges; contains the one entry that is
/// flagged inconsistent against its stated form (the I-lowering line), with
/// the consistent substitute.
VerificationReport verify_bracket_facts(int window = 8);

/// Annihilation by {L_1, L_2, I_1} forces annihilation by the whole positive
/// part (bracket closure spans every L_k, I_k with 1 <= k <= grade_bound);
/// mirror statement on the negative side.
VerificationReport verify_generation(int grade_bound = 8);

/// Harish-Chandra witnesses (finite weight-space dimensions on the series and
/// truncated highest-weight modules) and the lowering ladder that drives the
/// I_-k annihilation chain.
VerificationReport verify_support_consistency(int window = 8);

/// The id of the one entry expected to be flagged-inconsistent; any other
/// flagged entry is a regression.
extern const char* const kExpectedFlaggedId;

/// Runs every group and merges by claim id into a fixed canonical order.
/// Deterministic: repeated runs produce byte-identical reports.
VerificationReport run_paper_suite(int window = 8, Exec exec = Exec::Parallel);

/// Exit-status contract for the full suite: all entries pass and the flagged
/// set is exactly {kExpectedFlaggedId}.
bool suite_ok(const VerificationReport& report);

}  // namespace thv
