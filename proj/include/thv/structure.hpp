#pragma once

#include <cstdint>
#include <string>

#include "thv/exec.hpp"
#include "thv/lie_element.hpp"

namespace thv {

// Defining relations of the twisted Heisenberg-Virasoro algebra:
//   [L_n, L_m] = (m-n) L_{n+m} + delta_{n,-m} (n^3-n)/12 C
//   [L_n, I_m] = m I_{n+m}     + delta_{n,-m} (n^2+n)    C_LI
//   [I_n, I_m] = n delta_{n,-m} C_I
//   [*, C] = [*, C_I] = [*, C_LI] = 0
// The (n^2+n) cocycle is implemented exactly as stated; the verification
// harness depends on this sign convention.

/// Bracket of two basis generators. Throws RangeError if the resulting index
/// leaves the safe range.
LieElement bracket_basis(const Generator& x, const Generator& y);

/// Bilinear extension; central parts contribute nothing.
LieElement bracket(const LieElement& x, const LieElement& y);

struct StructureCheckReport {
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
  bool ok = true;
  std::string first_violation;  // empty when ok

  friend bool operator==(const StructureCheckReport&, const StructureCheckReport&) = default;
};

/// Exhaustive antisymmetry + Jacobi sweep over every basis pair/triple with
/// indices in [lo, hi], both kinds. Exact arithmetic, no tolerance; a
/// violation is reported (the first one in enumeration order), not thrown.
StructureCheckReport verify_structure_window(std::int64_t lo, std::int64_t hi,
                                             Exec exec = Exec::Parallel);

}  // namespace thv
