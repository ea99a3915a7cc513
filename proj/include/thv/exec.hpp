#pragma once

namespace thv {

/// Execution policy for the sweep kernels (structure-constant checks, module
/// axiom sweeps, the verification suite). Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in and must produce a
/// byte-identical report.
enum class Exec { Serial, Parallel };

}  // namespace thv
