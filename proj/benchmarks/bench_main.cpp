// Compares the serial reference implementations of the sweep kernels against
// their OpenMP variants. The two must produce identical reports; the table
// shows wall-clock time and speedup.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thv/modules.hpp"
#include "thv/structure.hpp"
#include "thv/verify.hpp"

using namespace thv;

namespace {

double time_of(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, const std::function<bool(Exec)>& run) {
  bool equal = true;
  const double serial = time_of([&] { equal = run(Exec::Serial) && equal; });
  const double parallel = time_of([&] { equal = run(Exec::Parallel) && equal; });
  std::printf("%-44s %9.3fs %9.3fs %7.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial path\n\n");
#endif
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  for (int w : {6, 8, 10}) {
    StructureCheckReport ref = verify_structure_window(-w, w, Exec::Serial);
    row("structure sweep, window [-" + std::to_string(w) + ", " + std::to_string(w) + "]",
        [&, w](Exec exec) { return verify_structure_window(-w, w, exec) == ref; });
  }

  for (int depth : {6, 7}) {
    const TruncatedVermaModule m(VermaParams{Rational(1, 2), Rational(-3), Rational(2),
                                             Rational(1, 3), Rational(-1, 5), depth});
    const AxiomCheckReport ref = check_module_axioms(m, -2, 2, {}, Exec::Serial);
    row("module axioms, depth " + std::to_string(depth) + ", gens [-2, 2]",
        [&](Exec exec) { return check_module_axioms(m, -2, 2, {}, exec) == ref; });
  }

  {
    const VerificationReport ref = run_paper_suite(10, Exec::Serial);
    row("verification suite, window 10",
        [&](Exec exec) { return run_paper_suite(10, exec) == ref; });
  }
  return 0;
}
