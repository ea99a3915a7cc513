#pragma once

#include <cstdint>
#include <string>

#include "thv/errors.hpp"

namespace thv {

/// The two families of non-central basis generators. Central elements
/// (C, C_I, C_LI) live in the coefficient ring, not here; I_0 stays a
/// generator because it shows up inside bracket computations.
enum class Kind : std::uint8_t { L = 0, I = 1 };

/// Largest legal generator index magnitude. Brackets add indices, so keeping
/// one slot of headroom below 2^31 makes every single addition checkable.
inline constexpr std::int64_t kMaxIndex = 2147483646;  // 2^31 - 2

/// Checked index addition; the only way indices combine.
std::int64_t checked_index_sum(std::int64_t a, std::int64_t b);

/// A basis generator L_m or I_m. Construction validates the index range;
/// equality is structural.
class Generator {
 public:
  Generator(Kind kind, std::int64_t index) : kind_(kind), index_(index) {
    if (index < -kMaxIndex || index > kMaxIndex)
      throw RangeError("generator index out of range: " + std::to_string(index));
  }

  Kind kind() const { return kind_; }
  std::int64_t index() const { return index_; }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind_ == b.kind_ && a.index_ == b.index_;
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }

 private:
  Kind kind_;
  std::int64_t index_;
};

inline Generator gen_l(std::int64_t m) { return Generator(Kind::L, m); }
inline Generator gen_i(std::int64_t m) { return Generator(Kind::I, m); }

/// The L_0-adjoint eigenvalue: [L_0, X_m] = m X_m.
inline std::int64_t grade(const Generator& g) { return g.index(); }

/// Fixed display/canonical comparison (kind L before I, then index). This is
/// also the default PBW order; GeneratorOrder variants only promote a finite
/// "last set" above it.
struct CanonicalGenLess {
  bool operator()(const Generator& a, const Generator& b) const {
    if (a.kind() != b.kind()) return a.kind() == Kind::L;
    return a.index() < b.index();
  }
};

/// "L[3]", "I[-1]"
std::string to_string(const Generator& g);

}  // namespace thv
