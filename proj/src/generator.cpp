#include "thv/generator.hpp"

namespace thv {

std::int64_t checked_index_sum(std::int64_t a, std::int64_t b) {
  // |a|, |b| <= kMaxIndex < 2^31, so the sum cannot overflow int64.
  std::int64_t s = a + b;
  if (s < -kMaxIndex || s > kMaxIndex)
    throw RangeError("generator index out of range after bracket: " + std::to_string(s));
  return s;
}

std::string to_string(const Generator& g) {
  return std::string(g.kind() == Kind::L ? "L" : "I") + "[" + std::to_string(g.index()) + "]";
}

}  // namespace thv
