#include "thv/generator_order.hpp"

#include <algorithm>

#include "thv/errors.hpp"

namespace thv {

GeneratorOrder GeneratorOrder::with_last_set(std::vector<Generator> last) {
  for (std::size_t i = 0; i < last.size(); ++i)
    for (std::size_t j = i + 1; j < last.size(); ++j)
      if (last[i] == last[j]) throw UsageError("duplicate generator in order last set");
  GeneratorOrder o;
  o.last_ = std::move(last);
  return o;
}

bool GeneratorOrder::less(const Generator& a, const Generator& b) const {
  // rank 0 = not in the last set; otherwise 1 + position.
  std::size_t ra = 0, rb = 0;
  for (std::size_t i = 0; i < last_.size(); ++i) {
    if (last_[i] == a) ra = i + 1;
    if (last_[i] == b) rb = i + 1;
  }
  if (ra != rb) return ra < rb;
  if (ra != 0) return false;  // same last-set element
  return CanonicalGenLess{}(a, b);
}

std::string GeneratorOrder::describe() const {
  if (last_.empty()) return "default";
  std::string s = "ideal-last=";
  for (std::size_t i = 0; i < last_.size(); ++i) {
    if (i) s += ",";
    s += to_string(last_[i]);
  }
  return s;
}

}  // namespace thv
