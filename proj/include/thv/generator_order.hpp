#pragma once

#include <string>
#include <vector>

#include "thv/generator.hpp"

namespace thv {

/// A strict total order on generators parameterizing a PBW basis. The default
/// rule places every L before every I, each kind ascending by index; an
/// optional finite "last set" is promoted above everything else, in the given
/// relative order. That is enough to make any finite generator set (and the
/// infinite all-I set, which the default order already handles) order-maximal
/// for left-ideal reduction.
class GeneratorOrder {
 public:
  GeneratorOrder() = default;  // the default order

  static GeneratorOrder defaults() { return GeneratorOrder(); }
  /// Throws UsageError on duplicate entries.
  static GeneratorOrder with_last_set(std::vector<Generator> last);

  bool is_default() const { return last_.empty(); }
  const std::vector<Generator>& last_set() const { return last_; }

  /// Strict comparison: a before b.
  bool less(const Generator& a, const Generator& b) const;

  friend bool operator==(const GeneratorOrder& a, const GeneratorOrder& b) {
    return a.last_ == b.last_;
  }

  /// "default" or "ideal-last=L[1],I[1]"
  std::string describe() const;

 private:
  std::vector<Generator> last_;
};

}  // namespace thv
