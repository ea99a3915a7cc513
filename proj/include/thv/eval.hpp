#pragma once

#include "thv/enveloping.hpp"
#include "thv/parser.hpp"

namespace thv {

/// Evaluates an AST to canonical form under the given order. Brackets with
/// both operands of filtration degree <= 1 go through the structure-constant
/// bracket; higher degrees use the commutator ab - ba (the two agree on the
/// overlap, which is a tested property).
EnvelopingElement eval(const Expression& e, const GeneratorOrder& order = GeneratorOrder(),
                       const RewriteOptions& opts = {});

}  // namespace thv
