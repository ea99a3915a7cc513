#pragma once

#include <cstddef>
#include <vector>

#include "thv/rational.hpp"

namespace thv {

/// Exact null-space basis of an m x n rational matrix, via fraction-free
/// (Bareiss) elimination on a denominator-cleared integer matrix. Kernel
/// vectors are primitive integer vectors with positive leading entry, ordered
/// by free column; fully deterministic.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& rows,
                                                std::size_t ncols);

}  // namespace thv
