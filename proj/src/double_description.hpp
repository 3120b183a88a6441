#pragma once

#include <cstddef>
#include <vector>

#include "torusfan/exactlin.hpp"

namespace torusfan::detail {

using IntVector = std::vector<Int>;

struct DdResult {
  std::vector<IntVector> rays;       // extreme rays modulo the lineality space
  std::vector<IntVector> lineality;  // basis of the lineality space
};

/// Double description (Motzkin) for {x in Q^dim : <a, x> >= 0 for every a}.
/// Rays are kept primitive; adjacency is decided by the combinatorial test
/// on tight-constraint sets.
DdResult double_description(std::size_t dim, const std::vector<IntVector>& inequalities);

/// Scales a rational vector to a primitive integer vector (zero stays zero).
IntVector integerize(const RatVector& v);
RatVector to_rat(const IntVector& v);

}  // namespace torusfan::detail
