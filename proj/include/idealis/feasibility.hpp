#pragma once

#include <gmpxx.h>

#include <vector>

namespace idealis {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Decides, in exact rational arithmetic, whether {x >= 0 : lhs.x = rhs}
/// is nonempty.  Phase-1 simplex with Bland's rule: deterministic and
/// terminating on every input.
bool has_nonnegative_solution(RationalMatrix lhs, RationalVector rhs);

}  // namespace idealis
