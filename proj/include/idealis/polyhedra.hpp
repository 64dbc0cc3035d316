#pragma once

#include <vector>

#include "idealis/feasibility.hpp"
#include "idealis/monomial.hpp"

namespace idealis {

using IntegerVector = std::vector<Natural>;

/// Componentwise ceiling of a nonnegative rational vector: integer entries
/// are fixed, fractional entries round up.
IntegerVector ceiling(const RationalVector& alpha);

/// A finite set of integer exponent vectors, deduplicated and sorted.
class LogSet {
public:
  LogSet() = default;
  explicit LogSet(std::vector<IntegerVector> points);

  const std::vector<IntegerVector>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  /// Length of the vectors; 0 for the empty set.
  std::size_t dimension() const;

  bool operator==(const LogSet& other) const {
    return points_ == other.points_;
  }

private:
  std::vector<IntegerVector> points_;
};

/// Exponent vectors of a set of monomials.
LogSet log_set(const std::vector<Monomial>& monomials);

/// All sums of k points chosen with repetition; k >= 1.
LogSet k_fold_log(const LogSet& points, unsigned long k);

/// True iff some convex combination of `points` is componentwise <= a,
/// i.e. a lies in the Newton polyhedron conv(points) + R_+^M.
/// Requires a >= 0 and points nonempty.
bool dominates_convex_combination(const IntegerVector& a, const LogSet& points);

/// True iff a is exactly a convex combination of `points`.
bool in_convex_hull_exact(const IntegerVector& a, const LogSet& points);

}  // namespace idealis
