#pragma once

#include <optional>

#include "idealis/ideal.hpp"
#include "idealis/polyhedra.hpp"

namespace idealis {

struct ClosureResult {
  MonomialIdeal closure;
  bool was_closed = false;
  /// Minimal generators of the closure that are not members of the input.
  std::vector<Monomial> added_generators;
};

/// Integral closure of a nonzero monomial ideal: the minimal generators of
/// the set of monomials whose exponent vectors lie in the Newton polyhedron
/// of the input.  `degree_cap` overrides the default candidate bound
/// max_degree(I) + variable_count (no minimal generator lies beyond it).
ClosureResult integral_closure(const MonomialIdeal& ideal);
ClosureResult integral_closure(const MonomialIdeal& ideal,
                               const Natural& degree_cap);

bool is_integrally_closed(const MonomialIdeal& ideal);

/// Least k <= k_max with f^k in I^k, if any.  A hit proves f lies in the
/// integral closure of I; a miss is inconclusive.
std::optional<unsigned long> power_membership_oracle(const Monomial& f,
                                                     const MonomialIdeal& ideal,
                                                     unsigned long k_max);

/// Blockwise hull ideal: generated by all products over blocks of monomials
/// whose block exponent vector is an exact lattice point of the convex hull
/// of that block's generator projections.
MonomialIdeal star_ideal(const MonomialIdeal& ideal);

/// Blockwise ceiling ideal: as star_ideal but taking ceilings of arbitrary
/// hull points per block; realized as the cross product of the blockwise
/// closure generator sets.
MonomialIdeal tilde_ideal(const MonomialIdeal& ideal);

/// Sum over all compositions (l_1,...,l_n) of 2 of the products of block
/// Veronese ideals of degrees l_i; equals the ideal of all degree-2
/// monomials.  Requires n >= 2.
MonomialIdeal structure_sum(const VariableSetPtr& vars);

/// Integral closure of the k-th power, computed from the k-fold sums of the
/// generator exponent vectors rather than from the expanded power.
MonomialIdeal closure_of_cover_power(const MonomialIdeal& cover,
                                     unsigned long k);

}  // namespace idealis
