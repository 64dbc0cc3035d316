#pragma once

#include <vector>

#include "idealis/monomial.hpp"

namespace idealis {

/// A monomial ideal, stored as its unique minimal generating set: a
/// divisibility antichain in canonical order.  The zero ideal has no
/// generators; the unit ideal is generated by the constant monomial.
class MonomialIdeal {
public:
  static MonomialIdeal zero(VariableSetPtr vars);
  static MonomialIdeal unit(VariableSetPtr vars);

  /// Minimalizes: deduplicates, drops generators divisible by another,
  /// sorts canonically.  Generates the same ideal as the input set.
  static MonomialIdeal make(VariableSetPtr vars, std::vector<Monomial> gens);

  const VariableSet& vars() const { return *vars_; }
  const VariableSetPtr& vars_ptr() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Membership: some generator divides f.
  bool contains(const Monomial& f) const;

  /// Largest generator degree; 0 for the zero ideal.
  Natural max_degree() const;

  /// Ideal equality; valid generator-for-generator because minimal
  /// generating sets are unique and canonically ordered.
  bool operator==(const MonomialIdeal& other) const;
  bool operator!=(const MonomialIdeal& other) const {
    return !(*this == other);
  }

private:
  MonomialIdeal(VariableSetPtr vars, std::vector<Monomial> gens);

  VariableSetPtr vars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(VariableSetPtr vars, std::vector<Monomial> gens);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// k = 0 gives the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned long k);

/// Pairwise lcm of generators, minimalized.
MonomialIdeal ideal_intersection(const MonomialIdeal& a,
                                 const MonomialIdeal& b);

/// (I : f) for a monomial f.
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& f);

/// All monomials of total degree `degree` supported on one block.
/// degree = 0 gives the unit ideal.
MonomialIdeal veronese(VariableSetPtr vars, std::size_t block,
                       unsigned long degree);

}  // namespace idealis
