#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "idealis/variables.hpp"

namespace idealis {

/// Arbitrary-precision natural number (nonnegative by convention).
using Natural = mpz_class;
using Exponents = std::vector<Natural>;

/// A monomial over a VariableSet, stored as its exponent vector.
/// Immutable after construction; cheap to copy (the variable set is shared).
class Monomial {
public:
  Monomial(VariableSetPtr vars, Exponents exponents);

  static Monomial one(VariableSetPtr vars);
  static Monomial variable(VariableSetPtr vars, std::size_t block,
                           std::size_t pos);

  const VariableSet& vars() const { return *vars_; }
  const VariableSetPtr& vars_ptr() const { return vars_; }
  const Exponents& exponents() const { return exponents_; }
  const Natural& exponent(std::size_t flat) const { return exponents_[flat]; }
  const Natural& degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial pow(unsigned long k) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// this / gcd(this, f): componentwise truncated subtraction.
  Monomial colon_by(const Monomial& f) const;

  /// Flat indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  /// Text form "x1_1^2*x2_1"; "1" for the constant monomial.
  std::string str() const;

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
  VariableSetPtr vars_;
  Exponents exponents_;
  Natural degree_;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Canonical generator order: degree ascending, ties broken by descending
/// lexicographic comparison with x1_1 > x1_2 > ... > xn_mn.
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace idealis
