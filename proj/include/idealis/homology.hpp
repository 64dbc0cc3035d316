#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idealis/ideal.hpp"

namespace idealis {

/// A verified linear-quotients order of the minimal generators: for each
/// j >= 2 the colon of the length-(j-1) prefix by the j-th generator is
/// generated by exactly r_values[j-1] distinct variables.  r_values[0] = 0.
struct LinearQuotientsCertificate {
  std::vector<Monomial> order;
  std::vector<std::size_t> r_values;
  std::size_t r_max = 0;
};

/// Tries the canonical stored order first, then a complete backtracking
/// search over orders for up to 12 generators.  The search respects the
/// nondecreasing-degree requirement.  Absent means no certificate was
/// found within the bound, not a disproof beyond it.
std::optional<LinearQuotientsCertificate> find_linear_quotients(
    const MonomialIdeal& ideal);

/// Recomputes every prefix colon and checks it is variable-generated with
/// the recorded counts.
bool validate_linear_quotients(const MonomialIdeal& ideal,
                               const LinearQuotientsCertificate& cert);

/// b_i = sum_j C(r_j, i) for i = 0..r_max; b_0 is the generator count.
std::vector<Natural> betti_from_certificate(
    const LinearQuotientsCertificate& cert);

/// C(M+1, M-i-1) * C(i+1, i) for 0 <= i <= M-1.
Natural closed_form_betti(std::size_t var_count, std::size_t i);

enum class IdealClassHint { StrongQuasiClosure, CoverIdeal, Principal, Generic };

/// Invariants of T/I.  Fields are populated only when a supporting route
/// exists (vertex covers for height/dim, a linear-quotients certificate for
/// the homological fields); absent fields carry provenance "unavailable".
struct InvariantReport {
  std::size_t variable_count = 0;
  std::optional<std::size_t> height;
  std::optional<std::size_t> big_height;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> projdim;
  std::optional<std::size_t> reg;
  std::optional<std::vector<Natural>> betti;
  std::optional<Natural> cm_type;
  IdealClassHint hint = IdealClassHint::Generic;
  std::map<std::string, std::string> provenance;
};

/// Requires a nonzero, non-unit ideal.
InvariantReport invariant_report(
    const MonomialIdeal& ideal,
    IdealClassHint hint = IdealClassHint::Generic);

}  // namespace idealis
