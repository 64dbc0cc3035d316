#include "idealis/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "idealis/graphs.hpp"

namespace idealis {

namespace {

Natural binomial(unsigned long n, unsigned long k) {
  Natural b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Number of variables generating (prefix : g), or absent when some minimal
// generator of the colon has degree != 1.
std::optional<std::size_t> linear_colon_count(
    const std::vector<Monomial>& prefix, const Monomial& g) {
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  for (const Monomial& p : prefix) quotients.push_back(p.colon_by(g));
  MonomialIdeal colon = MonomialIdeal::make(g.vars_ptr(), std::move(quotients));
  for (const Monomial& q : colon.generators())
    if (q.degree() != 1) return std::nullopt;
  return colon.generator_count();
}

std::optional<LinearQuotientsCertificate> try_order(
    const std::vector<Monomial>& order) {
  LinearQuotientsCertificate cert;
  cert.order = order;
  cert.r_values.assign(order.size(), 0);
  std::vector<Monomial> prefix;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j > 0) {
      auto r = linear_colon_count(prefix, order[j]);
      if (!r) return std::nullopt;
      cert.r_values[j] = *r;
      if (*r > cert.r_max) cert.r_max = *r;
    }
    prefix.push_back(order[j]);
  }
  return cert;
}

constexpr std::size_t kSearchBound = 12;

// Backtracking over prefix *sets*: whether a partial order extends depends
// only on the set of generators placed so far (the colon ideal and the
// maximal placed degree are both set-determined), so dead prefixes are
// memoized by bitmask.
struct QuotientSearch {
  const std::vector<Monomial>& gens;
  std::vector<Monomial> prefix;
  std::vector<std::size_t> order_idx;
  std::vector<std::size_t> r_values;
  std::set<std::uint32_t> dead;

  explicit QuotientSearch(const std::vector<Monomial>& gens) : gens(gens) {}

  bool extend(std::uint32_t used) {
    if (prefix.size() == gens.size()) return true;
    if (dead.count(used)) return false;
    Natural placed_degree(0);
    for (std::size_t i : order_idx)
      if (gens[i].degree() > placed_degree) placed_degree = gens[i].degree();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (used & (std::uint32_t(1) << i)) continue;
      if (gens[i].degree() < placed_degree) continue;
      std::optional<std::size_t> r(0);
      if (!prefix.empty()) r = linear_colon_count(prefix, gens[i]);
      if (!r) continue;
      prefix.push_back(gens[i]);
      order_idx.push_back(i);
      r_values.push_back(*r);
      if (extend(used | (std::uint32_t(1) << i))) return true;
      prefix.pop_back();
      order_idx.pop_back();
      r_values.pop_back();
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

std::optional<LinearQuotientsCertificate> find_linear_quotients(
    const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  const std::vector<Monomial>& gens = ideal.generators();
  if (auto cert = try_order(gens)) return cert;
  if (gens.size() > kSearchBound) return std::nullopt;

  QuotientSearch search(gens);
  if (!search.extend(0)) return std::nullopt;
  LinearQuotientsCertificate cert;
  cert.order = search.prefix;
  cert.r_values = search.r_values;
  for (std::size_t r : cert.r_values)
    if (r > cert.r_max) cert.r_max = r;
  return cert;
}

bool validate_linear_quotients(const MonomialIdeal& ideal,
                               const LinearQuotientsCertificate& cert) {
  if (cert.order.size() != ideal.generator_count()) return false;
  if (cert.r_values.size() != cert.order.size()) return false;
  std::vector<Monomial> sorted = cert.order;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (!(sorted[i] == ideal.generators()[i])) return false;
  std::size_t seen_max = 0;
  std::vector<Monomial> prefix;
  for (std::size_t j = 0; j < cert.order.size(); ++j) {
    if (j > 0 && cert.order[j].degree() < cert.order[j - 1].degree())
      return false;
    if (j == 0) {
      if (cert.r_values[0] != 0) return false;
    } else {
      auto r = linear_colon_count(prefix, cert.order[j]);
      if (!r || *r != cert.r_values[j]) return false;
    }
    seen_max = std::max(seen_max, cert.r_values[j]);
    prefix.push_back(cert.order[j]);
  }
  return seen_max == cert.r_max;
}

std::vector<Natural> betti_from_certificate(
    const LinearQuotientsCertificate& cert) {
  std::vector<Natural> betti(cert.r_max + 1, Natural(0));
  for (std::size_t i = 0; i <= cert.r_max; ++i)
    for (std::size_t r : cert.r_values) betti[i] += binomial(r, i);
  return betti;
}

Natural closed_form_betti(std::size_t var_count, std::size_t i) {
  if (var_count == 0 || i + 1 > var_count)
    throw std::out_of_range("closed-form Betti index needs 0 <= i <= M-1");
  return binomial(var_count + 1, var_count - i - 1) * binomial(i + 1, i);
}

InvariantReport invariant_report(const MonomialIdeal& ideal,
                                 IdealClassHint hint) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument(
        "invariant report requires a nonzero, non-unit ideal");
  InvariantReport report;
  const std::size_t M = ideal.vars().variable_count();
  report.variable_count = M;
  report.hint = hint;

  std::vector<VertexCover> covers = minimal_covers_of_ideal(ideal);
  std::size_t hmin = covers.front().size();
  std::size_t hmax = covers.front().size();
  for (const VertexCover& c : covers) {
    hmin = std::min(hmin, c.size());
    hmax = std::max(hmax, c.size());
  }
  report.height = hmin;
  report.big_height = hmax;
  report.dim = M - hmin;
  report.provenance["height"] = "least minimal-cover size of the generator supports";
  report.provenance["bight"] = "greatest minimal-cover size of the generator supports";
  report.provenance["dim"] = "variable count minus height";

  bool equigenerated = true;
  for (const Monomial& g : ideal.generators())
    if (g.degree() != ideal.generators().front().degree())
      equigenerated = false;

  std::optional<LinearQuotientsCertificate> cert =
      find_linear_quotients(ideal);
  if (cert) {
    report.betti = betti_from_certificate(*cert);
    report.provenance["betti"] = "linear-quotients certificate";
    std::size_t projdim = cert->r_max + 1;
    report.projdim = projdim;
    report.provenance["projdim"] = "linear-quotients certificate: r_max + 1";
    if (projdim <= M) {
      report.depth = M - projdim;
      report.provenance["depth"] = "Auslander-Buchsbaum: variables minus projdim";
    } else {
      report.provenance["depth"] = "unavailable: certificate exceeds variable count";
    }
    if (equigenerated) {
      // Equigenerated + linear quotients gives a linear resolution, so the
      // regularity of the quotient sits one below the generator degree.
      report.reg = static_cast<std::size_t>(
          ideal.generators().front().degree().get_ui()) - 1;
      report.provenance["reg"] = "linear resolution: generator degree minus one";
    } else {
      report.provenance["reg"] = "unavailable: generators not equigenerated";
    }
    if (report.depth && *report.dim == *report.depth) {
      report.cm_type = report.betti->back();
      report.provenance["type"] = "Cohen-Macaulay: final Betti number";
    } else {
      report.provenance["type"] = "unavailable: dim and depth differ";
    }
  } else {
    const char* missing = "unavailable: no linear-quotients certificate found";
    report.provenance["betti"] = missing;
    report.provenance["projdim"] = missing;
    report.provenance["depth"] = missing;
    report.provenance["reg"] = missing;
    report.provenance["type"] = missing;
  }

  if (hint == IdealClassHint::StrongQuasiClosure && report.betti) {
    // The degree-2 closure family has a known resolution shape; a mismatch
    // here means a bug upstream, not a property of the input.
    if (report.betti->size() != M)
      throw std::logic_error("degree-2 closure family: unexpected resolution length");
    for (std::size_t i = 0; i < M; ++i)
      if ((*report.betti)[i] != closed_form_betti(M, i))
        throw std::logic_error("degree-2 closure family: Betti numbers off the closed form");
  }
  return report;
}

}  // namespace idealis
