#include "idealis/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealis {

MonomialIdeal::MonomialIdeal(VariableSetPtr vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(VariableSetPtr vars) {
  return MonomialIdeal(std::move(vars), {});
}

MonomialIdeal MonomialIdeal::unit(VariableSetPtr vars) {
  std::vector<Monomial> gens{Monomial::one(vars)};
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal MonomialIdeal::make(VariableSetPtr vars,
                                  std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    require_same_variables(*vars, g.vars(), "minimalize");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      // kept is degree-ascending; a proper divisor has strictly smaller
      // degree, so the scan can stop at the first equal-degree entry.
      if (k.degree() == g.degree()) break;
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return MonomialIdeal(std::move(vars), std::move(kept));
}

bool MonomialIdeal::contains(const Monomial& f) const {
  require_same_variables(*vars_, f.vars(), "membership");
  for (const Monomial& g : gens_)
    if (g.divides(f)) return true;
  return false;
}

Natural MonomialIdeal::max_degree() const {
  Natural d = 0;
  for (const Monomial& g : gens_)
    if (g.degree() > d) d = g.degree();
  return d;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  if (!(*vars_ == other.vars())) return false;
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].exponents() != other.gens_[i].exponents()) return false;
  return true;
}

MonomialIdeal minimalize(VariableSetPtr vars, std::vector<Monomial> gens) {
  return MonomialIdeal::make(std::move(vars), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_variables(a.vars(), b.vars(), "ideal product");
  std::vector<Monomial> products;
  products.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) products.push_back(g.times(h));
  return MonomialIdeal::make(a.vars_ptr(), std::move(products));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned long k) {
  if (k == 0) return MonomialIdeal::unit(ideal.vars_ptr());
  MonomialIdeal result = ideal;
  for (unsigned long i = 1; i < k; ++i) result = ideal_product(result, ideal);
  return result;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a,
                                 const MonomialIdeal& b) {
  require_same_variables(a.vars(), b.vars(), "ideal intersection");
  std::vector<Monomial> lcms;
  lcms.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) lcms.push_back(g.lcm(h));
  return MonomialIdeal::make(a.vars_ptr(), std::move(lcms));
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_variables(ideal.vars(), f.vars(), "ideal colon");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators())
    quotients.push_back(g.colon_by(f));
  return MonomialIdeal::make(ideal.vars_ptr(), std::move(quotients));
}

namespace {

void veronese_rec(const VariableSetPtr& vars, std::size_t offset,
                  std::size_t width, std::size_t pos, unsigned long remaining,
                  Exponents& current, std::vector<Monomial>& out) {
  if (pos + 1 == width) {
    current[offset + pos] = remaining;
    out.emplace_back(vars, current);
    current[offset + pos] = 0;
    return;
  }
  for (unsigned long e = 0; e <= remaining; ++e) {
    current[offset + pos] = e;
    veronese_rec(vars, offset, width, pos + 1, remaining - e, current, out);
  }
  current[offset + pos] = 0;
}

}  // namespace

MonomialIdeal veronese(VariableSetPtr vars, std::size_t block,
                       unsigned long degree) {
  if (block >= vars->block_count())
    throw std::out_of_range("veronese: block index out of range");
  if (degree == 0) return MonomialIdeal::unit(std::move(vars));
  std::size_t offset = vars->flat_index(block, 0);
  std::size_t width = vars->block_size(block);
  Exponents current(vars->variable_count(), Natural(0));
  std::vector<Monomial> gens;
  veronese_rec(vars, offset, width, 0, degree, current, gens);
  return MonomialIdeal::make(std::move(vars), std::move(gens));
}

}  // namespace idealis
