#include "idealis/closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace idealis {

namespace {

// Candidates inside the box [0, maxvec] with degree at most cap, listed in
// degree-ascending order so divisors always precede multiples.
void enumerate_box(const IntegerVector& maxvec, const Natural& cap,
                   std::size_t pos, Natural deg, IntegerVector& cur,
                   std::vector<std::pair<Natural, IntegerVector>>& out) {
  if (pos == maxvec.size()) {
    out.emplace_back(deg, cur);
    return;
  }
  for (Natural e = 0; e <= maxvec[pos]; ++e) {
    if (deg + e > cap) break;
    cur[pos] = e;
    enumerate_box(maxvec, cap, pos + 1, deg + e, cur, out);
  }
  cur[pos] = 0;
}

bool componentwise_leq(const IntegerVector& a, const IntegerVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Minimal integer vectors in the set {a >= 0 : a dominates a convex
// combination of `points`}, i.e. the minimal generating exponents of the
// closure of the ideal the points generate.  Two bounds keep the search
// finite: no minimal element exceeds the pointwise maximum of the points
// (dropping an excess coordinate preserves domination), and none exceeds
// degree `cap`.
std::vector<IntegerVector> minimal_dominating_vectors(const LogSet& points,
                                                      const Natural& cap) {
  const std::size_t dim = points.dimension();
  IntegerVector maxvec(dim, Natural(0));
  Natural min_degree(-1);
  for (const IntegerVector& p : points.points()) {
    Natural deg(0);
    for (std::size_t c = 0; c < dim; ++c) {
      deg += p[c];
      if (p[c] > maxvec[c]) maxvec[c] = p[c];
    }
    if (min_degree < 0 || deg < min_degree) min_degree = deg;
  }

  std::vector<std::pair<Natural, IntegerVector>> candidates;
  IntegerVector cur(dim, Natural(0));
  enumerate_box(maxvec, cap, 0, Natural(0), cur, candidates);
  std::sort(candidates.begin(), candidates.end());

  std::vector<IntegerVector> minimal;
  for (const auto& [deg, a] : candidates) {
    if (deg < min_degree) continue;  // below every convex combination
    bool covered = false;
    for (const IntegerVector& m : minimal) {
      if (componentwise_leq(m, a)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    bool member = false;
    for (const IntegerVector& p : points.points()) {
      if (componentwise_leq(p, a)) {
        member = true;
        break;
      }
    }
    if (member || dominates_convex_combination(a, points)) minimal.push_back(a);
  }
  return minimal;
}

MonomialIdeal closure_from_points(const VariableSetPtr& vars,
                                  const LogSet& points, const Natural& cap) {
  std::vector<Monomial> gens;
  for (IntegerVector& a : minimal_dominating_vectors(points, cap))
    gens.emplace_back(vars, std::move(a));
  return MonomialIdeal::make(vars, std::move(gens));
}

std::vector<Monomial> missing_from(const MonomialIdeal& larger,
                                   const MonomialIdeal& smaller) {
  std::vector<Monomial> missing;
  for (const Monomial& g : larger.generators())
    if (!smaller.contains(g)) missing.push_back(g);
  return missing;
}

// Exponent vectors of the generators restricted to one block.
LogSet block_projection(const MonomialIdeal& ideal, std::size_t block) {
  const VariableSet& vars = ideal.vars();
  std::size_t offset = vars.flat_index(block, 0);
  std::size_t width = vars.block_size(block);
  std::vector<IntegerVector> points;
  points.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) {
    const Exponents& e = g.exponents();
    points.emplace_back(e.begin() + offset, e.begin() + offset + width);
  }
  return LogSet(std::move(points));
}

// Products over blocks, one factor from each per-block exponent list.
MonomialIdeal assemble_blockwise(const VariableSetPtr& vars,
                                 const std::vector<std::vector<IntegerVector>>&
                                     block_choices) {
  std::vector<Monomial> gens;
  Exponents cur(vars->variable_count(), Natural(0));
  auto build = [&](auto&& self, std::size_t block) -> void {
    if (block == vars->block_count()) {
      gens.emplace_back(vars, cur);
      return;
    }
    std::size_t offset = vars->flat_index(block, 0);
    for (const IntegerVector& beta : block_choices[block]) {
      for (std::size_t c = 0; c < beta.size(); ++c) cur[offset + c] = beta[c];
      self(self, block + 1);
    }
    for (std::size_t c = 0; c < vars->block_size(block); ++c)
      cur[offset + c] = 0;
  };
  build(build, 0);
  return MonomialIdeal::make(vars, std::move(gens));
}

}  // namespace

ClosureResult integral_closure(const MonomialIdeal& ideal,
                               const Natural& degree_cap) {
  if (ideal.is_zero())
    throw std::domain_error("integral_closure requires a nonzero ideal");
  std::vector<Monomial> gens;
  for (IntegerVector& a : minimal_dominating_vectors(
           log_set(ideal.generators()), degree_cap))
    gens.emplace_back(ideal.vars_ptr(), std::move(a));
  // Union the input back in so the result contains the ideal even when a
  // user-supplied cap is smaller than the generator degrees.
  for (const Monomial& g : ideal.generators()) gens.push_back(g);
  MonomialIdeal closure = MonomialIdeal::make(ideal.vars_ptr(), std::move(gens));
  bool was_closed = closure == ideal;
  return {closure, was_closed,
          was_closed ? std::vector<Monomial>{} : missing_from(closure, ideal)};
}

ClosureResult integral_closure(const MonomialIdeal& ideal) {
  return integral_closure(
      ideal, ideal.max_degree() + Natural(ideal.vars().variable_count()));
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
  return integral_closure(ideal).was_closed;
}

std::optional<unsigned long> power_membership_oracle(const Monomial& f,
                                                     const MonomialIdeal& ideal,
                                                     unsigned long k_max) {
  require_same_variables(f.vars(), ideal.vars(), "power membership");
  if (ideal.is_zero()) return std::nullopt;
  MonomialIdeal power = ideal;
  for (unsigned long k = 1; k <= k_max; ++k) {
    if (k > 1) power = ideal_product(power, ideal);
    if (power.contains(f.pow(k))) return k;
  }
  return std::nullopt;
}

MonomialIdeal star_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  const VariableSetPtr& vars = ideal.vars_ptr();
  std::vector<std::vector<IntegerVector>> block_points(vars->block_count());
  for (std::size_t block = 0; block < vars->block_count(); ++block) {
    LogSet projections = block_projection(ideal, block);
    IntegerVector maxvec(projections.dimension(), Natural(0));
    Natural cap(0);
    for (const IntegerVector& p : projections.points())
      for (std::size_t c = 0; c < p.size(); ++c)
        if (p[c] > maxvec[c]) maxvec[c] = p[c];
    for (const Natural& m : maxvec) cap += m;
    std::vector<std::pair<Natural, IntegerVector>> box;
    IntegerVector cur(maxvec.size(), Natural(0));
    enumerate_box(maxvec, cap, 0, Natural(0), cur, box);
    for (auto& [deg, a] : box)
      if (in_convex_hull_exact(a, projections))
        block_points[block].push_back(std::move(a));
  }
  return assemble_blockwise(vars, block_points);
}

MonomialIdeal tilde_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal;
  const VariableSetPtr& vars = ideal.vars_ptr();
  std::vector<std::vector<IntegerVector>> block_points(vars->block_count());
  for (std::size_t block = 0; block < vars->block_count(); ++block) {
    LogSet projections = block_projection(ideal, block);
    Natural cap(vars->block_size(block));
    for (const IntegerVector& p : projections.points()) {
      Natural deg(0);
      for (const Natural& e : p) deg += e;
      if (deg + Natural(vars->block_size(block)) > cap)
        cap = deg + Natural(vars->block_size(block));
    }
    block_points[block] = minimal_dominating_vectors(projections, cap);
  }
  return assemble_blockwise(vars, block_points);
}

MonomialIdeal structure_sum(const VariableSetPtr& vars) {
  if (vars->block_count() < 2)
    throw std::invalid_argument("structure_sum requires at least two blocks");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < vars->block_count(); ++i) {
    MonomialIdeal pure = veronese(vars, i, 2);
    for (const Monomial& g : pure.generators()) gens.push_back(g);
    for (std::size_t j = i + 1; j < vars->block_count(); ++j) {
      MonomialIdeal mixed =
          ideal_product(veronese(vars, i, 1), veronese(vars, j, 1));
      for (const Monomial& g : mixed.generators()) gens.push_back(g);
    }
  }
  return MonomialIdeal::make(vars, std::move(gens));
}

MonomialIdeal closure_of_cover_power(const MonomialIdeal& cover,
                                     unsigned long k) {
  if (k == 0)
    throw std::domain_error("closure_of_cover_power requires k >= 1");
  if (cover.is_zero()) return cover;
  LogSet points = k_fold_log(log_set(cover.generators()), k);
  Natural cap(0);
  for (const IntegerVector& p : points.points()) {
    Natural deg(0);
    for (const Natural& e : p) deg += e;
    if (deg > cap) cap = deg;
  }
  cap += Natural(cover.vars().variable_count());
  return closure_from_points(cover.vars_ptr(), points, cap);
}

}  // namespace idealis
