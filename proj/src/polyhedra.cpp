#include "idealis/polyhedra.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealis {

IntegerVector ceiling(const RationalVector& alpha) {
  IntegerVector out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    Rational value = alpha[i];
    value.canonicalize();
    if (value < 0)
      throw std::domain_error("ceiling expects nonnegative entries");
    mpz_cdiv_q(out[i].get_mpz_t(), value.get_num_mpz_t(),
               value.get_den_mpz_t());
  }
  return out;
}

LogSet::LogSet(std::vector<IntegerVector> points) : points_(std::move(points)) {
  for (const IntegerVector& p : points_)
    if (p.size() != points_.front().size())
      throw std::invalid_argument("log set points have mixed dimensions");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::size_t LogSet::dimension() const {
  return points_.empty() ? 0 : points_.front().size();
}

LogSet log_set(const std::vector<Monomial>& monomials) {
  std::vector<IntegerVector> points;
  points.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i > 0)
      require_same_variables(monomials[i].vars(), monomials[0].vars(),
                             "log_set");
    points.push_back(monomials[i].exponents());
  }
  return LogSet(std::move(points));
}

LogSet k_fold_log(const LogSet& points, unsigned long k) {
  if (k == 0) throw std::domain_error("k_fold_log requires k >= 1");
  if (points.empty()) return LogSet{};
  const std::vector<IntegerVector>& base = points.points();
  const std::size_t dim = points.dimension();
  std::vector<IntegerVector> sums;
  IntegerVector current(dim, Natural(0));
  // Multisets of k point indices, enumerated nondecreasingly.
  auto extend = [&](auto&& self, std::size_t start, unsigned long left) -> void {
    if (left == 0) {
      sums.push_back(current);
      return;
    }
    for (std::size_t j = start; j < base.size(); ++j) {
      for (std::size_t c = 0; c < dim; ++c) current[c] += base[j][c];
      self(self, j, left - 1);
      for (std::size_t c = 0; c < dim; ++c) current[c] -= base[j][c];
    }
  };
  extend(extend, 0, k);
  return LogSet(std::move(sums));
}

namespace {

void require_compatible(const IntegerVector& a, const LogSet& points,
                        const char* predicate) {
  if (points.empty())
    throw std::domain_error(std::string(predicate) +
                            " requires a nonempty point set");
  if (a.size() != points.dimension())
    throw std::invalid_argument(std::string(predicate) +
                                " given a vector of the wrong dimension");
}

}  // namespace

bool dominates_convex_combination(const IntegerVector& a,
                                  const LogSet& points) {
  require_compatible(a, points, "dominates_convex_combination");
  for (const Natural& entry : a)
    if (entry < 0)
      throw std::domain_error("dominates_convex_combination requires a >= 0");
  // Unknowns: one lambda per point, one slack per coordinate.
  //   sum_j lambda_j P_j + s = a,  sum_j lambda_j = 1,  lambda, s >= 0.
  const std::size_t dim = a.size();
  const std::size_t count = points.size();
  RationalMatrix lhs(dim + 1, RationalVector(count + dim, Rational(0)));
  RationalVector rhs(dim + 1);
  for (std::size_t j = 0; j < count; ++j) {
    const IntegerVector& p = points.points()[j];
    for (std::size_t i = 0; i < dim; ++i) lhs[i][j] = Rational(p[i]);
    lhs[dim][j] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    lhs[i][count + i] = 1;
    rhs[i] = Rational(a[i]);
  }
  rhs[dim] = 1;
  return has_nonnegative_solution(std::move(lhs), std::move(rhs));
}

bool in_convex_hull_exact(const IntegerVector& a, const LogSet& points) {
  require_compatible(a, points, "in_convex_hull_exact");
  const std::size_t dim = a.size();
  const std::size_t count = points.size();
  RationalMatrix lhs(dim + 1, RationalVector(count, Rational(0)));
  RationalVector rhs(dim + 1);
  for (std::size_t j = 0; j < count; ++j) {
    const IntegerVector& p = points.points()[j];
    for (std::size_t i = 0; i < dim; ++i) lhs[i][j] = Rational(p[i]);
    lhs[dim][j] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) rhs[i] = Rational(a[i]);
  rhs[dim] = 1;
  return has_nonnegative_solution(std::move(lhs), std::move(rhs));
}

}  // namespace idealis
