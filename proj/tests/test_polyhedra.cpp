#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "idealis/polyhedra.hpp"

using namespace idealis;

namespace {

// Independent feasibility oracle: a nonempty {x >= 0 : Ax = b} has a basic
// solution supported on linearly independent columns, so trying every column
// subset of size <= #rows with exact Gaussian elimination decides the
// question without any simplex machinery.
bool solve_exact(const RationalMatrix& columns, const RationalVector& rhs,
                 RationalVector& solution) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  RationalMatrix work(rows, RationalVector(cols + 1, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) work[i][j] = columns[j][i];
    work[i][cols] = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && work[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(work[pivot], work[row]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || work[i][col] == 0) continue;
      Rational factor = work[i][col] / work[row][col];
      for (std::size_t j = col; j <= cols; ++j)
        work[i][j] -= factor * work[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() < cols) return false;  // dependent columns: skip subset
  for (std::size_t i = row; i < rows; ++i)
    if (work[i][cols] != 0) return false;  // inconsistent
  solution.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    solution[pivot_col[r]] = work[r][cols] / work[r][pivot_col[r]];
  return true;
}

bool brute_force_feasible(const RationalMatrix& lhs, const RationalVector& rhs) {
  const std::size_t rows = lhs.size();
  const std::size_t cols = rows == 0 ? 0 : lhs.front().size();
  bool rhs_zero = true;
  for (const Rational& b : rhs)
    if (b != 0) rhs_zero = false;
  if (rhs_zero) return true;  // x = 0
  for (std::size_t mask = 1; mask < (std::size_t(1) << cols); ++mask) {
    std::size_t size = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (mask & (std::size_t(1) << j)) ++size;
    if (size > rows) continue;
    RationalMatrix columns;
    std::vector<std::size_t> picked;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(mask & (std::size_t(1) << j))) continue;
      picked.push_back(j);
      RationalVector column(rows);
      for (std::size_t i = 0; i < rows; ++i) column[i] = lhs[i][j];
      columns.push_back(std::move(column));
    }
    RationalVector solution;
    if (!solve_exact(columns, rhs, solution)) continue;
    bool nonnegative = true;
    for (const Rational& x : solution)
      if (x < 0) nonnegative = false;
    if (nonnegative) return true;
  }
  return false;
}

LogSet points_of(std::vector<std::vector<long>> raw) {
  std::vector<IntegerVector> points;
  for (const auto& p : raw) {
    IntegerVector v;
    for (long e : p) v.emplace_back(e);
    points.push_back(std::move(v));
  }
  return LogSet(std::move(points));
}

IntegerVector vec(std::vector<long> raw) {
  IntegerVector v;
  for (long e : raw) v.emplace_back(e);
  return v;
}

}  // namespace

TEST_CASE("ceiling rounds fractional entries up and fixes integers") {
  RationalVector alpha{Rational(7, 2), Rational(3), Rational(0),
                       Rational(1, 3)};
  IntegerVector up = ceiling(alpha);
  CHECK(up == vec({4, 3, 0, 1}));
  CHECK(ceiling({Rational(5, 5)}) == vec({1}));
  CHECK_THROWS_AS(ceiling({Rational(-1, 2)}), std::domain_error);
}

TEST_CASE("log sets deduplicate and sort") {
  LogSet points = points_of({{1, 0}, {0, 1}, {1, 0}});
  CHECK(points.size() == 2);
  CHECK(points.dimension() == 2);
  CHECK(points.points()[0] == vec({0, 1}));
  CHECK(LogSet{}.empty());
  CHECK(LogSet{}.dimension() == 0);
  CHECK_THROWS_AS(points_of({{1, 0}, {1}}), std::invalid_argument);

  VariableSetPtr vars = make_variables({1, 1});
  Monomial x2(vars, {Natural(2), Natural(0)});
  Monomial y2(vars, {Natural(0), Natural(2)});
  LogSet from_monomials = log_set({x2, y2, x2});
  CHECK(from_monomials.size() == 2);
  CHECK(from_monomials.points()[1] == vec({2, 0}));
}

TEST_CASE("k-fold sums enumerate multisets of points") {
  LogSet base = points_of({{1, 0}, {0, 1}});
  CHECK(k_fold_log(base, 1) == base);
  LogSet twice = k_fold_log(base, 2);
  CHECK(twice == points_of({{2, 0}, {1, 1}, {0, 2}}));
  LogSet thrice = k_fold_log(base, 3);
  CHECK(thrice.size() == 4);
  CHECK_THROWS_AS(k_fold_log(base, 0), std::domain_error);
  CHECK(k_fold_log(LogSet{}, 2).empty());

  // Overlapping sums collapse: {(0,0),(1,1)} twice gives 3 points, not 4.
  CHECK(k_fold_log(points_of({{0, 0}, {1, 1}}), 2).size() == 3);
}

TEST_CASE("newton polyhedron membership on worked examples") {
  // Triangle with vertices summing to degree 4 everywhere.
  LogSet triangle = points_of({{2, 1, 0, 1, 0}, {0, 1, 1, 0, 2}, {0, 0, 1, 2, 0}});
  IntegerVector a = vec({0, 1, 1, 1, 1});
  CHECK(dominates_convex_combination(a, triangle));
  CHECK_FALSE(in_convex_hull_exact(a, triangle));

  LogSet segment = points_of({{2, 0}, {0, 2}});
  CHECK(dominates_convex_combination(vec({1, 1}), segment));
  CHECK(in_convex_hull_exact(vec({1, 1}), segment));
  CHECK(in_convex_hull_exact(vec({2, 0}), segment));
  CHECK_FALSE(in_convex_hull_exact(vec({2, 1}), segment));
  CHECK(dominates_convex_combination(vec({2, 1}), segment));
  CHECK(dominates_convex_combination(vec({3, 3}), segment));
  CHECK_FALSE(in_convex_hull_exact(vec({3, 3}), segment));
  CHECK_FALSE(dominates_convex_combination(vec({1, 0}), segment));
  CHECK_FALSE(dominates_convex_combination(vec({0, 0}), segment));

  LogSet single = points_of({{1, 2}});
  CHECK(dominates_convex_combination(vec({1, 2}), single));
  CHECK(dominates_convex_combination(vec({5, 2}), single));
  CHECK_FALSE(dominates_convex_combination(vec({0, 5}), single));
  CHECK(in_convex_hull_exact(vec({1, 2}), single));
  CHECK_FALSE(in_convex_hull_exact(vec({1, 3}), single));

  CHECK_THROWS_AS(dominates_convex_combination(vec({1}), segment),
                  std::invalid_argument);
  CHECK_THROWS_AS(dominates_convex_combination(vec({1, 1}), LogSet{}),
                  std::domain_error);
  CHECK_THROWS_AS(in_convex_hull_exact(vec({1, 1}), LogSet{}),
                  std::domain_error);
}

TEST_CASE("trivial systems") {
  CHECK(has_nonnegative_solution({}, {}));
  CHECK(has_nonnegative_solution({{Rational(1)}}, {Rational(1)}));
  CHECK_FALSE(has_nonnegative_solution({{Rational(1)}}, {Rational(-1)}));
  CHECK(has_nonnegative_solution({{Rational(-1)}}, {Rational(-1)}));
  CHECK(has_nonnegative_solution({{Rational(0)}}, {Rational(0)}));
  CHECK_FALSE(has_nonnegative_solution({{Rational(0)}}, {Rational(1)}));
  CHECK_THROWS_AS(has_nonnegative_solution({{Rational(1)}}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      has_nonnegative_solution({{Rational(1)}, {Rational(1), Rational(2)}},
                               {Rational(1), Rational(1)}),
      std::invalid_argument);
}

TEST_CASE("simplex agrees with basic-solution enumeration on random systems") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> rows_dist(1, 3);
  std::uniform_int_distribution<int> cols_dist(1, 5);
  std::uniform_int_distribution<int> entry_dist(-3, 3);
  std::uniform_int_distribution<int> rhs_dist(-4, 4);
  std::size_t feasible_seen = 0;
  std::size_t infeasible_seen = 0;
  for (int round = 0; round < 400; ++round) {
    std::size_t rows = rows_dist(rng);
    std::size_t cols = cols_dist(rng);
    RationalMatrix lhs(rows, RationalVector(cols));
    RationalVector rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) lhs[i][j] = entry_dist(rng);
      rhs[i] = rhs_dist(rng);
    }
    bool expected = brute_force_feasible(lhs, rhs);
    bool actual = has_nonnegative_solution(lhs, rhs);
    (expected ? feasible_seen : infeasible_seen) += 1;
    CAPTURE(round);
    REQUIRE(actual == expected);
  }
  // Both outcomes must actually occur for the comparison to mean anything.
  CHECK(feasible_seen > 50);
  CHECK(infeasible_seen > 50);
}

TEST_CASE("membership predicates agree with the brute-force oracle") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> coord_dist(0, 3);
  std::uniform_int_distribution<int> count_dist(1, 4);
  for (int round = 0; round < 150; ++round) {
    std::size_t dim = 2 + (round % 2);
    std::size_t count = count_dist(rng);
    std::vector<IntegerVector> raw;
    for (std::size_t j = 0; j < count; ++j) {
      IntegerVector p(dim);
      for (std::size_t c = 0; c < dim; ++c) p[c] = coord_dist(rng);
      raw.push_back(std::move(p));
    }
    LogSet points(std::move(raw));
    IntegerVector a(dim);
    for (std::size_t c = 0; c < dim; ++c) a[c] = coord_dist(rng);

    // Rebuild the slack-form system the predicate solves and cross-check.
    RationalMatrix lhs(dim + 1, RationalVector(points.size() + dim, Rational(0)));
    RationalVector rhs(dim + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      for (std::size_t i = 0; i < dim; ++i)
        lhs[i][j] = Rational(points.points()[j][i]);
      lhs[dim][j] = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      lhs[i][points.size() + i] = 1;
      rhs[i] = Rational(a[i]);
    }
    rhs[dim] = 1;
    CAPTURE(round);
    REQUIRE(dominates_convex_combination(a, points) ==
            brute_force_feasible(lhs, rhs));
  }
}

TEST_CASE("ceiling is idempotent and monotone; domination is upward closed") {
  std::mt19937 rng(3141592);
  std::uniform_int_distribution<int> num_dist(0, 9);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> coord_dist(0, 3);
  std::uniform_int_distribution<int> bump_dist(0, 2);
  for (int round = 0; round < 200; ++round) {
    std::size_t dim = 1 + (round % 4);
    RationalVector alpha(dim), beta(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      alpha[i] = Rational(num_dist(rng), den_dist(rng));
      alpha[i].canonicalize();
      Rational delta(num_dist(rng), den_dist(rng));
      delta.canonicalize();
      beta[i] = alpha[i] + delta;
    }
    IntegerVector low = ceiling(alpha);
    IntegerVector high = ceiling(beta);
    RationalVector relifted(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      relifted[i] = Rational(low[i]);
      CAPTURE(round);
      CAPTURE(i);
      REQUIRE(Rational(low[i]) >= alpha[i]);
      REQUIRE(Rational(low[i]) - alpha[i] < 1);
      REQUIRE(low[i] <= high[i]);
    }
    REQUIRE(ceiling(relifted) == low);
  }
  for (int round = 0; round < 100; ++round) {
    std::size_t dim = 2 + (round % 2);
    std::vector<IntegerVector> raw;
    for (int j = 0; j < 3; ++j) {
      IntegerVector p(dim);
      for (std::size_t c = 0; c < dim; ++c) p[c] = coord_dist(rng);
      raw.push_back(std::move(p));
    }
    LogSet points(std::move(raw));
    IntegerVector a(dim), b(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      a[c] = coord_dist(rng);
      b[c] = a[c] + bump_dist(rng);
    }
    CAPTURE(round);
    if (dominates_convex_combination(a, points))
      REQUIRE(dominates_convex_combination(b, points));
    // Exact hull membership is the stronger condition.
    if (in_convex_hull_exact(a, points))
      REQUIRE(dominates_convex_combination(a, points));
  }
}

TEST_CASE("k-fold sums compose additively") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coord_dist(0, 2);
  for (int round = 0; round < 40; ++round) {
    std::size_t dim = 2 + (round % 2);
    std::vector<IntegerVector> raw;
    for (int j = 0; j < 1 + static_cast<int>(rng() % 3); ++j) {
      IntegerVector p(dim);
      for (std::size_t c = 0; c < dim; ++c) p[c] = coord_dist(rng);
      raw.push_back(std::move(p));
    }
    LogSet base(std::move(raw));
    for (auto [j, k] : {std::pair<unsigned long, unsigned long>{1, 1},
                        {1, 2},
                        {2, 2}}) {
      LogSet left = k_fold_log(base, j);
      LogSet right = k_fold_log(base, k);
      std::vector<IntegerVector> sums;
      for (const IntegerVector& p : left.points())
        for (const IntegerVector& q : right.points()) {
          IntegerVector s(dim);
          for (std::size_t c = 0; c < dim; ++c) s[c] = p[c] + q[c];
          sums.push_back(std::move(s));
        }
      CAPTURE(round);
      REQUIRE(LogSet(std::move(sums)) == k_fold_log(base, j + k));
    }
  }
}

TEST_CASE("domination holds exactly when a smaller hull point exists") {
  // dominates_convex_combination(a, A) should agree with a brute-force scan
  // for a rational point of conv(A) lying under a componentwise; Cramer-style
  // bounds keep its denominator at most |A| times the largest coordinate.
  std::mt19937 rng(24601);
  std::uniform_int_distribution<int> coord_dist(0, 2);
  std::uniform_int_distribution<int> target_dist(0, 3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t dim = 2;
    std::size_t count = 1 + rng() % 3;
    std::vector<IntegerVector> raw;
    long max_entry = 1;
    for (std::size_t j = 0; j < count; ++j) {
      IntegerVector p(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        p[c] = coord_dist(rng);
        if (p[c] > max_entry) max_entry = p[c].get_si();
      }
      raw.push_back(std::move(p));
    }
    LogSet points(std::move(raw));
    IntegerVector a(dim);
    for (std::size_t c = 0; c < dim; ++c) a[c] = target_dist(rng);

    const long max_denominator = static_cast<long>(points.size()) * max_entry;
    bool found = false;
    for (long den = 1; !found && den <= max_denominator; ++den)
      for (long t0 = 0; !found && t0 <= a[0].get_si() * den; ++t0)
        for (long t1 = 0; !found && t1 <= a[1].get_si() * den; ++t1) {
          RationalVector under{Rational(t0, den), Rational(t1, den)};
          for (Rational& entry : under) entry.canonicalize();
          // Equality system: convex weights reproducing `under` exactly.
          RationalMatrix lhs(dim + 1,
                             RationalVector(points.size(), Rational(0)));
          RationalVector rhs(dim + 1);
          for (std::size_t j = 0; j < points.size(); ++j) {
            for (std::size_t i = 0; i < dim; ++i)
              lhs[i][j] = Rational(points.points()[j][i]);
            lhs[dim][j] = 1;
          }
          for (std::size_t i = 0; i < dim; ++i) rhs[i] = under[i];
          rhs[dim] = 1;
          found = brute_force_feasible(lhs, rhs);
        }
    CAPTURE(round);
    REQUIRE(found == dominates_convex_combination(a, points));
  }
}
