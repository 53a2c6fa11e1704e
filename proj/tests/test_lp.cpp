#include <gtest/gtest.h>

#include <random>

#include "polyskel/lp.hpp"
#include "support/oracles.hpp"

namespace polyskel {
namespace {

Hyperplane row(std::vector<long> coeffs, Relation rel, long bound) {
  Hyperplane h;
  for (long c : coeffs) h.coeffs.push_back(Rational(c));
  h.relation = rel;
  h.bound = bound;
  return h;
}

TEST(LpFeasible, ContradictoryBoundsAreInfeasible) {
  const LPProblem lp{1, {row({1}, Relation::greater_equal, 1), row({1}, Relation::less_equal, 0)}};
  const LPResult r = lp_feasible(lp);
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(LpFeasible, SimplexConstraintsHaveVerifiedWitness) {
  const LPProblem lp{2,
                     {row({1, 1}, Relation::equal, 1), row({1, 0}, Relation::greater_equal, 0),
                      row({0, 1}, Relation::greater_equal, 0)}};
  const LPResult r = lp_feasible(lp);
  ASSERT_TRUE(r.feasible);
  for (const auto& h : lp.constraints) EXPECT_TRUE(h.satisfied_by(*r.witness));
}

TEST(LpFeasible, SquareBottomEdgeFaceSystem) {
  // Variables (a1, a2, b): a.v = b on (0,0), (1,0); a.w <= b - 1 on (0,1), (1,1).
  const LPProblem lp{3,
                     {row({0, 0, -1}, Relation::equal, 0), row({1, 0, -1}, Relation::equal, 0),
                      row({0, 1, -1}, Relation::less_equal, -1),
                      row({1, 1, -1}, Relation::less_equal, -1)}};
  const LPResult r = lp_feasible(lp);
  ASSERT_TRUE(r.feasible);
  for (const auto& h : lp.constraints) EXPECT_TRUE(h.satisfied_by(*r.witness));
}

TEST(LpFeasible, EmptyAndZeroVariableProblems) {
  EXPECT_TRUE(lp_feasible(LPProblem{2, {}}).feasible);
  EXPECT_TRUE(lp_feasible(LPProblem{0, {row({}, Relation::less_equal, 0)}}).feasible);
  EXPECT_FALSE(lp_feasible(LPProblem{0, {row({}, Relation::greater_equal, 1)}}).feasible);
}

TEST(LpFeasible, RejectsDimensionMismatch) {
  const LPProblem lp{2, {row({1}, Relation::less_equal, 0)}};
  EXPECT_THROW(lp_feasible(lp), std::invalid_argument);
}

TEST(LpFeasible, DegenerateSystemTerminates) {
  // Many redundant constraints through the origin; Bland's rule must not cycle.
  LPProblem lp{3, {}};
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) lp.constraints.push_back(row({a, b, 1}, Relation::less_equal, 0));
  }
  lp.constraints.push_back(row({0, 0, 1}, Relation::greater_equal, 1));
  const LPResult r = lp_feasible(lp);
  EXPECT_FALSE(r.feasible);
}

TEST(LpFeasible, AgreesWithFourierMotzkinOnRandomSystems) {
  std::mt19937_64 rng(99);
  int feasible = 0;
  for (int k = 0; k < 500; ++k) {
    const LPProblem lp = testing::random_small_lp(rng);
    const LPResult r = lp_feasible(lp);
    ASSERT_EQ(r.feasible, testing::fourier_motzkin_feasible(lp)) << "instance " << k;
    if (r.feasible) {
      ++feasible;
      for (const auto& h : lp.constraints) ASSERT_TRUE(h.satisfied_by(*r.witness));
    }
  }
  // Both outcomes must be exercised.
  EXPECT_GT(feasible, 50);
  EXPECT_LT(feasible, 450);
}

}  // namespace
}  // namespace polyskel
