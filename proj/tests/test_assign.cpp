#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "optcode/assign.hpp"
#include "optcode/error.hpp"
#include "optcode/reference.hpp"
#include "oracles.hpp"

using namespace optcode;
using namespace optcode::assign;

namespace {

RankedDistribution dist(std::vector<double> p) { return RankedDistribution(std::move(p)); }
Assignment asg(std::vector<double> l) { return Assignment{std::move(l)}; }

std::vector<double> binary_string_lengths(unsigned max_len) {
  std::vector<double> out;
  for (unsigned l = 1; l <= max_len; ++l) out.insert(out.end(), std::size_t{1} << l, l);
  return out;
}

}  // namespace

TEST(RankedDistribution, RejectsBadInput) {
  EXPECT_THROW(dist({}), DomainError);
  EXPECT_THROW(dist({0.5, 0.6, -0.1}), DomainError);
  EXPECT_THROW(dist({0.3, 0.7}), DomainError);
  EXPECT_THROW(dist({0.5, 0.4}), DomainError);
  EXPECT_THROW(dist({std::nan(""), 1.0}), DomainError);
}

TEST(RankedDistribution, RescalesTinyDrift) {
  const auto d = dist({0.5 + 4e-10, 0.5});
  EXPECT_NEAR(d[0] + d[1], 1.0, 1e-15);
  const auto w = RankedDistribution::from_counts(std::vector<std::uint64_t>{3, 2, 1});
  EXPECT_DOUBLE_EQ(w[0], 0.5);
  EXPECT_DOUBLE_EQ(w[2], 1.0 / 6.0);
}

TEST(MeanCost, DirectEvaluation) {
  const auto g = CostFunction::identity();
  EXPECT_DOUBLE_EQ(mean_cost(dist({0.5, 0.5}), asg({1, 1}), g), 1.0);
  EXPECT_NEAR(mean_cost(dist({0.5, 0.3, 0.2}), asg({1, 1, 2}), g), 1.2, 1e-15);
  EXPECT_DOUBLE_EQ(mean_cost(dist({0.5, 0.5}), asg({1, 2}), CostFunction::power(2)), 2.5);
  EXPECT_THROW(mean_cost(dist({0.5, 0.5}), asg({1}), g), DomainError);
}

TEST(CostFunction, DomainChecks) {
  EXPECT_THROW(CostFunction::power(0.0), DomainError);
  EXPECT_THROW(CostFunction::exponential(1.0), DomainError);
  EXPECT_DOUBLE_EQ(CostFunction::exponential(2.0)(3.0), 8.0);
}

TEST(OptimalAssignment, TakesSmallestInOrder) {
  const MagnitudeMultiset binary(binary_string_lengths(3));
  const auto six = optimal_assignment(RankedDistribution::uniform(6), binary);
  EXPECT_EQ(six.magnitudes, (std::vector<double>{1, 1, 2, 2, 2, 2}));
  const auto one = optimal_assignment(dist({1.0}), MagnitudeMultiset({5, 3, 9}));
  EXPECT_EQ(one.magnitudes, (std::vector<double>{3}));
  EXPECT_THROW(optimal_assignment(RankedDistribution::uniform(4), MagnitudeMultiset({1, 2})),
               DomainError);
}

TEST(OptimalAssignment, MatchesPermutationOracle) {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<CostFunction> costs{CostFunction::identity(), CostFunction::power(2),
                                        CostFunction::exponential(std::exp(1.0))};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t v = 1 + eng() % 5;
    const std::size_t n = v + eng() % 4;
    std::vector<double> p(v), l(n);
    for (auto& x : p) x = u(eng) + 1e-3;
    for (auto& x : l) x = 10.0 * u(eng) + 1e-3;
    std::sort(p.begin(), p.end(), std::greater<>());
    const auto d = RankedDistribution::from_weights(p);
    const MagnitudeMultiset ms(l);
    const auto& g = costs[trial % 3];
    const std::vector<double> probs(d.probs().begin(), d.probs().end());
    const double expected = oracle::min_cost_by_permutation(probs, l, g);
    EXPECT_NEAR(mean_cost(d, optimal_assignment(d, ms), g), expected, 1e-12 * std::max(1.0, expected));
    EXPECT_NEAR(brute_force_minimum(d, ms, g), expected, 1e-12 * std::max(1.0, expected));
  }
}

TEST(BruteForce, HandInstances) {
  const auto g = CostFunction::identity();
  EXPECT_NEAR(brute_force_minimum(dist({0.7, 0.3}), MagnitudeMultiset({1, 2}), g), 1.3, 1e-15);
  const auto third = RankedDistribution::uniform(3);
  EXPECT_NEAR(brute_force_minimum(third, MagnitudeMultiset({1, 2, 3}), g), 2.0, 1e-15);
}

TEST(BruteForce, SixRankInstanceEqualsSortingOptimum) {
  const auto d = RankedDistribution::from_weights(std::vector<double>{6, 5, 4, 3, 2, 1});
  const MagnitudeMultiset ms({1, 1, 2, 2, 2, 2, 3, 3, 3, 3});
  const auto g = CostFunction::identity();
  EXPECT_DOUBLE_EQ(brute_force_minimum(d, ms, g), mean_cost(d, optimal_assignment(d, ms), g));
}

TEST(BruteForce, GuardsSize) {
  const auto d = RankedDistribution::uniform(9);
  EXPECT_THROW(brute_force_minimum(d, MagnitudeMultiset(std::vector<double>(10, 1.0)),
                                   CostFunction::identity()),
               DomainError);
  EXPECT_THROW(brute_force_minimum(RankedDistribution::uniform(2),
                                   MagnitudeMultiset(std::vector<double>(11, 1.0)),
                                   CostFunction::identity()),
               DomainError);
}

TEST(UnconstrainedOptimum, AllAtLowerBound) {
  EXPECT_EQ(unconstrained_optimum(RankedDistribution::uniform(3), 0.0).magnitudes,
            (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(unconstrained_optimum(RankedDistribution::uniform(6), 1.0).magnitudes,
            std::vector<double>(6, 1.0));
  EXPECT_EQ(unconstrained_optimum(dist({1.0}), 2.5).magnitudes, (std::vector<double>{2.5}));
}

TEST(PairCounts, HandExamples) {
  const auto d = dist({0.5, 0.3, 0.2});
  EXPECT_EQ(pair_counts(d, asg({1, 2, 3})), (PairCounts{0, 3}));
  EXPECT_EQ(pair_counts(d, asg({2, 2, 2})), (PairCounts{0, 0}));
  EXPECT_EQ(pair_counts(d, asg({1, 1, 2})), (PairCounts{0, 2}));
}

TEST(PairCounts, MatchesQuadraticCountWithTies) {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + eng() % 300;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = static_cast<double>(eng() % 7);
    for (auto& v : y) v = static_cast<double>(eng() % 5);
    const auto fast = pair_counts(x, y);
    const auto slow = oracle::count_pairs(x, y);
    EXPECT_EQ(fast.concordant, slow.concordant);
    EXPECT_EQ(fast.discordant, slow.discordant);
    EXPECT_EQ(fast, reference::pair_counts(x, y));
  }
}

TEST(KendallTau, Examples) {
  const auto d = dist({0.5, 0.3, 0.2});
  EXPECT_DOUBLE_EQ(kendall_tau(d, asg({1, 2, 3})), -1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(d, asg({4, 4, 4})), 0.0);
  EXPECT_NEAR(kendall_tau(d, asg({1, 1, 2})), -2.0 / 3.0, 1e-15);
  EXPECT_THROW(kendall_tau(dist({1.0}), asg({1})), DomainError);
}

TEST(Pearson, AffineAndHandMoments) {
  const std::vector<double> p{0.5, 0.3, 0.2};
  std::vector<double> up, down;
  for (double x : p) {
    up.push_back(2 * x + 3);
    down.push_back(-x);
  }
  EXPECT_NEAR(pearson_r(p, up), 1.0, 1e-12);
  EXPECT_NEAR(pearson_r(p, down), -1.0, 1e-12);
  const std::vector<double> lambda{1, 1, 2};
  EXPECT_NEAR(pearson_r(p, lambda), -0.755928946018454454, 1e-14);
  EXPECT_NEAR(pearson_r(p, lambda), oracle::pearson(p, lambda), 1e-14);
  EXPECT_THROW(pearson_r(p, std::vector<double>{1, 1, 1}), DomainError);
}

TEST(IsOptimal, WorkedInstances) {
  const MagnitudeMultiset binary(binary_string_lengths(5));
  const auto d = RankedDistribution::from_weights(std::vector<double>{6, 5, 4, 3, 2, 1});
  EXPECT_TRUE(is_optimal(d, asg({1, 1, 2, 2, 2, 2}), binary));
  EXPECT_FALSE(is_optimal(d, asg({1, 3, 3, 5, 5, 5}), binary));
  EXPECT_FALSE(is_optimal(d, asg({2, 2, 2, 2, 1, 1}), binary));
}
