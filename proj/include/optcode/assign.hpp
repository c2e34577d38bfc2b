#pragma once

// Minimization of mean energetic cost over assignments of magnitudes drawn
// from a multiset, and the correlation diagnostics that go with it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace optcode::assign {

// Probability vector sorted nonincreasingly. Inputs whose sum is within 1e-9
// of one are rescaled; anything further off is rejected.
class RankedDistribution {
 public:
  static constexpr double kRescaleTolerance = 1e-9;

  explicit RankedDistribution(std::vector<double> probs);

  // Normalizes nonnegative weights (e.g. counts) that are already sorted
  // nonincreasingly.
  static RankedDistribution from_weights(std::span<const double> weights);
  static RankedDistribution from_counts(std::span<const std::uint64_t> counts);
  static RankedDistribution uniform(std::size_t size);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

// The multiset L of available magnitudes. Zero is admitted only when the
// empty string is explicitly allowed.
class MagnitudeMultiset {
 public:
  explicit MagnitudeMultiset(std::vector<double> values, bool allow_zero = false);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  bool allows_zero() const noexcept { return allow_zero_; }

 private:
  std::vector<double> values_;
  bool allow_zero_;
};

// Strictly increasing map from magnitude to energetic cost.
class CostFunction {
 public:
  enum class Kind { identity, power, exponential };

  static CostFunction identity() { return CostFunction(Kind::identity, 1.0); }
  static CostFunction power(double exponent);
  static CostFunction exponential(double base);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }

  double operator()(double magnitude) const;

 private:
  CostFunction(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
};

// Magnitudes l_1..l_V aligned to ranks 1..V.
struct Assignment {
  std::vector<double> magnitudes;

  std::size_t size() const noexcept { return magnitudes.size(); }
};

struct PairCounts {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

double mean_cost(const RankedDistribution& dist, const Assignment& asg,
                 const CostFunction& g);

// The V smallest elements of L in nondecreasing order. Tied magnitudes come
// out in stable-sort order; every permutation of a tie is co-optimal.
Assignment optimal_assignment(const RankedDistribution& dist,
                              const MagnitudeMultiset& ms);

// Exhaustive minimum over all ordered selections of V elements of L.
// Guarded to V <= 8 and |L| <= 10.
inline constexpr std::size_t kBruteForceMaxRanks = 8;
inline constexpr std::size_t kBruteForceMaxMagnitudes = 10;
double brute_force_minimum(const RankedDistribution& dist,
                           const MagnitudeMultiset& ms, const CostFunction& g);

Assignment unconstrained_optimum(const RankedDistribution& dist, double l_min);

// Concordant/discordant pair counts; pairs tied in either coordinate count
// toward neither. O(V log V).
PairCounts pair_counts(const RankedDistribution& dist, const Assignment& asg);
PairCounts pair_counts(std::span<const double> x, std::span<const double> y);

// Kendall tau-a: (n_c - n_d) / C(V, 2).
double kendall_tau(const RankedDistribution& dist, const Assignment& asg);
double kendall_tau(std::span<const double> x, std::span<const double> y);

// Pearson correlation with population moments.
double pearson_r(std::span<const double> p, std::span<const double> lambda);

// True iff asg holds the V smallest elements of ms and is nondecreasing.
bool is_optimal(const RankedDistribution& dist, const Assignment& asg,
                const MagnitudeMultiset& ms);

}  // namespace optcode::assign
