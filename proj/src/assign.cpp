#include "optcode/assign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <omp.h>

#include "optcode/error.hpp"

namespace optcode::assign {

namespace {

void check_sorted(std::span<const double> p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[i - 1]) {
      throw DomainError("probabilities must be sorted nonincreasingly (rank " +
                        std::to_string(i + 1) + " exceeds rank " + std::to_string(i) + ")");
    }
  }
}

void check_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

std::uint64_t choose2(std::uint64_t k) { return k * (k - 1) / 2; }

// Sum of C(k,2) over runs of equal values in a sorted sequence.
template <class Eq>
std::uint64_t tied_pairs(std::size_t n, Eq equal) {
  std::uint64_t total = 0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && equal(i - 1, i)) {
      ++run;
    } else {
      total += choose2(run);
      run = 1;
    }
  }
  return total;
}

// Counts pairs i < j with v[i] > v[j] while sorting v.
std::uint64_t count_inversions(std::vector<double>& v, std::vector<double>& scratch,
                               std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      scratch[k++] = v[i++];
    } else {
      count += mid - i;
      scratch[k++] = v[j++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

// Depth-first search over ordered selections. `partial` accumulates
// p_k * g(l_k) in rank order, the same order mean_cost sums in.
void search_min(std::span<const double> p, std::span<const double> costs, std::size_t depth,
                std::uint32_t used, double partial, double& best) {
  if (depth == p.size()) {
    best = std::min(best, partial);
    return;
  }
  for (std::size_t j = 0; j < costs.size(); ++j) {
    if (used & (1u << j)) continue;
    search_min(p, costs, depth + 1, used | (1u << j), partial + p[depth] * costs[j], best);
  }
}

void check_brute_force_guard(const RankedDistribution& dist, const MagnitudeMultiset& ms) {
  if (dist.size() > kBruteForceMaxRanks || ms.size() > kBruteForceMaxMagnitudes) {
    throw DomainError("brute force limited to V <= 8 and |L| <= 10 (got V=" +
                      std::to_string(dist.size()) + ", |L|=" + std::to_string(ms.size()) + ")");
  }
  if (ms.size() < dist.size()) {
    throw DomainError("multiset has fewer magnitudes than ranks");
  }
}

}  // namespace

RankedDistribution::RankedDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("distribution must have at least one rank");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw DomainError("probabilities must be finite and >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRescaleTolerance) {
    throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
  if (sum != 1.0) {
    for (double& p : probs_) p /= sum;
  }
  check_sorted(probs_);
}

RankedDistribution RankedDistribution::from_weights(std::span<const double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be finite and >= 0");
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("weights must have a positive sum");
  std::vector<double> probs(weights.size());
  std::transform(weights.begin(), weights.end(), probs.begin(), [sum](double w) { return w / sum; });
  return RankedDistribution(std::move(probs));
}

RankedDistribution RankedDistribution::from_counts(std::span<const std::uint64_t> counts) {
  std::vector<double> w(counts.begin(), counts.end());
  return from_weights(w);
}

RankedDistribution RankedDistribution::uniform(std::size_t size) {
  if (size == 0) throw DomainError("distribution must have at least one rank");
  return RankedDistribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

MagnitudeMultiset::MagnitudeMultiset(std::vector<double> values, bool allow_zero)
    : values_(std::move(values)), allow_zero_(allow_zero) {
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0 || (v == 0.0 && !allow_zero_)) {
      throw DomainError(allow_zero_ ? "magnitudes must be finite and >= 0"
                                    : "magnitudes must be finite and > 0 (zero needs the "
                                      "empty-string flag)");
    }
  }
}

CostFunction CostFunction::power(double exponent) {
  if (!std::isfinite(exponent) || exponent <= 0.0) {
    throw DomainError("power cost needs a positive exponent");
  }
  return CostFunction(Kind::power, exponent);
}

CostFunction CostFunction::exponential(double base) {
  if (!std::isfinite(base) || base <= 1.0) throw DomainError("exponential cost needs base > 1");
  return CostFunction(Kind::exponential, base);
}

double CostFunction::operator()(double magnitude) const {
  switch (kind_) {
    case Kind::identity:
      return magnitude;
    case Kind::power:
      return std::pow(magnitude, param_);
    case Kind::exponential:
      return std::pow(param_, magnitude);
  }
  return magnitude;
}

double mean_cost(const RankedDistribution& dist, const Assignment& asg, const CostFunction& g) {
  check_same_size(dist.size(), asg.size(), "mean_cost");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) sum += dist[i] * g(asg.magnitudes[i]);
  return sum;
}

Assignment optimal_assignment(const RankedDistribution& dist, const MagnitudeMultiset& ms) {
  if (ms.size() < dist.size()) {
    throw DomainError("multiset has " + std::to_string(ms.size()) + " magnitudes for " +
                      std::to_string(dist.size()) + " ranks");
  }
  std::vector<double> sorted(ms.values().begin(), ms.values().end());
  std::stable_sort(sorted.begin(), sorted.end());
  sorted.resize(dist.size());
  return Assignment{std::move(sorted)};
}

double brute_force_minimum(const RankedDistribution& dist, const MagnitudeMultiset& ms,
                           const CostFunction& g) {
  check_brute_force_guard(dist, ms);
  std::vector<double> costs(ms.size());
  std::transform(ms.values().begin(), ms.values().end(), costs.begin(), g);
  const auto p = dist.probs();
  const int first_choices = static_cast<int>(costs.size());

  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int j = 0; j < first_choices; ++j) {
    double local = std::numeric_limits<double>::infinity();
    search_min(p, costs, 1, 1u << j, 0.0 + p[0] * costs[static_cast<std::size_t>(j)], local);
    best = std::min(best, local);
  }
  return best;
}

Assignment unconstrained_optimum(const RankedDistribution& dist, double l_min) {
  if (!std::isfinite(l_min) || l_min < 0.0) throw DomainError("l_min must be >= 0");
  return Assignment{std::vector<double>(dist.size(), l_min)};
}

PairCounts pair_counts(std::span<const double> x, std::span<const double> y) {
  check_same_size(x.size(), y.size(), "pair_counts");
  const std::size_t n = x.size();
  if (n < 2) return {};

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });

  const std::uint64_t tied_x =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[order[a]] == x[order[b]]; });
  const std::uint64_t tied_xy = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return x[order[a]] == x[order[b]] && y[order[a]] == y[order[b]];
  });

  std::vector<double> ys(n);
  for (std::size_t k = 0; k < n; ++k) ys[k] = y[order[k]];
  std::vector<double> scratch(n);
  // Within an x-tie, y is ascending and contributes nothing, so every strict
  // inversion is a discordant pair.
  const std::uint64_t discordant = count_inversions(ys, scratch, 0, n);
  const std::uint64_t tied_y =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });

  const std::uint64_t untied = choose2(n) - tied_x - tied_y + tied_xy;
  return PairCounts{untied - discordant, discordant};
}

PairCounts pair_counts(const RankedDistribution& dist, const Assignment& asg) {
  return pair_counts(dist.probs(), asg.magnitudes);
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  check_same_size(x.size(), y.size(), "kendall_tau");
  if (x.size() < 2) throw DomainError("Kendall tau needs at least two ranks");
  const PairCounts c = pair_counts(x, y);
  const double pairs = static_cast<double>(choose2(x.size()));
  return (static_cast<double>(c.concordant) - static_cast<double>(c.discordant)) / pairs;
}

double kendall_tau(const RankedDistribution& dist, const Assignment& asg) {
  return kendall_tau(dist.probs(), asg.magnitudes);
}

double pearson_r(std::span<const double> p, std::span<const double> lambda) {
  check_same_size(p.size(), lambda.size(), "pearson_r");
  const std::size_t n = p.size();
  if (n < 2) throw DomainError("Pearson correlation needs at least two values");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  if (constant(p) || constant(lambda)) {
    throw DomainError("correlation is not defined: zero standard deviation");
  }
  const double dn = static_cast<double>(n);
  const double mp = std::accumulate(p.begin(), p.end(), 0.0) / dn;
  const double ml = std::accumulate(lambda.begin(), lambda.end(), 0.0) / dn;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = p[i] - mp;
    const double dy = lambda[i] - ml;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

bool is_optimal(const RankedDistribution& dist, const Assignment& asg,
                const MagnitudeMultiset& ms) {
  check_same_size(dist.size(), asg.size(), "is_optimal");
  std::vector<double> pool(ms.values().begin(), ms.values().end());
  std::sort(pool.begin(), pool.end());
  std::vector<double> chosen = asg.magnitudes;
  std::sort(chosen.begin(), chosen.end());
  if (!std::includes(pool.begin(), pool.end(), chosen.begin(), chosen.end())) {
    throw DomainError("assignment is not a sub-multiset of the magnitudes");
  }
  if (!std::equal(chosen.begin(), chosen.end(), pool.begin())) return false;
  return std::is_sorted(asg.magnitudes.begin(), asg.magnitudes.end());
}

}  // namespace optcode::assign
