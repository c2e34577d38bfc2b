#pragma once

// Sequential reference versions of the OpenMP kernels. They share the block
// and seeding layout of the parallel versions, so results must match exactly;
// tests and benchmarks compare the two.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optcode/assign.hpp"
#include "optcode/corpus.hpp"
#include "optcode/maxent.hpp"
#include "optcode/randtype.hpp"

namespace optcode::reference {

double brute_force_minimum(const assign::RankedDistribution& dist,
                           const assign::MagnitudeMultiset& ms, const assign::CostFunction& g);

// Direct O(V^2) pair enumeration.
assign::PairCounts pair_counts(std::span<const double> x, std::span<const double> y);

corpus::FrequencyTable build_table(std::string_view text, const corpus::BuildOptions& options);

std::vector<std::string> generate(const randtype::RandomTypingParams& params, std::uint64_t seed,
                                  std::size_t n_words);

std::vector<maxent::Rank> sample(const maxent::RankSampler& sampler, std::uint64_t seed,
                                 std::size_t n);

}  // namespace optcode::reference
