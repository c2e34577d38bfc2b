#pragma once

// Random typing: letters drawn from an N-symbol alphabet, a delimiter hit
// with probability p_s, words of at least l_min letters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optcode/codebook.hpp"
#include "optcode/maxent.hpp"

namespace optcode::randtype {

using Rank = std::uint64_t;

struct RandomTypingParams {
  RandomTypingParams(std::uint64_t n, double p_s, unsigned l_min = 1,
                     std::optional<std::vector<double>> letter_bias = std::nullopt);

  std::uint64_t n;
  double p_s;
  unsigned l_min;
  std::optional<std::vector<double>> letter_bias;
};

// l = a log p + b_const, natural logarithm.
struct AbbreviationLaw {
  double a;
  double b_const;

  double length_for(double probability) const;
};

// Probability of one specific word of length l (uniform letters).
double word_probability(const RandomTypingParams& params, unsigned l);

// Total probability of all N^l words of length l: (1-p_s)^(l-l_min) p_s.
double length_mass(const RandomTypingParams& params, unsigned l);

// Probability of the i-th most likely word: word_probability at the optimal
// non-singular length of rank i.
double rank_probability(const RandomTypingParams& params, Rank i);

// P(rank > i), closed form.
double rank_survival(const RandomTypingParams& params, Rank i);

AbbreviationLaw abbreviation_law(const RandomTypingParams& params);

// Letters come from the first N symbols of a..z when N <= 26; larger
// alphabets are not printable and are rejected.
codebook::Alphabet typing_alphabet(const RandomTypingParams& params);

// l_min forced letters, then per position: stop with p_s, otherwise emit a
// letter. Words are generated in blocks of kBlockSize with streams derived
// from (seed, block index), so output is identical for any thread count.
inline constexpr std::size_t kBlockSize = 1 << 14;
std::vector<std::string> generate(const RandomTypingParams& params, std::uint64_t seed,
                                  std::size_t n_words);

struct OptimalityReport {
  Rank i_max = 0;
  bool equal_length_equal_probability = false;
  bool probability_nonincreasing = false;
  bool satisfies_optimal_assignment = false;
  bool uses_all_strings_of_each_length = false;
  double mean_code_length = 0.0;  // over the truncated, renormalized table
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

// Builds the analytic rank -> word table up to i_max and checks that it is an
// optimal non-singular code for its own rank distribution.
OptimalityReport verify_optimality(const RandomTypingParams& params, Rank i_max);

// Pearson chi-square of generated words against the exact rank law. Every
// rank with expected count >= min_expected is its own bin; the remaining
// ranks are pooled into one bin.
struct GoodnessOfFit {
  double statistic = 0.0;
  std::uint64_t bins = 0;
  std::uint64_t degrees_of_freedom = 0;
  double p_value = 0.0;
};

GoodnessOfFit rank_goodness_of_fit(const RandomTypingParams& params,
                                   const std::vector<std::string>& words,
                                   double min_expected = 50.0);

struct SeriesPoint {
  Rank i;
  double p;
};

std::vector<SeriesPoint> figure2_data(const RandomTypingParams& params, Rank i_max);

// RankLaw adapter for the sampler and the fitters.
class RandomTypingLaw final : public maxent::RankLaw {
 public:
  explicit RandomTypingLaw(RandomTypingParams params) : params_(std::move(params)) {}
  double pmf(Rank i) const override { return rank_probability(params_, i); }
  double survival(Rank i) const override { return rank_survival(params_, i); }

 private:
  RandomTypingParams params_;
};

}  // namespace optcode::randtype
