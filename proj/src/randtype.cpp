#include "optcode/randtype.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <boost/math/special_functions/gamma.hpp>
#include <omp.h>

#include "detail.hpp"
#include "optcode/assign.hpp"
#include "optcode/error.hpp"

namespace optcode::randtype {

RandomTypingParams::RandomTypingParams(std::uint64_t alphabet_size, double space_probability,
                                       unsigned min_length,
                                       std::optional<std::vector<double>> bias)
    : n(alphabet_size), p_s(space_probability), l_min(min_length), letter_bias(std::move(bias)) {
  if (n < 1) throw DomainError("random typing needs N >= 1");
  if (!(p_s > 0.0 && p_s < 1.0)) {
    throw DomainError("random typing needs 0 < p_s < 1 (got " + std::to_string(p_s) + ")");
  }
  if (letter_bias) {
    if (letter_bias->size() != n) throw DomainError("letter bias must have N entries");
    double sum = 0.0;
    for (double w : *letter_bias) {
      if (!std::isfinite(w) || w <= 0.0) throw DomainError("letter bias entries must be > 0");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw DomainError("letter bias must sum to 1");
  }
}

double AbbreviationLaw::length_for(double probability) const {
  return a * std::log(probability) + b_const;
}

double word_probability(const RandomTypingParams& params, unsigned l) {
  if (l < params.l_min) throw DomainError("word length below l_min");
  return std::pow((1.0 - params.p_s) / static_cast<double>(params.n), l) * params.p_s /
         std::pow(1.0 - params.p_s, params.l_min);
}

double length_mass(const RandomTypingParams& params, unsigned l) {
  if (l < params.l_min) return 0.0;
  return std::pow(1.0 - params.p_s, l - params.l_min) * params.p_s;
}

double rank_probability(const RandomTypingParams& params, Rank i) {
  return word_probability(params, codebook::code_length_for_rank(params.n, params.l_min, i));
}

double rank_survival(const RandomTypingParams& params, Rank i) {
  if (i == 0) return 1.0;
  const unsigned l = codebook::code_length_for_rank(params.n, params.l_min, i);
  const Rank last = codebook::last_rank_of_length(params.n, params.l_min, l);
  const double rest_of_block = static_cast<double>(last - i) * word_probability(params, l);
  return rest_of_block + std::pow(1.0 - params.p_s, l + 1 - params.l_min);
}

AbbreviationLaw abbreviation_law(const RandomTypingParams& params) {
  const double a = 1.0 / std::log((1.0 - params.p_s) / static_cast<double>(params.n));
  const double b = a * std::log(std::pow(1.0 - params.p_s, params.l_min) / params.p_s);
  return AbbreviationLaw{a, b};
}

codebook::Alphabet typing_alphabet(const RandomTypingParams& params) {
  if (params.n > 26) throw DomainError("generated words need N <= 26 letters");
  return codebook::Alphabet::latin(params.n);
}

std::vector<std::string> generate(const RandomTypingParams& params, std::uint64_t seed,
                                  std::size_t n_words) {
  const detail::WordDrawer drawer(params);
  std::vector<std::string> words(n_words);
  const std::int64_t blocks = static_cast<std::int64_t>((n_words + kBlockSize - 1) / kBlockSize);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    rng::Engine eng(rng::block_seed(seed, static_cast<std::uint64_t>(b)));
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t end = std::min(n_words, begin + kBlockSize);
    for (std::size_t k = begin; k < end; ++k) words[k] = drawer.draw(eng);
  }
  return words;
}

OptimalityReport verify_optimality(const RandomTypingParams& params, Rank i_max) {
  if (i_max == 0) throw DomainError("i_max must be >= 1");
  if (params.letter_bias) throw DomainError("optimality check needs uniform letters");
  const auto alphabet = typing_alphabet(params);

  OptimalityReport report;
  report.i_max = i_max;

  std::vector<std::string> words;
  std::vector<double> probs;
  std::vector<double> lengths;
  words.reserve(i_max);
  for (Rank i = 1; i <= i_max; ++i) {
    words.push_back(codebook::nth_string(alphabet, params.l_min, i));
    const auto l = static_cast<unsigned>(words.back().size());
    probs.push_back(word_probability(params, l));
    lengths.push_back(l);
  }

  // (a) equal length implies equal probability, and the rank law agrees with
  // the word law at every rank.
  report.equal_length_equal_probability = true;
  std::map<double, double> prob_of_length;
  for (std::size_t k = 0; k < words.size(); ++k) {
    auto [it, inserted] = prob_of_length.emplace(lengths[k], probs[k]);
    if (!inserted && it->second != probs[k]) report.equal_length_equal_probability = false;
    if (rank_probability(params, k + 1) != probs[k]) report.equal_length_equal_probability = false;
  }
  if (!report.equal_length_equal_probability) {
    report.failures.emplace_back("words of equal length differ in probability");
  }

  // (b) nonincreasing in rank, strictly decreasing across length changes.
  report.probability_nonincreasing = true;
  for (std::size_t k = 1; k < probs.size(); ++k) {
    const bool longer = lengths[k] > lengths[k - 1];
    if (probs[k] > probs[k - 1] || (longer && !(probs[k] < probs[k - 1]))) {
      report.probability_nonincreasing = false;
    }
  }
  if (!report.probability_nonincreasing) {
    report.failures.emplace_back("probability is not nonincreasing in rank");
  }

  // (c) the lengths are the V smallest of the available-string multiset, in
  // nondecreasing order.
  const auto dist = assign::RankedDistribution::from_weights(probs);
  const unsigned top = static_cast<unsigned>(lengths.back());
  std::vector<double> pool;
  for (unsigned l = params.l_min; l <= top; ++l) {
    std::uint64_t strings_of_length = 1;
    for (unsigned e = 0; e < l; ++e) strings_of_length *= params.n;
    pool.insert(pool.end(), strings_of_length, static_cast<double>(l));
  }
  const assign::MagnitudeMultiset ms(std::move(pool), params.l_min == 0);
  report.satisfies_optimal_assignment = assign::is_optimal(dist, assign::Assignment{lengths}, ms);
  if (!report.satisfies_optimal_assignment) {
    report.failures.emplace_back("length assignment is not optimal for the rank distribution");
  }

  // (d) every length block below the last is used completely, without repeats.
  report.uses_all_strings_of_each_length = true;
  std::map<unsigned, std::set<std::string>> by_length;
  for (const auto& w : words) by_length[static_cast<unsigned>(w.size())].insert(w);
  std::size_t distinct = 0;
  for (const auto& [l, set] : by_length) {
    distinct += set.size();
    if (codebook::last_rank_of_length(params.n, params.l_min, l) > i_max) continue;
    std::uint64_t expected = 1;
    for (unsigned e = 0; e < l; ++e) expected *= params.n;
    if (set.size() != expected) report.uses_all_strings_of_each_length = false;
  }
  if (distinct != words.size()) report.uses_all_strings_of_each_length = false;
  if (!report.uses_all_strings_of_each_length) {
    report.failures.emplace_back("some length block is not fully used or repeats a string");
  }

  report.mean_code_length =
      codebook::mean_code_length(codebook::CodeTable(alphabet, std::move(words)), dist);
  return report;
}

std::vector<SeriesPoint> figure2_data(const RandomTypingParams& params, Rank i_max) {
  if (i_max == 0) throw DomainError("i_max must be >= 1");
  std::vector<SeriesPoint> series(i_max);
  const auto count = static_cast<std::int64_t>(i_max);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    const Rank i = static_cast<Rank>(k) + 1;
    series[static_cast<std::size_t>(k)] = SeriesPoint{i, rank_probability(params, i)};
  }
  return series;
}

}  // namespace optcode::randtype

namespace optcode::detail {

WordDrawer::WordDrawer(const randtype::RandomTypingParams& params)
    : params_(params), alphabet_(randtype::typing_alphabet(params)) {
  if (params.letter_bias) {
    double acc = 0.0;
    for (double w : *params.letter_bias) cumulative_.push_back(acc += w);
    cumulative_.back() = 1.0;
  }
}

char WordDrawer::letter(rng::Engine& eng) const {
  if (cumulative_.empty()) return alphabet_.symbol(rng::uniform_index(eng, params_.n));
  const double u = rng::uniform01(eng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return alphabet_.symbol(static_cast<std::size_t>(it - cumulative_.begin()));
}

std::string WordDrawer::draw(rng::Engine& eng) const {
  std::string word;
  for (unsigned k = 0; k < params_.l_min; ++k) word.push_back(letter(eng));
  while (!(rng::uniform01(eng) < params_.p_s)) word.push_back(letter(eng));
  return word;
}

}  // namespace optcode::detail

namespace optcode::randtype {

GoodnessOfFit rank_goodness_of_fit(const RandomTypingParams& params,
                                   const std::vector<std::string>& words, double min_expected) {
  if (params.letter_bias) throw DomainError("the exact rank law assumes uniform letters");
  const auto alphabet = typing_alphabet(params);
  const double n = static_cast<double>(words.size());

  Rank cutoff = 0;
  while (n * rank_probability(params, cutoff + 1) >= min_expected) ++cutoff;
  if (cutoff == 0) throw DomainError("too few words for any bin to reach the minimum expected count");

  std::vector<std::uint64_t> observed(cutoff + 1, 0);  // last slot pools ranks > cutoff
  const std::size_t cutoff_length = codebook::code_length_for_rank(params.n, params.l_min, cutoff);
  for (const auto& w : words) {
    if (w.size() > cutoff_length) {
      ++observed[cutoff];
      continue;
    }
    const Rank r = codebook::string_rank(alphabet, params.l_min, w);
    ++observed[r <= cutoff ? r - 1 : cutoff];
  }

  GoodnessOfFit fit;
  for (Rank i = 1; i <= cutoff + 1; ++i) {
    const double expected =
        n * (i <= cutoff ? rank_probability(params, i) : rank_survival(params, cutoff));
    if (i > cutoff && expected <= 0.0) break;
    const double diff = static_cast<double>(observed[i - 1]) - expected;
    fit.statistic += diff * diff / expected;
    ++fit.bins;
  }
  fit.degrees_of_freedom = fit.bins - 1;
  fit.p_value = fit.degrees_of_freedom == 0
                    ? 1.0
                    : boost::math::gamma_q(static_cast<double>(fit.degrees_of_freedom) / 2.0,
                                           fit.statistic / 2.0);
  return fit;
}

}  // namespace optcode::randtype
