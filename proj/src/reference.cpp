#include "optcode/reference.hpp"

#include <algorithm>
#include <limits>

#include "detail.hpp"
#include "optcode/error.hpp"

namespace optcode::reference {

double brute_force_minimum(const assign::RankedDistribution& dist,
                           const assign::MagnitudeMultiset& ms, const assign::CostFunction& g) {
  if (dist.size() > assign::kBruteForceMaxRanks || ms.size() > assign::kBruteForceMaxMagnitudes) {
    throw DomainError("brute force limited to V <= 8 and |L| <= 10");
  }
  if (ms.size() < dist.size()) throw DomainError("multiset has fewer magnitudes than ranks");

  const std::size_t v = dist.size();
  const auto values = ms.values();
  // Odometer over ordered selections: pick[k] indexes the magnitude for rank k.
  std::vector<std::size_t> pick(v, 0);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    bool distinct = true;
    for (std::size_t a = 0; a < v && distinct; ++a) {
      for (std::size_t b = a + 1; b < v; ++b) {
        if (pick[a] == pick[b]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) {
      assign::Assignment asg;
      for (std::size_t k = 0; k < v; ++k) asg.magnitudes.push_back(values[pick[k]]);
      best = std::min(best, assign::mean_cost(dist, asg, g));
    }
    std::size_t k = v;
    while (k > 0) {
      --k;
      if (++pick[k] < values.size()) break;
      pick[k] = 0;
      if (k == 0) return best;
    }
  }
}

assign::PairCounts pair_counts(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("pair_counts: size mismatch");
  assign::PairCounts counts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const int sx = (x[i] > x[j]) - (x[i] < x[j]);
      const int sy = (y[i] > y[j]) - (y[i] < y[j]);
      if (sx * sy == 1) ++counts.concordant;
      if (sx * sy == -1) ++counts.discordant;
    }
  }
  return counts;
}

corpus::FrequencyTable build_table(std::string_view text, const corpus::BuildOptions& options) {
  text::validate_utf8(text);
  detail::TallyMap tally;
  detail::tally_tokens(text, 0, text.size(), options.tokenizer, tally);
  if (tally.empty()) throw DomainError("input contains no tokens");
  std::vector<std::pair<std::string, detail::TokenTally>> rows(tally.begin(), tally.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.count != b.second.count) return a.second.count > b.second.count;
    return a.second.first_offset < b.second.first_offset;
  });
  std::vector<corpus::FrequencyEntry> entries;
  for (auto& [type, t] : rows) {
    const auto magnitude = static_cast<double>(text::length(type, options.unit));
    entries.push_back(corpus::FrequencyEntry{std::move(type), t.count, magnitude});
  }
  return corpus::FrequencyTable(std::move(entries), true);
}

std::vector<std::string> generate(const randtype::RandomTypingParams& params, std::uint64_t seed,
                                  std::size_t n_words) {
  const detail::WordDrawer drawer(params);
  std::vector<std::string> words;
  words.reserve(n_words);
  for (std::size_t begin = 0, b = 0; begin < n_words; begin += randtype::kBlockSize, ++b) {
    rng::Engine eng(rng::block_seed(seed, b));
    const std::size_t end = std::min(n_words, begin + randtype::kBlockSize);
    for (std::size_t k = begin; k < end; ++k) words.push_back(drawer.draw(eng));
  }
  return words;
}

std::vector<maxent::Rank> sample(const maxent::RankSampler& sampler, std::uint64_t seed,
                                 std::size_t n) {
  std::vector<maxent::Rank> out;
  out.reserve(n);
  for (std::size_t begin = 0, b = 0; begin < n; begin += maxent::RankSampler::kBlockSize, ++b) {
    rng::Engine eng(rng::block_seed(seed, b));
    const std::size_t end = std::min(n, begin + maxent::RankSampler::kBlockSize);
    for (std::size_t k = begin; k < end; ++k) out.push_back(sampler.invert(rng::uniform_open_closed(eng)));
  }
  return out;
}

}  // namespace optcode::reference
