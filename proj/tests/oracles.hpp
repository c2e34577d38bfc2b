#pragma once

// Deliberately naive reference computations used only by the tests. None of
// them call into the library's numeric code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

// Minimum of sum p_k g(l_{pick_k}) over every ordered selection of p.size()
// distinct indices of l, enumerated as (subset, permutation) pairs.
template <class G>
double min_cost_by_permutation(const std::vector<double>& p, const std::vector<double>& l, G g) {
  const std::size_t v = p.size();
  const std::size_t n = l.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<long>(v), true);
  std::sort(chosen.begin(), chosen.end());
  do {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k) {
      if (chosen[k]) idx.push_back(k);
    }
    do {
      double cost = 0.0;
      for (std::size_t k = 0; k < v; ++k) cost += p[k] * g(l[idx[k]]);
      best = std::min(best, cost);
    } while (std::next_permutation(idx.begin(), idx.end()));
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return best;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Length of the i-th string when strings are listed shortest first: walk the
// blocks of N^l strings until rank i is covered.
inline unsigned length_by_blocks(std::uint64_t n, unsigned l_min, std::uint64_t i) {
  std::uint64_t covered = 0;
  std::uint64_t block = ipow(n, l_min);
  for (unsigned l = l_min;; ++l, block *= n) {
    covered += block;
    if (i <= covered) return l;
  }
}

// All strings over `symbols` with lengths l_min..l_max, shortest first and
// lexicographic within a length, built by repeated extension.
inline std::vector<std::string> all_strings(const std::string& symbols, unsigned l_min,
                                            unsigned l_max) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (unsigned l = 0; l <= l_max; ++l) {
    if (l >= l_min) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& s : layer) {
      for (char c : symbols) next.push_back(s + c);
    }
    layer = std::move(next);
  }
  return out;
}

// Probability that random typing emits one given word of length l: l letters
// chosen with 1/N each, continuation (1-p_s) after each of the l - l_min
// optional letters, then the delimiter.
inline double typed_word_probability(std::uint64_t n, double p_s, unsigned l_min, unsigned l) {
  double p = 1.0;
  for (unsigned k = 0; k < l; ++k) p /= static_cast<double>(n);
  for (unsigned k = l_min; k < l; ++k) p *= 1.0 - p_s;
  return p * p_s;
}

// sum_{i>=0} (i+b)^-s: compensated sum of the head terms, smallest first,
// plus the first Euler-Maclaurin terms for the tail starting at i = head.
inline double hurwitz_by_summation(double s, double b, std::uint64_t head = 2000000) {
  const double x = static_cast<double>(head) + b;
  double sum = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s) +
               s * std::pow(x, -s - 1.0) / 12.0;
  double carry = 0.0;
  for (std::uint64_t i = head; i-- > 0;) {
    const double term = std::pow(static_cast<double>(i) + b, -s);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

struct Pairs {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;
};

inline Pairs count_pairs(const std::vector<double>& x, const std::vector<double>& y) {
  Pairs out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i >= j) continue;
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx * dy > 0) ++out.concordant;
      if (dx * dy < 0) ++out.discordant;
    }
  }
  return out;
}

// Population-moment Pearson correlation written out term by term.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace oracle
