#include "optcode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "optcode/error.hpp"

namespace optcode::codebook {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// n^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t n, unsigned k) {
  u128 result = 1;
  for (unsigned e = 0; e < k; ++e) {
    result *= n;
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

void check_rank(Rank i) {
  if (i == 0) throw DomainError("ranks start at 1");
}

}  // namespace

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  std::fill(std::begin(index_), std::end(index_), -1);
  if (symbols_.empty()) throw DomainError("alphabet needs at least one symbol");
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    auto& slot = index_[static_cast<unsigned char>(symbols_[k])];
    if (slot != -1) {
      throw DomainError(std::string("alphabet symbol '") + symbols_[k] + "' is repeated");
    }
    slot = static_cast<int>(k);
  }
}

Alphabet Alphabet::latin(std::size_t n) {
  if (n < 1 || n > 26) throw DomainError("latin alphabet size must be in [1, 26]");
  return Alphabet(std::string("abcdefghijklmnopqrstuvwxyz").substr(0, n));
}

bool Alphabet::contains(std::string_view s) const noexcept {
  return std::all_of(s.begin(), s.end(), [this](char c) { return index_of(c) >= 0; });
}

CodeTable::CodeTable(Alphabet alphabet, std::vector<std::string> codes)
    : alphabet_(std::move(alphabet)), codes_(std::move(codes)) {
  if (codes_.empty()) throw DomainError("code table needs at least one rank");
  for (std::size_t k = 0; k < codes_.size(); ++k) {
    if (!alphabet_.contains(codes_[k])) {
      throw DomainError("code of rank " + std::to_string(k + 1) + " uses symbols outside the alphabet");
    }
  }
}

const char* to_string(CodeClass c) noexcept {
  switch (c) {
    case CodeClass::singular:
      return "singular";
    case CodeClass::non_singular:
      return "non-singular";
    case CodeClass::uniquely_decodable:
      return "uniquely-decodable";
    case CodeClass::instantaneous:
      return "instantaneous";
  }
  return "?";
}

std::string nth_string(const Alphabet& alphabet, unsigned l_min, Rank i) {
  check_rank(i);
  const std::uint64_t n = alphabet.size();
  if (n == 1) {
    return std::string(static_cast<std::size_t>(i - 1 + l_min), alphabet.symbol(0));
  }
  // Walk the length blocks N^l_min, N^(l_min+1), ... until the rank falls inside.
  std::uint64_t offset = i - 1;
  unsigned length = l_min;
  for (;;) {
    const std::uint64_t block = saturating_pow(n, length);
    if (offset < block) break;
    offset -= block;
    ++length;
  }
  std::string s(length, alphabet.symbol(0));
  for (unsigned pos = length; pos-- > 0 && offset > 0;) {
    s[pos] = alphabet.symbol(static_cast<std::size_t>(offset % n));
    offset /= n;
  }
  return s;
}

Rank string_rank(const Alphabet& alphabet, unsigned l_min, std::string_view s) {
  if (s.size() < l_min) throw DomainError("string shorter than l_min");
  if (!alphabet.contains(s)) throw DomainError("string uses symbols outside the alphabet");
  const std::uint64_t n = alphabet.size();
  if (n == 1) return s.size() - l_min + 1;

  u128 rank = 1;
  for (unsigned k = l_min; k < s.size(); ++k) rank += saturating_pow(n, k);
  u128 value = 0;
  for (char c : s) {
    value = value * n + static_cast<unsigned>(alphabet.index_of(c));
    if (value > kSaturated) throw DomainError("string rank overflows 64 bits");
  }
  rank += value;
  if (rank > kSaturated) throw DomainError("string rank overflows 64 bits");
  return static_cast<Rank>(rank);
}

unsigned code_length_for_rank(std::uint64_t n, unsigned l_min, Rank i) {
  check_rank(i);
  if (n == 0) throw DomainError("alphabet size must be >= 1");
  if (n == 1) return static_cast<unsigned>(i + l_min - 1);

  // Smallest e with N^e >= (N-1) i + N^l_min; the length is e - 1.
  u128 target = static_cast<u128>(n - 1) * i;
  u128 base_term = 1;
  for (unsigned e = 0; e < l_min; ++e) base_term *= n;
  target += base_term;

  unsigned e = 0;
  u128 power = 1;
  while (power < target) {
    power *= n;
    ++e;
  }
  return e - 1;
}

Rank last_rank_of_length(std::uint64_t n, unsigned l_min, unsigned l) {
  if (l < l_min) return 0;
  if (n == 1) return l - l_min + 1;
  std::uint64_t total = 0;
  for (unsigned k = l_min; k <= l; ++k) total = saturating_add(total, saturating_pow(n, k));
  return total;
}

CodeTable optimal_nonsingular_code(std::size_t ranks, const Alphabet& alphabet, unsigned l_min) {
  std::vector<std::string> codes;
  codes.reserve(ranks);
  for (Rank i = 1; i <= ranks; ++i) codes.push_back(nth_string(alphabet, l_min, i));
  return CodeTable(alphabet, std::move(codes));
}

CodeTable optimal_nonsingular_code(const assign::RankedDistribution& dist,
                                   const Alphabet& alphabet, unsigned l_min) {
  return optimal_nonsingular_code(dist.size(), alphabet, l_min);
}

std::vector<unsigned> uniquely_decodable_lengths(const assign::RankedDistribution& dist,
                                                 std::uint64_t n) {
  if (n < 2) throw DomainError("uniquely decodable lengths need N >= 2");
  const double base = static_cast<double>(n);
  std::vector<unsigned> lengths;
  lengths.reserve(dist.size());
  for (double p : dist.probs()) {
    if (!(p > 0.0)) throw DomainError("uniquely decodable lengths need every p_i > 0");
    // Smallest l with N^-l <= p; the log estimate is corrected against pow to
    // avoid rounding at exact powers.
    double estimate = std::ceil(-std::log(p) / std::log(base));
    unsigned l = estimate > 0.0 ? static_cast<unsigned>(estimate) : 0u;
    while (l > 0 && std::pow(base, -static_cast<double>(l - 1)) <= p) --l;
    while (std::pow(base, -static_cast<double>(l)) > p) ++l;
    lengths.push_back(l);
  }
  return lengths;
}

double kraft_sum(const std::vector<unsigned>& lengths, std::uint64_t n) {
  double sum = 0.0;
  for (unsigned l : lengths) sum += std::pow(static_cast<double>(n), -static_cast<double>(l));
  return sum;
}

CodeClass classify(const CodeTable& table) {
  const auto& codes = table.codes();
  std::vector<std::string> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return CodeClass::singular;

  // A table containing the empty string is never uniquely decodable: any
  // number of copies of it decode to the same message.
  if (sorted.front().empty()) return CodeClass::non_singular;

  // In sorted order a prefix is immediately followed by one of its extensions.
  bool prefix_free = true;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].starts_with(sorted[k - 1])) {
      prefix_free = false;
      break;
    }
  }
  if (prefix_free) return CodeClass::instantaneous;

  // Sardinas-Patterson: the code is uniquely decodable iff no dangling suffix
  // is itself a codeword.
  const std::unordered_set<std::string> codeset(codes.begin(), codes.end());
  std::unordered_set<std::string> seen;
  std::deque<std::string> pending;
  auto push = [&](std::string suffix) {
    if (!suffix.empty() && seen.insert(suffix).second) pending.push_back(std::move(suffix));
  };
  for (const auto& u : sorted) {
    for (const auto& v : sorted) {
      if (v.size() > u.size() && v.starts_with(u)) push(v.substr(u.size()));
    }
  }
  while (!pending.empty()) {
    const std::string d = std::move(pending.front());
    pending.pop_front();
    if (codeset.contains(d)) return CodeClass::non_singular;
    for (const auto& c : sorted) {
      if (c.size() > d.size() && c.starts_with(d)) push(c.substr(d.size()));
      if (d.size() > c.size() && d.starts_with(c)) push(d.substr(c.size()));
    }
  }
  return CodeClass::uniquely_decodable;
}

std::vector<std::vector<Rank>> segmentations(std::string_view message, const CodeTable& table,
                                             std::size_t cap) {
  std::vector<std::vector<Rank>> parses;
  if (cap == 0) return parses;
  const auto& codes = table.codes();
  const std::size_t n = message.size();

  // completes[pos]: the suffix starting at pos splits into codewords. Empty
  // codewords are skipped; they would admit unboundedly many parses.
  std::vector<char> completes(n + 1, 0);
  completes[n] = 1;
  for (std::size_t pos = n; pos-- > 0;) {
    for (const auto& c : codes) {
      if (!c.empty() && message.substr(pos).starts_with(c) && completes[pos + c.size()]) {
        completes[pos] = 1;
        break;
      }
    }
  }
  if (!completes[0]) return parses;

  std::vector<Rank> current;
  auto descend = [&](auto&& self, std::size_t pos) -> void {
    if (parses.size() >= cap) return;
    if (pos == n) {
      parses.push_back(current);
      return;
    }
    for (std::size_t k = 0; k < codes.size(); ++k) {
      const auto& c = codes[k];
      if (c.empty() || !message.substr(pos).starts_with(c) || !completes[pos + c.size()]) continue;
      current.push_back(k + 1);
      self(self, pos + c.size());
      current.pop_back();
      if (parses.size() >= cap) return;
    }
  };
  descend(descend, 0);
  return parses;
}

double mean_code_length(const CodeTable& table, const assign::RankedDistribution& dist) {
  if (table.size() != dist.size()) {
    throw DomainError("mean_code_length: table has " + std::to_string(table.size()) +
                      " ranks, distribution has " + std::to_string(dist.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    sum += dist[k] * static_cast<double>(table.codes()[k].size());
  }
  return sum;
}

void write_tsv(std::ostream& out, const CodeTable& table) {
  out << "rank\tcode\n";
  for (std::size_t k = 0; k < table.size(); ++k) out << (k + 1) << '\t' << table.codes()[k] << '\n';
}

CodeTable read_tsv(std::istream& in, const Alphabet& alphabet) {
  std::string line;
  if (!std::getline(in, line) || line != "rank\tcode") {
    throw IoError("code table TSV must start with the header 'rank<TAB>code'");
  }
  std::vector<std::string> codes;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw IoError("code table row without a tab: " + line);
    Rank rank = 0;
    std::istringstream rs(line.substr(0, tab));
    if (!(rs >> rank) || rank != codes.size() + 1) {
      throw IoError("code table ranks must be contiguous from 1: " + line);
    }
    codes.push_back(line.substr(tab + 1));
  }
  return CodeTable(alphabet, std::move(codes));
}

}  // namespace optcode::codebook
