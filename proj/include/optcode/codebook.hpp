#pragma once

// Enumeration of strings over an alphabet, optimal non-singular codes and the
// exact length of the i-th shortest string.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "optcode/assign.hpp"

namespace optcode::codebook {

using Rank = std::uint64_t;

// Ordered set of N distinct single-byte symbols. Symbol order defines the
// lexicographic order used to break ties among strings of equal length.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  // "a".."z" truncated to n symbols (n <= 26).
  static Alphabet latin(std::size_t n);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(std::size_t index) const { return symbols_[index]; }

  // Index of c in the alphabet, or -1.
  int index_of(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
  bool contains(std::string_view s) const noexcept;

 private:
  std::string symbols_;
  int index_[256];
};

// One codeword per rank 1..V. Entry i-1 holds the code of rank i.
class CodeTable {
 public:
  CodeTable(Alphabet alphabet, std::vector<std::string> codes);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return codes_.size(); }
  const std::string& code(Rank rank) const { return codes_.at(rank - 1); }
  const std::vector<std::string>& codes() const noexcept { return codes_; }

 private:
  Alphabet alphabet_;
  std::vector<std::string> codes_;
};

enum class CodeClass { singular, non_singular, uniquely_decodable, instantaneous };

const char* to_string(CodeClass c) noexcept;

// Nesting of the classes: instantaneous implies uniquely decodable implies
// non-singular.
constexpr bool is_non_singular(CodeClass c) noexcept { return c != CodeClass::singular; }
constexpr bool is_uniquely_decodable(CodeClass c) noexcept {
  return c == CodeClass::uniquely_decodable || c == CodeClass::instantaneous;
}
constexpr bool is_instantaneous(CodeClass c) noexcept { return c == CodeClass::instantaneous; }

// i-th string (1-based) of length >= l_min in length-then-lexicographic order.
std::string nth_string(const Alphabet& alphabet, unsigned l_min, Rank i);

// Inverse of nth_string. Throws DomainError if s is shorter than l_min or
// uses symbols outside the alphabet.
Rank string_rank(const Alphabet& alphabet, unsigned l_min, std::string_view s);

// Length of the shortest string of length >= l_min still available at rank i:
//   ceil(log_N((N-1) i + N^l_min)) - 1   for N > 1
//   i + l_min - 1                         for N = 1
// evaluated in exact integer arithmetic.
unsigned code_length_for_rank(std::uint64_t n, unsigned l_min, Rank i);

// Largest rank whose optimal code has length l, i.e. sum_{k=l_min..l} N^k.
// Saturates at UINT64_MAX.
Rank last_rank_of_length(std::uint64_t n, unsigned l_min, unsigned l);

// Assigns the i-th string of the enumeration to the i-th most probable type.
// l_min = 0 admits the empty string, which then takes rank 1.
CodeTable optimal_nonsingular_code(const assign::RankedDistribution& dist,
                                   const Alphabet& alphabet, unsigned l_min = 1);
CodeTable optimal_nonsingular_code(std::size_t ranks, const Alphabet& alphabet,
                                   unsigned l_min = 1);

// Shannon code lengths ceil(-log_N p_i); Kraft sum stays <= 1.
std::vector<unsigned> uniquely_decodable_lengths(const assign::RankedDistribution& dist,
                                                 std::uint64_t n);
double kraft_sum(const std::vector<unsigned>& lengths, std::uint64_t n);

// Tightest class of the table. Unique decodability is decided with the
// Sardinas-Patterson dangling-suffix procedure.
CodeClass classify(const CodeTable& table);

// All ways of splitting message into codewords, at most cap of them, as
// 1-based rank sequences. Unparseable messages yield an empty list; the
// empty message has exactly one (empty) parse.
std::vector<std::vector<Rank>> segmentations(std::string_view message,
                                             const CodeTable& table,
                                             std::size_t cap = 64);

double mean_code_length(const CodeTable& table, const assign::RankedDistribution& dist);

// Two-column TSV with header "rank\tcode".
void write_tsv(std::ostream& out, const CodeTable& table);
CodeTable read_tsv(std::istream& in, const Alphabet& alphabet);

}  // namespace optcode::codebook
