#pragma once

// Frequency tables from text, law-of-abbreviation tests, frequency spectra,
// rank-frequency model comparison and optimal recoding.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optcode/assign.hpp"
#include "optcode/codebook.hpp"
#include "optcode/maxent.hpp"
#include "optcode/text.hpp"

namespace optcode::corpus {

struct FrequencyEntry {
  std::string type;
  std::uint64_t frequency;
  double magnitude;
};

// Entries sorted by frequency, nonincreasing. Ties keep the order of first
// occurrence in the input.
class FrequencyTable {
 public:
  FrequencyTable(std::vector<FrequencyEntry> entries, bool magnitudes_are_lengths);

  const std::vector<FrequencyEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t total_tokens() const noexcept { return total_; }
  // False once any magnitude came from a sidecar file.
  bool magnitudes_are_lengths() const noexcept { return lengths_; }

  assign::RankedDistribution distribution() const;
  assign::Assignment magnitudes() const;

 private:
  std::vector<FrequencyEntry> entries_;
  std::uint64_t total_ = 0;
  bool lengths_;
};

struct BuildOptions {
  text::TokenizerOptions tokenizer;
  text::LengthUnit unit = text::LengthUnit::code_points;
};

// Counting runs over whitespace-aligned chunks in parallel; the merged table
// is identical to a sequential count.
FrequencyTable build_table(std::string_view text, const BuildOptions& options = {});
FrequencyTable build_table(std::istream& in, const BuildOptions& options = {});

// Tokens are taken verbatim (no normalization).
FrequencyTable table_from_tokens(const std::vector<std::string>& tokens,
                                 text::LengthUnit unit = text::LengthUnit::code_points);

// Sidecar format: "type<TAB>magnitude" per line; blank lines and lines
// starting with '#' are skipped.
std::map<std::string, double> read_magnitudes(std::istream& in);
FrequencyTable with_magnitudes(const FrequencyTable& table,
                               const std::map<std::string, double>& magnitudes);

struct AbbreviationResult {
  double tau;
  std::uint64_t concordant;
  std::uint64_t discordant;
  // Normal approximation ignoring ties. Descriptive only.
  double z_score;
  std::string note;
};

AbbreviationResult abbreviation_analysis(const FrequencyTable& table);

struct RecodingResult {
  double l_actual;
  double l_optimal;
  codebook::CodeTable code;
  // Every type is spelled with symbols of the recoding alphabet, which is
  // when l_optimal <= l_actual is guaranteed.
  bool same_alphabet;

  double efficiency_ratio() const noexcept { return l_optimal / l_actual; }
};

// Throws DomainError when magnitudes are not string lengths.
RecodingResult optimal_recoding(const FrequencyTable& table, const codebook::Alphabet& alphabet,
                                unsigned l_min = 1);

// f -> number of types with frequency exactly f.
std::map<std::uint64_t, std::uint64_t> frequency_spectrum(const FrequencyTable& table);

// beta of n_f ~ f^-beta by least squares on log-log points with n_f >= min_types.
double spectrum_exponent(const std::map<std::uint64_t, std::uint64_t>& spectrum,
                         std::uint64_t min_types = 5);

struct ModelComparison {
  std::vector<maxent::FitResult> fits;  // best log-likelihood first
  bool low_support;                     // fewer than kMinTypesForFit types
};

inline constexpr std::size_t kMinTypesForFit = 5;

ModelComparison rank_frequency_fit(const FrequencyTable& table);

struct AnalysisReport {
  std::size_t types;
  std::uint64_t tokens;
  AbbreviationResult abbreviation;
  std::optional<RecodingResult> recoding;
  std::optional<ModelComparison> models;
};

struct AnalysisOptions {
  codebook::Alphabet alphabet = codebook::Alphabet::latin(26);
  unsigned l_min = 1;
  bool recode = true;
  bool fit_models = true;
};

AnalysisReport analyze(const FrequencyTable& table, const AnalysisOptions& options = {});

// Header "type\tfrequency\tmagnitude".
void write_tsv(std::ostream& out, const FrequencyTable& table);

}  // namespace optcode::corpus
