#include "optcode/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "detail.hpp"
#include "optcode/error.hpp"
#include "optcode/format.hpp"

namespace optcode::corpus {

namespace {

FrequencyTable table_from_tally(const detail::TallyMap& tally, text::LengthUnit unit) {
  if (tally.empty()) throw DomainError("input contains no tokens");
  struct Row {
    const std::string* type;
    detail::TokenTally t;
  };
  std::vector<Row> rows;
  rows.reserve(tally.size());
  for (const auto& [type, t] : tally) rows.push_back(Row{&type, t});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.t.count != b.t.count) return a.t.count > b.t.count;
    if (a.t.first_offset != b.t.first_offset) return a.t.first_offset < b.t.first_offset;
    return *a.type < *b.type;
  });
  std::vector<FrequencyEntry> entries;
  entries.reserve(rows.size());
  for (const auto& r : rows) {
    entries.push_back(FrequencyEntry{*r.type, r.t.count, static_cast<double>(text::length(*r.type, unit))});
  }
  return FrequencyTable(std::move(entries), true);
}

// Chunk boundaries advanced to the next whitespace byte, so no token straddles
// two chunks.
std::vector<std::size_t> chunk_bounds(std::string_view text, std::size_t chunks) {
  std::vector<std::size_t> bounds{0};
  for (std::size_t k = 1; k < chunks; ++k) {
    std::size_t pos = std::max(bounds.back(), text.size() * k / chunks);
    while (pos < text.size() && !text::is_space(text[pos])) ++pos;
    bounds.push_back(pos);
  }
  bounds.push_back(text.size());
  return bounds;
}

}  // namespace

FrequencyTable::FrequencyTable(std::vector<FrequencyEntry> entries, bool magnitudes_are_lengths)
    : entries_(std::move(entries)), lengths_(magnitudes_are_lengths) {
  if (entries_.empty()) throw DomainError("frequency table needs at least one type");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    if (e.frequency == 0) throw DomainError("type '" + e.type + "' has zero frequency");
    if (!(e.magnitude > 0.0) || !std::isfinite(e.magnitude)) {
      throw DomainError("type '" + e.type + "' needs a positive magnitude");
    }
    if (k > 0 && e.frequency > entries_[k - 1].frequency) {
      throw DomainError("frequency table must be sorted by frequency, nonincreasing");
    }
    total_ += e.frequency;
  }
}

assign::RankedDistribution FrequencyTable::distribution() const {
  std::vector<std::uint64_t> counts;
  counts.reserve(entries_.size());
  for (const auto& e : entries_) counts.push_back(e.frequency);
  return assign::RankedDistribution::from_counts(counts);
}

assign::Assignment FrequencyTable::magnitudes() const {
  assign::Assignment asg;
  asg.magnitudes.reserve(entries_.size());
  for (const auto& e : entries_) asg.magnitudes.push_back(e.magnitude);
  return asg;
}

FrequencyTable build_table(std::string_view text, const BuildOptions& options) {
  text::validate_utf8(text);
  const std::size_t threads = static_cast<std::size_t>(omp_get_max_threads());
  const std::size_t chunks = std::max<std::size_t>(1, std::min(threads * 4, text.size() / 4096 + 1));
  const auto bounds = chunk_bounds(text, chunks);

  std::vector<detail::TallyMap> partial(chunks);
  const auto count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto c = static_cast<std::size_t>(k);
    detail::tally_tokens(text, bounds[c], bounds[c + 1], options.tokenizer, partial[c]);
  }

  detail::TallyMap merged = std::move(partial.front());
  for (std::size_t c = 1; c < chunks; ++c) {
    for (auto& [type, t] : partial[c]) {
      auto [it, inserted] = merged.try_emplace(type, t);
      if (!inserted) {
        it->second.count += t.count;
        it->second.first_offset = std::min(it->second.first_offset, t.first_offset);
      }
    }
  }
  return table_from_tally(merged, options.unit);
}

FrequencyTable build_table(std::istream& in, const BuildOptions& options) {
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed to read input text");
  return build_table(std::string_view(content), options);
}

FrequencyTable table_from_tokens(const std::vector<std::string>& tokens, text::LengthUnit unit) {
  detail::TallyMap tally;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    auto [it, inserted] = tally.try_emplace(tokens[k], detail::TokenTally{0, k});
    ++it->second.count;
  }
  return table_from_tally(tally, unit);
}

std::map<std::string, double> read_magnitudes(std::istream& in) {
  std::map<std::string, double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw IoError("magnitude file line " + std::to_string(line_no) + ": expected type<TAB>magnitude");
    }
    std::istringstream vs(line.substr(tab + 1));
    double value = 0.0;
    if (!(vs >> value) || !(value > 0.0) || !std::isfinite(value)) {
      throw IoError("magnitude file line " + std::to_string(line_no) + ": magnitude must be a positive number");
    }
    out[line.substr(0, tab)] = value;
  }
  return out;
}

FrequencyTable with_magnitudes(const FrequencyTable& table,
                               const std::map<std::string, double>& magnitudes) {
  auto entries = table.entries();
  bool overridden = false;
  for (auto& e : entries) {
    if (auto it = magnitudes.find(e.type); it != magnitudes.end()) {
      e.magnitude = it->second;
      overridden = true;
    }
  }
  return FrequencyTable(std::move(entries), table.magnitudes_are_lengths() && !overridden);
}

AbbreviationResult abbreviation_analysis(const FrequencyTable& table) {
  if (table.size() < 2) throw DomainError("abbreviation analysis needs at least two types");
  const auto dist = table.distribution();
  const auto asg = table.magnitudes();
  const auto counts = assign::pair_counts(dist, asg);
  const double tau = assign::kendall_tau(dist, asg);
  const double n = static_cast<double>(table.size());
  const double s = static_cast<double>(counts.concordant) - static_cast<double>(counts.discordant);
  const double z = s / std::sqrt(n * (n - 1.0) * (2.0 * n + 5.0) / 18.0);
  std::string note =
      "tau <= 0 is necessary for an optimal assignment of these magnitudes; a non-significant tau "
      "does not rule out efficient coding. z is a normal approximation without tie correction.";
  return AbbreviationResult{tau, counts.concordant, counts.discordant, z, std::move(note)};
}

RecodingResult optimal_recoding(const FrequencyTable& table, const codebook::Alphabet& alphabet,
                                unsigned l_min) {
  if (!table.magnitudes_are_lengths()) {
    throw DomainError("recoding compares string lengths; magnitudes were overridden");
  }
  const auto dist = table.distribution();
  const double l_actual = assign::mean_cost(dist, table.magnitudes(), assign::CostFunction::identity());
  double l_optimal = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    l_optimal += dist[k] * codebook::code_length_for_rank(alphabet.size(), l_min, k + 1);
  }
  bool same_alphabet = std::all_of(table.entries().begin(), table.entries().end(),
                                   [&](const FrequencyEntry& e) { return alphabet.contains(e.type); });
  return RecodingResult{l_actual, l_optimal, codebook::optimal_nonsingular_code(dist, alphabet, l_min),
                        same_alphabet};
}

std::map<std::uint64_t, std::uint64_t> frequency_spectrum(const FrequencyTable& table) {
  std::map<std::uint64_t, std::uint64_t> spectrum;
  for (const auto& e : table.entries()) ++spectrum[e.frequency];
  return spectrum;
}

double spectrum_exponent(const std::map<std::uint64_t, std::uint64_t>& spectrum,
                         std::uint64_t min_types) {
  std::vector<std::pair<double, double>> points;
  for (const auto& [f, nf] : spectrum) {
    if (nf >= min_types) points.emplace_back(std::log(static_cast<double>(f)), std::log(static_cast<double>(nf)));
  }
  if (points.size() < 2) throw DomainError("spectrum has fewer than two usable frequencies");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : points) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return -sxy / sxx;
}

ModelComparison rank_frequency_fit(const FrequencyTable& table) {
  if (table.size() < 2) throw DomainError("model comparison needs at least two types");
  std::vector<std::uint64_t> freqs;
  freqs.reserve(table.size());
  for (const auto& e : table.entries()) freqs.push_back(e.frequency);
  const auto data = maxent::RankCounts::from_frequencies(freqs);

  ModelComparison out{{}, table.size() < kMinTypesForFit};
  for (auto family : {maxent::Family::zeta, maxent::Family::zipf_mandelbrot, maxent::Family::geometric}) {
    out.fits.push_back(maxent::fit_mle(data, family));
  }
  std::stable_sort(out.fits.begin(), out.fits.end(),
                   [](const auto& a, const auto& b) { return a.log_likelihood > b.log_likelihood; });
  return out;
}

AnalysisReport analyze(const FrequencyTable& table, const AnalysisOptions& options) {
  AnalysisReport report{table.size(), table.total_tokens(), abbreviation_analysis(table), std::nullopt,
                        std::nullopt};
  if (options.recode && table.magnitudes_are_lengths()) {
    report.recoding = optimal_recoding(table, options.alphabet, options.l_min);
  }
  if (options.fit_models) report.models = rank_frequency_fit(table);
  return report;
}

void write_tsv(std::ostream& out, const FrequencyTable& table) {
  out << "type\tfrequency\tmagnitude\n";
  for (const auto& e : table.entries()) {
    out << e.type << '\t' << e.frequency << '\t' << format::shortest(e.magnitude) << '\n';
  }
}

}  // namespace optcode::corpus

namespace optcode::detail {

void tally_tokens(std::string_view text, std::size_t begin, std::size_t end,
                  const text::TokenizerOptions& options, TallyMap& tally) {
  std::size_t pos = begin;
  while (pos < end) {
    while (pos < end && text::is_space(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < end && !text::is_space(text[pos])) ++pos;
    if (pos == start) break;
    std::string token = text::normalize_token(text.substr(start, pos - start), options);
    if (token.empty()) continue;
    auto [it, inserted] = tally.try_emplace(std::move(token), TokenTally{0, start});
    ++it->second.count;
  }
}

}  // namespace optcode::detail
