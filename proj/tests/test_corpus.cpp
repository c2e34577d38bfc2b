#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "optcode/corpus.hpp"
#include "optcode/error.hpp"
#include "optcode/maxent.hpp"
#include "optcode/reference.hpp"
#include "optcode/text.hpp"

using namespace optcode;
using namespace optcode::corpus;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::pair<std::string, std::uint64_t>> rows(const FrequencyTable& t) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& e : t.entries()) out.emplace_back(e.type, e.frequency);
  return out;
}

FrequencyTable table_of(std::vector<std::uint64_t> freqs, std::vector<double> mags) {
  std::vector<FrequencyEntry> entries;
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    entries.push_back({"t" + std::to_string(k), freqs[k], mags[k]});
  }
  return FrequencyTable(std::move(entries), true);
}

}  // namespace

TEST(Text, Utf8Validation) {
  EXPECT_NO_THROW(text::validate_utf8("caf\xc3\xa9 \xf0\x9f\x98\x80"));
  EXPECT_THROW(text::validate_utf8("ab\xc3"), IoError);
  EXPECT_THROW(text::validate_utf8("\xc0\xaf"), IoError);
  EXPECT_THROW(text::validate_utf8("\xed\xa0\x80"), IoError);
  try {
    text::validate_utf8("abc\xff");
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(Text, Lengths) {
  EXPECT_EQ(text::code_point_count("caf\xc3\xa9"), 4u);
  // e + combining acute accent.
  EXPECT_EQ(text::code_point_count("cafe\xcc\x81"), 5u);
  EXPECT_EQ(text::grapheme_count("cafe\xcc\x81"), 4u);
  // Family emoji joined with ZWJ.
  EXPECT_EQ(text::grapheme_count("\xf0\x9f\x91\xa8\xe2\x80\x8d\xf0\x9f\x91\xa9"), 1u);
}

TEST(Text, NormalizeToken) {
  const text::TokenizerOptions defaults;
  EXPECT_EQ(text::normalize_token("\"Hello!\"", defaults), "hello");
  EXPECT_EQ(text::normalize_token("don't", defaults), "don't");
  EXPECT_EQ(text::normalize_token("...", defaults), "");
  EXPECT_EQ(text::normalize_token("Hello!", {false, false}), "Hello!");
}

TEST(BuildTable, Examples) {
  EXPECT_EQ(rows(build_table("a b b c c c")),
            (std::vector<std::pair<std::string, std::uint64_t>>{{"c", 3}, {"b", 2}, {"a", 1}}));
  EXPECT_EQ(rows(build_table("The the THE")),
            (std::vector<std::pair<std::string, std::uint64_t>>{{"the", 3}}));
  EXPECT_THROW(build_table("  ... \n"), DomainError);
  EXPECT_THROW(build_table("ok \xff"), IoError);
}

TEST(BuildTable, GoldenFixture) {
  const auto table = build_table(slurp(OPTCODE_FIXTURE_DIR "/tokenizer_input.txt"));
  std::ostringstream out;
  write_tsv(out, table);
  EXPECT_EQ(out.str(), slurp(OPTCODE_FIXTURE_DIR "/tokenizer_expected.tsv"));
}

TEST(BuildTable, MatchesSerialCountOnLargeText) {
  std::string text;
  for (int k = 0; k < 40000; ++k) text += "w" + std::to_string((k * 7919) % 997) + (k % 13 ? " " : "\n");
  BuildOptions options;
  const auto parallel = build_table(text, options);
  const auto serial = reference::build_table(text, options);
  EXPECT_EQ(rows(parallel), rows(serial));
}

TEST(Magnitudes, SidecarOverrides) {
  std::istringstream sidecar("# type\tduration\nthe\t0.21\n\ncat\t0.4\n");
  const auto mags = read_magnitudes(sidecar);
  EXPECT_EQ(mags.size(), 2u);
  const auto table = with_magnitudes(build_table("the cat the dog"), mags);
  EXPECT_FALSE(table.magnitudes_are_lengths());
  EXPECT_DOUBLE_EQ(table.entries()[0].magnitude, 0.21);
  EXPECT_DOUBLE_EQ(table.entries()[2].magnitude, 3.0);
  EXPECT_THROW(optimal_recoding(table, codebook::Alphabet::latin(26)), DomainError);
  std::istringstream bad("the\tfast\n");
  EXPECT_THROW(read_magnitudes(bad), IoError);
}

TEST(Abbreviation, Examples) {
  EXPECT_NEAR(abbreviation_analysis(table_of({3, 2, 1}, {1, 1, 2})).tau, -2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(abbreviation_analysis(table_of({3, 2, 1}, {4, 4, 4})).tau, 0.0);
  const auto r = abbreviation_analysis(table_of({3, 2, 1}, {1, 2, 3}));
  EXPECT_DOUBLE_EQ(r.tau, -1.0);
  EXPECT_EQ(r.discordant, 3u);
  EXPECT_LT(r.z_score, 0.0);
  EXPECT_FALSE(r.note.empty());
}

TEST(Recoding, Examples) {
  const auto alphabet = codebook::Alphabet::latin(26);
  const auto r = optimal_recoding(build_table("the the the of of xylophone"), alphabet);
  EXPECT_NEAR(r.l_actual, 22.0 / 6.0, 1e-15);
  EXPECT_NEAR(r.l_optimal, 1.0, 1e-15);
  EXPECT_TRUE(r.same_alphabet);
  EXPECT_EQ(r.code.codes(), (std::vector<std::string>{"a", "b", "c"}));

  const auto fixed = optimal_recoding(build_table("a a a b b c"), alphabet);
  EXPECT_DOUBLE_EQ(fixed.l_optimal, fixed.l_actual);
  const auto single = optimal_recoding(build_table("hello hello"), alphabet, 3);
  EXPECT_DOUBLE_EQ(single.l_optimal, 3.0);
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(frequency_spectrum(table_of({3, 3, 1}, {1, 1, 1})),
            (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 2}}));
  const auto distinct = frequency_spectrum(table_of({5, 4, 2}, {1, 1, 1}));
  for (const auto& [f, n] : distinct) EXPECT_EQ(n, 1u);
}

TEST(Spectrum, ZetaFrequenciesGiveExponentTwo) {
  // Type frequencies drawn from zeta(2) give n_f ~ f^-2.
  const maxent::RankSampler sampler(std::make_shared<maxent::ZetaLaw>(maxent::ZetaParams{2.0}));
  auto freqs = sampler.sample(4, 100000);
  std::sort(freqs.begin(), freqs.end(), std::greater<>());
  std::vector<std::uint64_t> f(freqs.begin(), freqs.end());
  const auto table = table_of(f, std::vector<double>(f.size(), 1.0));
  EXPECT_NEAR(spectrum_exponent(frequency_spectrum(table)), 2.0, 0.3);
}

TEST(ModelComparison, PicksGeneratingFamily) {
  auto table_from_ranks = [](const std::vector<maxent::Rank>& ranks) {
    std::vector<std::string> tokens;
    for (auto r : ranks) tokens.push_back("w" + std::to_string(r));
    return table_from_tokens(tokens);
  };
  const maxent::RankSampler geo(std::make_shared<maxent::GeometricLaw>(maxent::GeometricParams{0.2}));
  const auto g = rank_frequency_fit(table_from_ranks(geo.sample(6, 50000)));
  EXPECT_EQ(g.fits.front().family, maxent::Family::geometric);
  const maxent::RankSampler zeta(std::make_shared<maxent::ZetaLaw>(maxent::ZetaParams{1.8}));
  const auto z = rank_frequency_fit(table_from_ranks(zeta.sample(6, 50000)));
  EXPECT_NE(z.fits.front().family, maxent::Family::geometric);
  const auto tiny = rank_frequency_fit(build_table("a a b"));
  EXPECT_TRUE(tiny.low_support);
  EXPECT_EQ(tiny.fits.size(), 3u);
}
