#pragma once

// Command-line front end. Everything is reachable in-process through run()
// so tests can drive it without spawning the binary.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace optcode::cli {

enum class Subcommand { codes, lengths, simulate, fit, analyze, figure, oracle };
enum class OutputFormat { tsv, csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

// Validated, defaulted flag set for one invocation.
struct CommandSpec {
  Subcommand subcommand = Subcommand::codes;
  OutputFormat format = OutputFormat::tsv;
  std::optional<std::string> output;  // stdout when empty
  std::uint64_t seed = 1;

  // codes / lengths / figure / simulate / analyze
  std::string alphabet = "ab";
  std::uint64_t ranks = 0;
  std::uint64_t n = 2;
  unsigned l_min = 1;
  std::uint64_t i_max = 1000;
  double p_s = 0.18;
  std::vector<double> letter_bias;
  std::uint64_t words = 100000;
  std::optional<std::string> corpus_out;

  // fit
  std::string family = "zeta";
  double alpha = 2.0;
  double b = 1.0;
  double q = 0.5;
  std::uint64_t samples = 100000;

  // analyze / fit from text
  std::optional<std::string> input;
  std::optional<std::string> magnitudes;
  std::optional<std::string> table_out;
  bool fold_case = true;
  bool strip_punctuation = true;
  bool graphemes = false;

  // oracle
  std::uint64_t instances = 200;
  std::uint64_t max_ranks = 7;
  std::uint64_t max_magnitudes = 9;
};

// Parses and checks argv (argv[0] is the program name). Throws UsageError for
// unknown or ill-typed flags and DomainError for out-of-domain values.
CommandSpec validate(const std::vector<std::string>& args);

// Executes a validated command. Output goes to `out` unless spec.output names
// a file; files are written only after the command succeeds.
int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

// validate + run with exit-code mapping: 2 usage, 3 domain, 4 I/O.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optcode::cli
