#pragma once

// Per-item work shared by the OpenMP kernels and their sequential references.

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "optcode/codebook.hpp"
#include "optcode/randtype.hpp"
#include "optcode/rng.hpp"
#include "optcode/text.hpp"

namespace optcode::detail {

class WordDrawer {
 public:
  explicit WordDrawer(const randtype::RandomTypingParams& params);

  std::string draw(rng::Engine& eng) const;

 private:
  char letter(rng::Engine& eng) const;

  const randtype::RandomTypingParams& params_;
  codebook::Alphabet alphabet_;
  std::vector<double> cumulative_;  // empty for uniform letters
};

struct TokenTally {
  std::uint64_t count = 0;
  std::uint64_t first_offset = 0;
};

using TallyMap = std::unordered_map<std::string, TokenTally>;

// Counts the tokens of text[begin, end), which must start and end on
// whitespace boundaries. Offsets are absolute byte positions.
void tally_tokens(std::string_view text, std::size_t begin, std::size_t end,
                  const text::TokenizerOptions& options, TallyMap& tally);

}  // namespace optcode::detail
