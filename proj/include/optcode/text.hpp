#pragma once

// UTF-8 validation, tokenization and token length measures.
//
// Tokenization rules:
//   * tokens are maximal runs of non-whitespace bytes; whitespace is ASCII
//     space, \t, \n, \v, \f, \r;
//   * with strip_punctuation, leading and trailing ASCII punctuation is
//     removed (inner punctuation such as "don't" or "e-mail" is kept) and
//     tokens left empty are dropped;
//   * with fold_case, ASCII letters are lowercased; other bytes are kept.

#include <cstddef>
#include <string>
#include <string_view>

namespace optcode::text {

struct TokenizerOptions {
  bool fold_case = true;
  bool strip_punctuation = true;
};

enum class LengthUnit { code_points, graphemes };

// Throws IoError naming the byte offset of the first invalid sequence.
void validate_utf8(std::string_view s);

bool is_space(char c) noexcept;

// Applies the punctuation and case rules to one raw whitespace-delimited
// token. Returns an empty string when nothing is left.
std::string normalize_token(std::string_view raw, const TokenizerOptions& options);

std::size_t code_point_count(std::string_view s);

// Approximate grapheme-cluster count: combining marks, variation selectors,
// zero-width joiners and the code point following a joiner do not start a
// new cluster.
std::size_t grapheme_count(std::string_view s);

std::size_t length(std::string_view s, LengthUnit unit);

}  // namespace optcode::text
