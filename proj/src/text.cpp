#include "optcode/text.hpp"

#include <string>

#include "optcode/error.hpp"

namespace optcode::text {

namespace {

bool is_ascii_punct(unsigned char c) noexcept {
  return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) || (c >= 0x5b && c <= 0x60) ||
         (c >= 0x7b && c <= 0x7e);
}

bool is_continuation(unsigned char c) noexcept { return (c & 0xc0) == 0x80; }

// Decodes the code point starting at s[pos] of an already validated string.
char32_t decode(std::string_view s, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(s[pos++]);
  if (lead < 0x80) return lead;
  int extra = lead >= 0xf0 ? 3 : lead >= 0xe0 ? 2 : 1;
  char32_t cp = lead & (0x3f >> extra);
  while (extra-- > 0) cp = (cp << 6) | (static_cast<unsigned char>(s[pos++]) & 0x3f);
  return cp;
}

constexpr char32_t kZeroWidthJoiner = 0x200d;

bool extends_cluster(char32_t cp) noexcept {
  return (cp >= 0x0300 && cp <= 0x036f) ||    // combining diacritical marks
         (cp >= 0x1ab0 && cp <= 0x1aff) ||    // ... extended
         (cp >= 0x1dc0 && cp <= 0x1dff) ||    // ... supplement
         (cp >= 0x20d0 && cp <= 0x20ff) ||    // ... for symbols
         (cp >= 0xfe20 && cp <= 0xfe2f) ||    // combining half marks
         (cp >= 0xfe00 && cp <= 0xfe0f) ||    // variation selectors
         (cp >= 0xe0100 && cp <= 0xe01ef) ||  // variation selectors supplement
         (cp >= 0x1f3fb && cp <= 0x1f3ff) ||  // emoji skin tone modifiers
         cp == kZeroWidthJoiner;
}

}  // namespace

void validate_utf8(std::string_view s) {
  std::size_t pos = 0;
  const std::size_t n = s.size();
  auto fail = [&](std::size_t at) {
    throw IoError("input is not valid UTF-8 at byte offset " + std::to_string(at));
  };
  while (pos < n) {
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 0x80) {
      ++pos;
      continue;
    }
    int extra = 0;
    char32_t min = 0;
    if (c >= 0xc2 && c <= 0xdf) {
      extra = 1;
      min = 0x80;
    } else if (c >= 0xe0 && c <= 0xef) {
      extra = 2;
      min = 0x800;
    } else if (c >= 0xf0 && c <= 0xf4) {
      extra = 3;
      min = 0x10000;
    } else {
      fail(pos);
    }
    if (n - pos <= static_cast<std::size_t>(extra)) fail(pos);
    char32_t cp = c & (0x3f >> extra);
    for (int k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(k)]);
      if (!is_continuation(cc)) fail(pos);
      cp = (cp << 6) | (cc & 0x3f);
    }
    if (cp < min || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) fail(pos);
    pos += static_cast<std::size_t>(extra) + 1;
  }
}

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

std::string normalize_token(std::string_view raw, const TokenizerOptions& options) {
  std::string_view t = raw;
  if (options.strip_punctuation) {
    while (!t.empty() && is_ascii_punct(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && is_ascii_punct(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  }
  std::string out(t);
  if (options.fold_case) {
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return out;
}

std::size_t code_point_count(std::string_view s) {
  std::size_t count = 0;
  for (char c : s) {
    if (!is_continuation(static_cast<unsigned char>(c))) ++count;
  }
  return count;
}

std::size_t grapheme_count(std::string_view s) {
  std::size_t count = 0;
  std::size_t pos = 0;
  bool after_joiner = false;
  while (pos < s.size()) {
    const char32_t cp = decode(s, pos);
    if (!(count > 0 && (extends_cluster(cp) || after_joiner))) ++count;
    after_joiner = cp == kZeroWidthJoiner;
  }
  return count;
}

std::size_t length(std::string_view s, LengthUnit unit) {
  return unit == LengthUnit::graphemes ? grapheme_count(s) : code_point_count(s);
}

}  // namespace optcode::text
