#pragma once

#include <string>
#include <string_view>

namespace dg {

/// Lowercase ASCII letters, everything else collapsed to single spaces,
/// leading/trailing space trimmed. This is the alphabet the language
/// profiles are built over: 26 letters plus space.
std::string normalize_for_language(std::string_view text);

/// Number of ASCII letters in `text`.
std::size_t count_letters(std::string_view text) noexcept;

/// Trims ASCII whitespace from both ends.
std::string_view trim(std::string_view text) noexcept;

inline constexpr int kLangAlphabet = 27;  // 'a'..'z' + space
inline constexpr int kLangTrigramSpace = kLangAlphabet * kLangAlphabet * kLangAlphabet;

/// Maps a normalized char ('a'..'z' or ' ') to [0, 27).
inline int lang_char_index(char c) noexcept {
    return c == ' ' ? 26 : c - 'a';
}

inline char lang_index_char(int i) noexcept {
    return i == 26 ? ' ' : static_cast<char>('a' + i);
}

/// Dense index of a normalized trigram in [0, 27^3).
inline int lang_trigram_index(char a, char b, char c) noexcept {
    return (lang_char_index(a) * kLangAlphabet + lang_char_index(b)) * kLangAlphabet +
           lang_char_index(c);
}

}  // namespace dg
