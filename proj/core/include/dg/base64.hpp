#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace dg {

/// Gates deciding when a string "looks like Base64" enough to decode.
/// Without them ordinary words like "test" would decode to garbage.
struct Base64Gates {
    std::size_t min_length = 16;       // encoded chars after stripping whitespace
    double min_printable = 0.90;       // fraction of decoded characters printable
};

std::string base64_encode(std::string_view data);

/// Strict decode of a whitespace-stripped Base64 string with valid padding.
/// Returns absent on any alphabet or padding violation.
std::optional<std::string> base64_decode_strict(std::string_view encoded);

/// Returns the decoded text only when all of these hold: the input
/// (whitespace-stripped) matches the Base64 alphabet with valid padding, is
/// at least `gates.min_length` characters, decodes to valid UTF-8, and at
/// least `gates.min_printable` of the decoded characters are printable.
/// Absence signals "not Base64".
std::optional<std::string> try_decode_base64(std::string_view text,
                                             const Base64Gates& gates = {});

/// True when `bytes` is well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes) noexcept;

/// Fraction of decoded Unicode codepoints that are printable (>= U+0020,
/// plus tab/newline/carriage return, excluding DEL). Requires valid UTF-8.
double printable_fraction(std::string_view utf8) noexcept;

}  // namespace dg
