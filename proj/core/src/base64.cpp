#include "dg/base64.hpp"

#include <array>
#include <cctype>

namespace dg {

namespace {

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<int, 256> make_decode_table() {
    std::array<int, 256> table{};
    table.fill(-1);
    for (int i = 0; i < 64; ++i) table[static_cast<unsigned char>(kAlphabet[i])] = i;
    return table;
}

const std::array<int, 256> kDecodeTable = make_decode_table();

std::string strip_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        if (!std::isspace(c)) out.push_back(static_cast<char>(c));
    }
    return out;
}

}  // namespace

std::string base64_encode(std::string_view data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= data.size()) {
        unsigned v = (static_cast<unsigned char>(data[i]) << 16) |
                     (static_cast<unsigned char>(data[i + 1]) << 8) |
                     static_cast<unsigned char>(data[i + 2]);
        out.push_back(kAlphabet[(v >> 18) & 0x3f]);
        out.push_back(kAlphabet[(v >> 12) & 0x3f]);
        out.push_back(kAlphabet[(v >> 6) & 0x3f]);
        out.push_back(kAlphabet[v & 0x3f]);
        i += 3;
    }
    std::size_t rest = data.size() - i;
    if (rest == 1) {
        unsigned v = static_cast<unsigned char>(data[i]) << 16;
        out.push_back(kAlphabet[(v >> 18) & 0x3f]);
        out.push_back(kAlphabet[(v >> 12) & 0x3f]);
        out.push_back('=');
        out.push_back('=');
    } else if (rest == 2) {
        unsigned v = (static_cast<unsigned char>(data[i]) << 16) |
                     (static_cast<unsigned char>(data[i + 1]) << 8);
        out.push_back(kAlphabet[(v >> 18) & 0x3f]);
        out.push_back(kAlphabet[(v >> 12) & 0x3f]);
        out.push_back(kAlphabet[(v >> 6) & 0x3f]);
        out.push_back('=');
    }
    return out;
}

std::optional<std::string> base64_decode_strict(std::string_view encoded) {
    if (encoded.empty() || encoded.size() % 4 != 0) return std::nullopt;

    std::size_t padding = 0;
    if (encoded.back() == '=') {
        padding = 1;
        if (encoded.size() >= 2 && encoded[encoded.size() - 2] == '=') padding = 2;
    }
    std::size_t body = encoded.size() - padding;
    for (std::size_t i = 0; i < body; ++i) {
        if (kDecodeTable[static_cast<unsigned char>(encoded[i])] < 0) return std::nullopt;
    }
    // '=' may only appear as padding.
    for (std::size_t i = 0; i < body; ++i) {
        if (encoded[i] == '=') return std::nullopt;
    }

    std::string out;
    out.reserve(encoded.size() / 4 * 3);
    for (std::size_t i = 0; i < encoded.size(); i += 4) {
        int a = kDecodeTable[static_cast<unsigned char>(encoded[i])];
        int b = kDecodeTable[static_cast<unsigned char>(encoded[i + 1])];
        int c = encoded[i + 2] == '=' ? 0 : kDecodeTable[static_cast<unsigned char>(encoded[i + 2])];
        int d = encoded[i + 3] == '=' ? 0 : kDecodeTable[static_cast<unsigned char>(encoded[i + 3])];
        if (a < 0 || b < 0 || c < 0 || d < 0) return std::nullopt;
        unsigned v = (static_cast<unsigned>(a) << 18) | (static_cast<unsigned>(b) << 12) |
                     (static_cast<unsigned>(c) << 6) | static_cast<unsigned>(d);
        out.push_back(static_cast<char>((v >> 16) & 0xff));
        if (encoded[i + 2] != '=') out.push_back(static_cast<char>((v >> 8) & 0xff));
        if (encoded[i + 3] != '=') out.push_back(static_cast<char>(v & 0xff));
    }

    // Canonical padding: the dropped bits must be zero.
    if (padding > 0) {
        std::size_t last_quad = encoded.size() - 4;
        int b = kDecodeTable[static_cast<unsigned char>(encoded[last_quad + 1])];
        int c = encoded[last_quad + 2] == '=' ? 0
                                              : kDecodeTable[static_cast<unsigned char>(encoded[last_quad + 2])];
        if (padding == 2 && (b & 0x0f) != 0) return std::nullopt;
        if (padding == 1 && (c & 0x03) != 0) return std::nullopt;
    }
    return out;
}

bool is_valid_utf8(std::string_view bytes) noexcept {
    std::size_t i = 0;
    while (i < bytes.size()) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        unsigned cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xe0) == 0xc0) {
            len = 2;
            cp = c & 0x1f;
        } else if ((c & 0xf0) == 0xe0) {
            len = 3;
            cp = c & 0x0f;
        } else if ((c & 0xf8) == 0xf0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > bytes.size()) return false;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3f);
        }
        // Reject overlong encodings, surrogates and out-of-range codepoints.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000))
            return false;
        if (cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return false;
        i += len;
    }
    return true;
}

double printable_fraction(std::string_view utf8) noexcept {
    std::size_t total = 0, printable = 0;
    std::size_t i = 0;
    while (i < utf8.size()) {
        unsigned char c = static_cast<unsigned char>(utf8[i]);
        unsigned cp = c;
        std::size_t len = 1;
        if ((c & 0xe0) == 0xc0) len = 2;
        else if ((c & 0xf0) == 0xe0) len = 3;
        else if ((c & 0xf8) == 0xf0) len = 4;
        if (len > 1 && i + len <= utf8.size()) {
            cp = c & (0xff >> (len + 1));
            for (std::size_t k = 1; k < len; ++k)
                cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3f);
        }
        ++total;
        bool is_printable = (cp >= 0x20 && cp != 0x7f) || cp == '\n' || cp == '\t' || cp == '\r';
        if (is_printable) ++printable;
        i += len;
    }
    if (total == 0) return 0.0;
    return static_cast<double>(printable) / static_cast<double>(total);
}

std::optional<std::string> try_decode_base64(std::string_view text, const Base64Gates& gates) {
    std::string stripped = strip_whitespace(text);
    if (stripped.size() < gates.min_length) return std::nullopt;
    auto decoded = base64_decode_strict(stripped);
    if (!decoded) return std::nullopt;
    if (!is_valid_utf8(*decoded)) return std::nullopt;
    if (printable_fraction(*decoded) < gates.min_printable) return std::nullopt;
    return decoded;
}

}  // namespace dg
