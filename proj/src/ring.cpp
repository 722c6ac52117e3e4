#include "aesring/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace aesring {

namespace {
constexpr std::string_view kDot = "·";  // the separator in "(f)·x^i·y^j"
}

std::string to_string(const RingElement& r) {
    std::string s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Gf256 c = r.at(i, j);
            if (c.is_zero()) continue;
            if (!s.empty()) s += '+';
            s += '(';
            s += to_poly(c);
            s += ')';
            s += kDot;
            s += "x^";
            s += static_cast<char>('0' + i);
            s += kDot;
            s += "y^";
            s += static_cast<char>('0' + j);
        }
    return s.empty() ? "0" : s;
}

RingElement parse_ring(std::string_view s) {
    RingElement r;
    if (s == "0") return r;
    std::size_t pos = 0;
    const auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("ring: ") + what + " in \"" + std::string(s) + "\"");
    };
    while (pos < s.size()) {
        if (s[pos] != '(') fail("expected '('");
        const std::size_t close = s.find(')', pos);
        if (close == std::string_view::npos) fail("unterminated coefficient");
        const Gf256 c = parse_field(s.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        const auto expect = [&](std::string_view tok) {
            if (s.substr(pos, tok.size()) != tok) fail("malformed monomial");
            pos += tok.size();
        };
        expect(kDot);
        expect("x^");
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '3') fail("x exponent out of range");
        const int i = s[pos++] - '0';
        expect(kDot);
        expect("y^");
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '3') fail("y exponent out of range");
        const int j = s[pos++] - '0';
        r.at(i, j) += c;
        if (pos < s.size()) {
            if (s[pos] != '+') fail("expected '+'");
            ++pos;
        }
    }
    return r;
}

std::string block_to_hex(const Block& b) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(32);
    for (std::uint8_t v : b) {
        s += digits[v >> 4];
        s += digits[v & 0x0F];
    }
    return s;
}

Block block_from_hex(std::string_view s) {
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.size() != 32) throw std::invalid_argument("block: expected 32 hex digits");
    const auto nib = [&](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw std::invalid_argument("block: bad hex digit");
    };
    Block b{};
    for (std::size_t i = 0; i < 16; ++i)
        b[i] = static_cast<std::uint8_t>((nib(s[2 * i]) << 4) | nib(s[2 * i + 1]));
    return b;
}

}  // namespace aesring
