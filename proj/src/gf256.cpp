#include "aesring/gf256.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace aesring {

Gf256 inv(Gf256 a) {
    if (a.is_zero()) throw std::domain_error("gf256: 0x00 has no multiplicative inverse");
    const auto& t = detail::kTables;
    return Gf256(t.exp[255u - t.log[a.bits()]]);
}

std::string to_hex(Gf256 a) {
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string s = "0x";
    s += digits[a.bits() >> 4];
    s += digits[a.bits() & 0x0F];
    return s;
}

std::string to_poly(Gf256 a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = 7; i >= 0; --i) {
        if (!((a.bits() >> i) & 1)) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'z';
        else {
            s += "z^";
            s += static_cast<char>('0' + i);
        }
    }
    return s;
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Gf256 parse_field(std::string_view s) {
    s = strip(s);
    if (s.empty()) throw std::invalid_argument("gf256: empty field element");

    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        unsigned v = 0;
        for (std::size_t i = 2; i < s.size(); ++i) {
            const int d = hex_digit(s[i]);
            if (d < 0) throw std::invalid_argument("gf256: bad hex digit in \"" + std::string(s) + "\"");
            v = v * 16 + static_cast<unsigned>(d);
            if (v > 0xFF) throw std::invalid_argument("gf256: value out of range in \"" + std::string(s) + "\"");
        }
        return Gf256(static_cast<std::uint8_t>(v));
    }

    std::uint8_t acc = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string_view::npos) end = s.size();
        std::string_view term = strip(s.substr(pos, end - pos));
        if (term == "0")
            ;  // additive identity term
        else if (term == "1")
            acc ^= 0x01;
        else if (term == "z")
            acc ^= 0x02;
        else if (term.size() == 3 && term[0] == 'z' && term[1] == '^' && term[2] >= '0' &&
                 term[2] <= '7')
            acc ^= static_cast<std::uint8_t>(1u << (term[2] - '0'));
        else
            throw std::invalid_argument("gf256: bad term \"" + std::string(term) + "\"");
        pos = end + 1;
    }
    return Gf256(acc);
}

std::ostream& operator<<(std::ostream& os, Gf256 a) { return os << to_hex(a); }

}  // namespace aesring
