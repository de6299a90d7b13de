#include "listcode/crc.hpp"

#include <charconv>

namespace listcode {

std::string CrcPoly::to_hex() const {
    static const char digits[] = "0123456789ABCDEF";
    std::string s;
    std::uint64_t v = coeffs;
    do {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    } while (v);
    return "0x" + s;
}

CrcPoly parse_hex_poly(std::string_view hex, unsigned m) {
    if (m == 0 || m > 62) throw parameter_error("parse_hex_poly: unsupported width");
    std::string_view digits = hex;
    if (digits.size() > 2 && (digits.substr(0, 2) == "0x" || digits.substr(0, 2) == "0X"))
        digits.remove_prefix(2);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw parse_error("parse_hex_poly: not a hex number: " + std::string(hex));
    if (value >> (m + 1))
        throw parse_error("parse_hex_poly: value exceeds m+1 coefficient bits");
    if (!((value >> m) & 1))
        throw parse_error("parse_hex_poly: leading x^m coefficient must be 1");
    if (!(value & 1))
        throw parse_error("parse_hex_poly: constant term must be 1");
    return CrcPoly{m, value};
}

// MSB-first long division: bit 0 of the block is the highest-degree
// coefficient.  Returns the m-bit remainder of data * x^pad_zeros mod g.
static std::uint64_t divide(const BitBlock& data, const CrcPoly& g, unsigned pad_zeros) {
    const std::uint64_t top = std::uint64_t{1} << g.width;
    std::uint64_t rem = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        rem = (rem << 1) | static_cast<std::uint64_t>(data.get(i));
        if (rem & top) rem ^= g.coeffs;
    }
    for (unsigned i = 0; i < pad_zeros; ++i) {
        rem <<= 1;
        if (rem & top) rem ^= g.coeffs;
    }
    return rem;
}

BitBlock crc_append(const BitBlock& msg, const CrcPoly& g) {
    if (msg.empty()) throw parameter_error("crc_append: empty message");
    std::uint64_t rem = divide(msg, g, g.width);
    BitBlock out(msg.size() + g.width);
    for (std::size_t i = 0; i < msg.size(); ++i) out.set(i, msg.get(i));
    for (unsigned i = 0; i < g.width; ++i)
        out.set(msg.size() + i, (rem >> (g.width - 1 - i)) & 1);
    return out;
}

bool crc_check(const BitBlock& data, const CrcPoly& g) {
    if (data.size() <= g.width) throw dimension_error("crc_check: data no longer than CRC");
    return divide(data, g, 0) == 0;
}

bool crc_check_packed(std::uint64_t data, unsigned len, const CrcPoly& g) {
    const std::uint64_t top = std::uint64_t{1} << g.width;
    std::uint64_t rem = 0;
    for (unsigned i = 0; i < len; ++i) {
        rem = (rem << 1) | ((data >> (len - 1 - i)) & 1);
        if (rem & top) rem ^= g.coeffs;
    }
    return rem == 0;
}

std::uint64_t pack_msb_first(const BitBlock& b) {
    if (b.size() > 64) throw dimension_error("pack_msb_first: block longer than 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        v = (v << 1) | static_cast<std::uint64_t>(b.get(i));
    return v;
}

std::vector<CrcPoly> enumerate_crc_polys(unsigned m) {
    if (m < 1 || m > 30) throw parameter_error("enumerate_crc_polys: unsupported width");
    std::vector<CrcPoly> out;
    out.reserve(std::size_t{1} << (m - 1));
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (m - 1)); ++mid)
        out.push_back(CrcPoly{m, top | (mid << 1) | 1});
    return out;
}

} // namespace listcode
