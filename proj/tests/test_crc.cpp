#include <doctest.h>

#include <random>

#include "listcode/crc.hpp"

using namespace listcode;

namespace {

// Test-side long division oracle on plain coefficient vectors, msg bit 0 =
// highest-degree coefficient.
std::vector<int> division_remainder(const std::vector<int>& data, unsigned m,
                                    std::uint64_t gcoeffs, unsigned pad) {
    std::vector<int> buf = data;
    buf.insert(buf.end(), pad, 0);
    for (std::size_t i = 0; i + m < buf.size(); ++i) {
        if (!buf[i]) continue;
        for (unsigned j = 0; j <= m; ++j)
            buf[i + j] ^= static_cast<int>((gcoeffs >> (m - j)) & 1);
    }
    return {buf.end() - m, buf.end()};
}

} // namespace

TEST_CASE("parse_hex_poly") {
    CrcPoly g = parse_hex_poly("0xE21", 11);
    CHECK(g.width == 11);
    // x^11 + x^10 + x^9 + x^5 + 1
    CHECK(g.coeffs == ((1u << 11) | (1u << 10) | (1u << 9) | (1u << 5) | 1u));
    CHECK(g.to_hex() == "0xE21");

    CHECK_NOTHROW(parse_hex_poly("0xD41", 11));
    CHECK(parse_hex_poly("0x3", 1).coeffs == 0x3);

    CHECK_THROWS_AS(parse_hex_poly("0x421", 11), parse_error);   // leading bit unset
    CHECK_THROWS_AS(parse_hex_poly("0x1E21", 11), parse_error);  // too wide
    CHECK_THROWS_AS(parse_hex_poly("0xE20", 11), parse_error);   // even constant term
    CHECK_THROWS_AS(parse_hex_poly("zz", 11), parse_error);
}

TEST_CASE("crc_append matches the long-division oracle") {
    CrcPoly g = parse_hex_poly("0xE21", 11);

    SUBCASE("all-zero message") {
        BitBlock out = crc_append(BitBlock(32), g);
        CHECK(out.size() == 43);
        CHECK(out.weight() == 0);
    }
    SUBCASE("unit message e_31: parity = x^11 mod g") {
        BitBlock msg(32);
        msg.set(31, true);
        BitBlock out = crc_append(msg, g);
        // x^11 mod g = x^10 + x^9 + x^5 + 1
        CHECK(out.to_string().substr(32) == "11000100001");
    }
    SUBCASE("random messages against the oracle") {
        std::mt19937_64 rng(42);
        for (int t = 0; t < 200; ++t) {
            BitBlock msg(32);
            std::vector<int> bits(32);
            for (int i = 0; i < 32; ++i) {
                bits[i] = static_cast<int>(rng() & 1);
                msg.set(i, bits[i]);
            }
            const std::vector<int> rem = division_remainder(bits, 11, g.coeffs, 11);
            const BitBlock out = crc_append(msg, g);
            for (int i = 0; i < 11; ++i) CHECK(static_cast<int>(out.get(32 + i)) == rem[i]);
        }
    }
}

TEST_CASE("crc_check") {
    CrcPoly g = parse_hex_poly("0xE21", 11);
    std::mt19937_64 rng(17);

    SUBCASE("all-zero data passes") { CHECK(crc_check(BitBlock(43), g)); }

    SUBCASE("append round-trip, 1000 random messages") {
        for (int t = 0; t < 1000; ++t) {
            BitBlock msg(32);
            for (int i = 0; i < 32; ++i) msg.set(i, rng() & 1);
            CHECK(crc_check(crc_append(msg, g), g));
        }
    }
    SUBCASE("single bit flip is detected") {
        for (int t = 0; t < 100; ++t) {
            BitBlock msg(32);
            for (int i = 0; i < 32; ++i) msg.set(i, rng() & 1);
            BitBlock cw = crc_append(msg, g);
            cw.flip(rng() % cw.size());
            CHECK(!crc_check(cw, g));
        }
    }
    SUBCASE("length guard") { CHECK_THROWS_AS(crc_check(BitBlock(11), g), dimension_error); }

    SUBCASE("random 43-bit acceptance fraction ~ 2^-11") {
        const int samples = 1'000'000;
        int pass = 0;
        for (int t = 0; t < samples; ++t) {
            BitBlock data(43);
            for (int i = 0; i < 43; ++i) data.set(i, rng() & 1);
            if (crc_check(data, g)) ++pass;
        }
        const double p = 1.0 / 2048.0;
        const double sigma = std::sqrt(p * (1 - p) * samples);
        CHECK(std::abs(pass - samples * p) <= 3 * sigma);
    }
}

TEST_CASE("crc linearity") {
    CrcPoly g = parse_hex_poly("0xD41", 11);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        BitBlock m1(20), m2(20);
        for (int i = 0; i < 20; ++i) {
            m1.set(i, rng() & 1);
            m2.set(i, rng() & 1);
        }
        CHECK(crc_append(m1 ^ m2, g) == (crc_append(m1, g) ^ crc_append(m2, g)));
    }
}

TEST_CASE("exactly 2^len of 2^(len+m) vectors pass, exhaustively") {
    CrcPoly g = parse_hex_poly("0xB", 3);  // x^3 + x + 1
    const unsigned len = 9;
    unsigned pass = 0;
    for (std::uint32_t v = 0; v < (1u << (len + 3)); ++v) {
        BitBlock data(len + 3);
        for (unsigned i = 0; i < len + 3; ++i) data.set(i, (v >> i) & 1);
        if (crc_check(data, g)) ++pass;
    }
    CHECK(pass == (1u << len));
}

TEST_CASE("candidate enumeration has 2^(m-1) entries") {
    auto cands = enumerate_crc_polys(11);
    CHECK(cands.size() == 1024);
    for (const auto& g : cands) {
        CHECK(((g.coeffs >> 11) & 1) == 1);
        CHECK((g.coeffs & 1) == 1);
    }
    CHECK(cands.front().coeffs == 0x801);
    CHECK(cands.back().coeffs == 0xFFF);
    // 0xE21 and 0xD41 are in the space
    CHECK(std::count_if(cands.begin(), cands.end(),
                        [](const CrcPoly& g) { return g.coeffs == 0xE21; }) == 1);
}

TEST_CASE("packed check agrees with BitBlock check") {
    CrcPoly g = parse_hex_poly("0xF69", 11);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 500; ++t) {
        BitBlock data(43);
        for (int i = 0; i < 43; ++i) data.set(i, rng() & 1);
        CHECK(crc_check(data, g) == crc_check_packed(pack_msb_first(data), 43, g));
    }
}
