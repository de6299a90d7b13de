// CRC polynomials in the 5G hex convention: the generator of width m is
// written with all m+1 coefficients, high-order bits most significant,
// e.g. x^11+x^10+x^9+x^5+1 -> 0xE21.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "listcode/gf2.hpp"

namespace listcode {

struct CrcPoly {
    unsigned width = 0;        // m, number of parity bits
    std::uint64_t coeffs = 0;  // bit i = coefficient of x^i; bits m and 0 are always 1

    bool operator==(const CrcPoly&) const = default;

    std::string to_hex() const;
};

// Parses "0xE21"-style text into a width-m polynomial.  The leading x^m
// coefficient must be present and the constant term must be 1.
CrcPoly parse_hex_poly(std::string_view hex, unsigned m);

// Appends m parity bits so that the whole block, read as a polynomial with
// bit 0 as the highest-degree coefficient, is divisible by g.
BitBlock crc_append(const BitBlock& msg, const CrcPoly& g);

// True iff data (length > m) is divisible by g under the same convention.
bool crc_check(const BitBlock& data, const CrcPoly& g);

// Same check on a word of `len` bits packed MSB-first into an integer
// (bit 0 of the block = bit len-1 of the word).  Hot path for CRC search.
bool crc_check_packed(std::uint64_t data, unsigned len, const CrcPoly& g);

std::uint64_t pack_msb_first(const BitBlock& b);

// All 2^(m-1) width-m polynomials with leading and constant coefficient 1,
// in increasing hex order.
std::vector<CrcPoly> enumerate_crc_polys(unsigned m);

} // namespace listcode
