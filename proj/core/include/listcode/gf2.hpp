// Bit-block algebra over GF(2): packed bit vectors, generator matrices,
// Hamming weights.  Bit index 0 is the first transmitted / first written
// bit everywhere in this library.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "listcode/errors.hpp"

namespace listcode {

class BitBlock {
public:
    BitBlock() = default;
    explicit BitBlock(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    // Parses a string of '0'/'1' characters, bit 0 first.
    static BitBlock from_string(std::string_view bits);

    // Inverse of to_hex for a known bit length.
    static BitBlock from_hex(std::string_view hex, std::size_t length);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    void xor_with(const BitBlock& other) {
        if (other.len_ != len_) throw dimension_error("BitBlock xor: length mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    }

    friend BitBlock operator^(BitBlock a, const BitBlock& b) {
        a.xor_with(b);
        return a;
    }

    bool operator==(const BitBlock&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // '0'/'1' characters, bit 0 first.
    std::string to_string() const;

    // Hex string, bit 0 as the most significant bit of the first digit;
    // lengths not divisible by 4 are zero-padded at the tail.
    std::string to_hex() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitBlockHash {
    std::size_t operator()(const BitBlock& b) const {
        std::size_t h = b.size() * 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : b.words()) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline std::size_t weight(const BitBlock& b) { return b.weight(); }

// k rows of identical length n; row i is the codeword of unit message e_i.
struct GeneratorMatrix {
    std::vector<BitBlock> rows;
    std::size_t k = 0;
    std::size_t n = 0;

    GeneratorMatrix() = default;
    GeneratorMatrix(std::vector<BitBlock> r);
};

// XOR of the rows selected by the 1-bits of m.
BitBlock gf2_matvec(const GeneratorMatrix& G, const BitBlock& m);

using EncoderFn = std::function<BitBlock(const BitBlock&)>;

// Builds the generator matrix of a linear encoder by probing unit vectors.
// Checks encoder(0) = 0 and additivity on a few fixed probes; a non-linear
// encoder raises parameter_error.
GeneratorMatrix derive_generator(const EncoderFn& encoder, std::size_t k, std::size_t n);

} // namespace listcode
