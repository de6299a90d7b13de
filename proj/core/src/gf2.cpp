#include "listcode/gf2.hpp"

#include <random>

namespace listcode {

BitBlock BitBlock::from_string(std::string_view bits) {
    BitBlock b(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') b.set(i, true);
        else if (bits[i] != '0') throw parse_error("BitBlock::from_string: expected 0/1");
    }
    return b;
}

BitBlock BitBlock::from_hex(std::string_view hex, std::size_t length) {
    if (hex.size() != (length + 3) / 4)
        throw parse_error("BitBlock::from_hex: digit count does not match length");
    BitBlock b(length);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        unsigned nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw parse_error("BitBlock::from_hex: not a hex digit");
        for (std::size_t j = 0; j < 4; ++j) {
            const std::size_t i = 4 * d + j;
            const bool bit = (nib >> (3 - j)) & 1;
            if (i < length) b.set(i, bit);
            else if (bit) throw parse_error("BitBlock::from_hex: nonzero padding bits");
        }
    }
    return b;
}

std::string BitBlock::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitBlock::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve((len_ + 3) / 4);
    for (std::size_t i = 0; i < len_; i += 4) {
        unsigned nib = 0;
        for (std::size_t j = 0; j < 4 && i + j < len_; ++j)
            nib |= static_cast<unsigned>(get(i + j)) << (3 - j);
        s.push_back(digits[nib]);
    }
    return s;
}

GeneratorMatrix::GeneratorMatrix(std::vector<BitBlock> r) : rows(std::move(r)) {
    k = rows.size();
    n = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows)
        if (row.size() != n) throw dimension_error("GeneratorMatrix: ragged rows");
}

BitBlock gf2_matvec(const GeneratorMatrix& G, const BitBlock& m) {
    if (m.size() != G.k) throw dimension_error("gf2_matvec: message length != k");
    BitBlock out(G.n);
    auto acc = out.words();
    for (std::size_t i = 0; i < G.k; ++i) {
        if (!m.get(i)) continue;
        auto row = G.rows[i].words();
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= row[w];
    }
    return out;
}

GeneratorMatrix derive_generator(const EncoderFn& encoder, std::size_t k, std::size_t n) {
    BitBlock zero_msg(k);
    BitBlock zero_cw = encoder(zero_msg);
    if (zero_cw.size() != n) throw dimension_error("derive_generator: encoder output length != n");
    if (zero_cw.weight() != 0)
        throw parameter_error("derive_generator: encoder(0) != 0, encoder is not linear");

    std::vector<BitBlock> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        BitBlock e(k);
        e.set(i, true);
        BitBlock row = encoder(e);
        if (row.size() != n) throw dimension_error("derive_generator: encoder output length != n");
        rows.push_back(std::move(row));
    }
    GeneratorMatrix G(std::move(rows));

    // Additivity spot-check on a handful of fixed pseudo-random messages.
    std::mt19937_64 rng(0x67656e6d61747278ULL);
    for (int t = 0; t < 8; ++t) {
        BitBlock m(k);
        for (std::size_t i = 0; i < k; ++i) m.set(i, rng() & 1);
        if (encoder(m) != gf2_matvec(G, m))
            throw parameter_error("derive_generator: encoder failed linearity spot-check");
    }
    return G;
}

} // namespace listcode
