// Feedforward convolutional encoding with tail-biting closure, trellis
// tables, and puncturing.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "listcode/gf2.hpp"

namespace listcode {

// Generator taps are stored as masks with bit v = g_0 (tap on the current
// input) down to bit 0 = g_v, which is exactly the value of the customary
// octal notation: 533 octal = 101011011 = g_0..g_8.
struct ConvCodeSpec {
    unsigned memory = 0;              // v
    unsigned n_out = 0;               // output bits per input bit
    std::vector<std::uint32_t> taps;  // one mask per output bit

    ConvCodeSpec() = default;
    ConvCodeSpec(unsigned v, std::vector<std::uint32_t> tap_masks);

    // Taps given as octal strings, e.g. {"533","727",...}.
    static ConvCodeSpec from_octal(unsigned v, const std::vector<std::string>& octal_taps);

    std::vector<std::string> taps_octal() const;

    unsigned num_states() const { return 1u << memory; }
};

struct PuncturePattern {
    std::vector<std::size_t> positions;  // strictly increasing, all < pre_length
    std::size_t pre_length = 0;

    PuncturePattern() = default;
    PuncturePattern(std::vector<std::size_t> pos, std::size_t pre_len);

    std::size_t post_length() const { return pre_length - positions.size(); }
};

// Branch tables shared by the encoder checks and the Viterbi decoders.
// State encodes the previous v inputs, most recent input in the top bit;
// branch (state, u) emits out[(u << v) | state] and moves to
// (u << (v-1)) | (state >> 1).
struct Trellis {
    unsigned memory = 0;
    unsigned n_out = 0;
    unsigned num_states = 0;
    std::size_t num_stages = 0;
    std::vector<std::uint32_t> branch_out;     // indexed by (u << v) | state
    std::vector<std::uint8_t> branch_weight;   // popcount of branch_out

    unsigned next_state(unsigned state, unsigned u) const {
        return (u << (memory - 1)) | (state >> 1);
    }
    std::uint32_t output(unsigned state, unsigned u) const {
        return branch_out[(static_cast<std::size_t>(u) << memory) | state];
    }
};

// Tail-biting encode: the shift register is preloaded with the last v
// message bits, so the path starts and ends in the same state.
BitBlock tb_encode(const BitBlock& msg, const ConvCodeSpec& spec);

BitBlock apply_puncture(const BitBlock& cw, const PuncturePattern& p);

// Reinserts zero (no information) LLRs at the punctured positions.
std::vector<double> depuncture_llr(std::span<const double> llrs, const PuncturePattern& p);

Trellis build_trellis(const ConvCodeSpec& spec, std::size_t num_stages);

} // namespace listcode
