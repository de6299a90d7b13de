// CodeSystem: a complete (inner code, CRC, puncture) description.  This is
// the unit every tool operates on: message -> CRC append -> inner encode
// -> puncture.
#pragma once

#include <optional>
#include <string>

#include "listcode/convolutional.hpp"
#include "listcode/crc.hpp"
#include "listcode/polar.hpp"

namespace listcode {

enum class InnerCode { tbcc, polar };

struct CodeSystem {
    InnerCode kind = InnerCode::tbcc;
    std::size_t message_length = 0;
    CrcPoly crc;

    // tbcc
    ConvCodeSpec conv;
    PuncturePattern puncture;  // pre_length 0 means no puncturing

    // polar
    PolarCodeSpec polar;

    std::string name;  // optional label used in reports

    std::size_t data_length() const { return message_length + crc.width; }
    std::size_t block_length() const;        // transmitted bits
    std::size_t inner_block_length() const;  // before puncturing
    double message_rate() const {
        return static_cast<double>(message_length) / static_cast<double>(block_length());
    }

    // CRC word of a message (message_length -> data_length bits).
    BitBlock attach_crc(const BitBlock& msg) const;
    // Inner encode of a data word, before puncturing.
    BitBlock inner_encode(const BitBlock& data) const;
    // Full pipeline: message -> transmitted codeword.
    BitBlock encode(const BitBlock& msg) const;
    // data word -> transmitted codeword (used for spectra of the data map).
    BitBlock encode_data(const BitBlock& data) const;
};

CodeSystem make_tbcc_system(std::size_t message_length, const CrcPoly& crc,
                            const ConvCodeSpec& conv,
                            std::vector<std::size_t> puncture_positions = {},
                            std::string name = {});

CodeSystem make_polar_system(std::size_t message_length, const CrcPoly& crc,
                             const ReliabilitySequence& seq, std::size_t N,
                             std::string name = {});

// The two optimized designs studied throughout, plus helpers for variants.
namespace presets {

// Memory-8, rate-1/12 tail-biting code, taps
// {533,727,765,445,715,635,563,555,737,557,677,511} octal.
ConvCodeSpec rate112_memory8();

// (516,43) CRC-TBCC with CRC 0xF69, no puncturing.
CodeSystem tbcc_512_43_crc0xF69_unpunctured();
// Same code punctured at {47,60,129,504} down to 512 bits.
CodeSystem tbcc_512_43_crc0xF69();
// (512,43) 5G polar code with CRC 0xD41.
CodeSystem polar_5g_512_43_crc0xD41();
// (512, 32+m) 5G polar code with one of the standard CRCs
// (m in {6,11,16,24}); hex as in the standard, e.g. "0xE21".
CodeSystem polar_5g_512_crc(const std::string& hex, unsigned width);

} // namespace presets

} // namespace listcode
