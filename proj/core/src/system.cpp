#include "listcode/system.hpp"

namespace listcode {

std::size_t CodeSystem::inner_block_length() const {
    if (kind == InnerCode::tbcc) return data_length() * conv.n_out;
    return polar.N;
}

std::size_t CodeSystem::block_length() const {
    if (kind == InnerCode::tbcc && puncture.pre_length > 0) return puncture.post_length();
    return inner_block_length();
}

BitBlock CodeSystem::attach_crc(const BitBlock& msg) const {
    if (msg.size() != message_length) throw dimension_error("CodeSystem: message length mismatch");
    return crc_append(msg, crc);
}

BitBlock CodeSystem::inner_encode(const BitBlock& data) const {
    if (data.size() != data_length()) throw dimension_error("CodeSystem: data length mismatch");
    if (kind == InnerCode::tbcc) return tb_encode(data, conv);
    return polar_encode(data, polar);
}

BitBlock CodeSystem::encode_data(const BitBlock& data) const {
    BitBlock cw = inner_encode(data);
    if (kind == InnerCode::tbcc && puncture.pre_length > 0) return apply_puncture(cw, puncture);
    return cw;
}

BitBlock CodeSystem::encode(const BitBlock& msg) const {
    return encode_data(attach_crc(msg));
}

CodeSystem make_tbcc_system(std::size_t message_length, const CrcPoly& crc,
                            const ConvCodeSpec& conv,
                            std::vector<std::size_t> puncture_positions, std::string name) {
    CodeSystem sys;
    sys.kind = InnerCode::tbcc;
    sys.message_length = message_length;
    sys.crc = crc;
    sys.conv = conv;
    sys.name = std::move(name);
    const std::size_t pre = sys.data_length() * conv.n_out;
    if (!puncture_positions.empty())
        sys.puncture = PuncturePattern(std::move(puncture_positions), pre);
    return sys;
}

CodeSystem make_polar_system(std::size_t message_length, const CrcPoly& crc,
                             const ReliabilitySequence& seq, std::size_t N, std::string name) {
    CodeSystem sys;
    sys.kind = InnerCode::polar;
    sys.message_length = message_length;
    sys.crc = crc;
    sys.polar = construct_frozen_set(seq, N, message_length + crc.width);
    sys.name = std::move(name);
    return sys;
}

namespace presets {

ConvCodeSpec rate112_memory8() {
    return ConvCodeSpec::from_octal(
        8, {"533", "727", "765", "445", "715", "635", "563", "555", "737", "557", "677", "511"});
}

CodeSystem tbcc_512_43_crc0xF69_unpunctured() {
    return make_tbcc_system(32, parse_hex_poly("0xF69", 11), rate112_memory8(), {},
                            "tbcc_516_43_crc0xF69");
}

CodeSystem tbcc_512_43_crc0xF69() {
    return make_tbcc_system(32, parse_hex_poly("0xF69", 11), rate112_memory8(),
                            {47, 60, 129, 504}, "tbcc_512_43_crc0xF69");
}

CodeSystem polar_5g_512_43_crc0xD41() {
    return make_polar_system(32, parse_hex_poly("0xD41", 11), reliability_sequence_5g(), 512,
                             "polar_5g_512_43_crc0xD41");
}

CodeSystem polar_5g_512_crc(const std::string& hex, unsigned width) {
    return make_polar_system(32, parse_hex_poly(hex, width), reliability_sequence_5g(), 512,
                             "polar_5g_512_" + std::to_string(32 + width) + "_crc" + hex);
}

} // namespace presets

} // namespace listcode
