#include "listcode/convolutional.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace listcode {

ConvCodeSpec::ConvCodeSpec(unsigned v, std::vector<std::uint32_t> tap_masks)
    : memory(v), n_out(static_cast<unsigned>(tap_masks.size())), taps(std::move(tap_masks)) {
    if (memory < 1 || memory > 16) throw parameter_error("ConvCodeSpec: memory out of range");
    if (n_out < 1) throw parameter_error("ConvCodeSpec: need at least one output polynomial");
    for (std::uint32_t t : taps) {
        if (t >> (memory + 1)) throw parameter_error("ConvCodeSpec: tap polynomial too wide");
        if (!((t >> memory) & 1) || !(t & 1))
            throw parameter_error("ConvCodeSpec: taps need g_0 = 1 and g_v = 1");
    }
}

ConvCodeSpec ConvCodeSpec::from_octal(unsigned v, const std::vector<std::string>& octal_taps) {
    std::vector<std::uint32_t> masks;
    masks.reserve(octal_taps.size());
    for (const auto& s : octal_taps) {
        std::uint32_t val = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), val, 8);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw parse_error("ConvCodeSpec: bad octal tap: " + s);
        masks.push_back(val);
    }
    return ConvCodeSpec(v, std::move(masks));
}

std::vector<std::string> ConvCodeSpec::taps_octal() const {
    std::vector<std::string> out;
    out.reserve(taps.size());
    for (std::uint32_t t : taps) {
        std::string s;
        do {
            s.insert(s.begin(), static_cast<char>('0' + (t & 7)));
            t >>= 3;
        } while (t);
        out.push_back(std::move(s));
    }
    return out;
}

PuncturePattern::PuncturePattern(std::vector<std::size_t> pos, std::size_t pre_len)
    : positions(std::move(pos)), pre_length(pre_len) {
    if (!std::is_sorted(positions.begin(), positions.end()) ||
        std::adjacent_find(positions.begin(), positions.end()) != positions.end())
        throw parameter_error("PuncturePattern: positions must be strictly increasing");
    if (!positions.empty() && positions.back() >= pre_length)
        throw parameter_error("PuncturePattern: position beyond pre_length");
    if (positions.size() >= pre_length && pre_length > 0)
        throw parameter_error("PuncturePattern: cannot puncture everything");
}

BitBlock tb_encode(const BitBlock& msg, const ConvCodeSpec& spec) {
    const std::size_t k = msg.size();
    const unsigned v = spec.memory;
    if (k < v) throw parameter_error("tb_encode: message shorter than memory, tail-biting infeasible");

    // Register word r holds (u_t, u_{t-1}, ..., u_{t-v}) with u_t at bit v.
    std::uint32_t state = 0;
    for (unsigned i = 0; i < v; ++i)
        state |= static_cast<std::uint32_t>(msg.get(k - 1 - i)) << (v - 1 - i);

    BitBlock out(k * spec.n_out);
    for (std::size_t t = 0; t < k; ++t) {
        const std::uint32_t u = msg.get(t);
        const std::uint32_t r = (u << v) | state;
        for (unsigned j = 0; j < spec.n_out; ++j)
            out.set(t * spec.n_out + j, std::popcount(r & spec.taps[j]) & 1u);
        state = (u << (v - 1)) | (state >> 1);
    }
    return out;
}

BitBlock apply_puncture(const BitBlock& cw, const PuncturePattern& p) {
    if (cw.size() != p.pre_length) throw dimension_error("apply_puncture: length mismatch");
    BitBlock out(p.post_length());
    std::size_t next = 0, o = 0;
    for (std::size_t i = 0; i < cw.size(); ++i) {
        if (next < p.positions.size() && p.positions[next] == i) {
            ++next;
            continue;
        }
        out.set(o++, cw.get(i));
    }
    return out;
}

std::vector<double> depuncture_llr(std::span<const double> llrs, const PuncturePattern& p) {
    if (llrs.size() != p.post_length()) throw dimension_error("depuncture_llr: length mismatch");
    std::vector<double> out(p.pre_length, 0.0);
    std::size_t next = 0, in = 0;
    for (std::size_t i = 0; i < p.pre_length; ++i) {
        if (next < p.positions.size() && p.positions[next] == i) {
            ++next;
            continue;
        }
        out[i] = llrs[in++];
    }
    return out;
}

Trellis build_trellis(const ConvCodeSpec& spec, std::size_t num_stages) {
    Trellis tr;
    tr.memory = spec.memory;
    tr.n_out = spec.n_out;
    tr.num_states = spec.num_states();
    tr.num_stages = num_stages;
    const std::size_t branches = std::size_t{2} << spec.memory;
    tr.branch_out.resize(branches);
    tr.branch_weight.resize(branches);
    for (std::size_t r = 0; r < branches; ++r) {
        std::uint32_t bits = 0;
        for (unsigned j = 0; j < spec.n_out; ++j)
            bits |= static_cast<std::uint32_t>(std::popcount(static_cast<std::uint32_t>(r) & spec.taps[j]) & 1) << j;
        tr.branch_out[r] = bits;
        tr.branch_weight[r] = static_cast<std::uint8_t>(std::popcount(bits));
    }
    return tr;
}

} // namespace listcode
