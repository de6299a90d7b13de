#include "listcode/polar.hpp"

#include <algorithm>
#include <bit>
#include <fstream>

namespace listcode {

ReliabilitySequence load_reliability_sequence(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open reliability sequence file: " + file.string());
    ReliabilitySequence seq;
    long v;
    while (in >> v) {
        if (v < 0 || v > 0xffff) throw parse_error("reliability sequence entry out of range");
        seq.ordering.push_back(static_cast<std::uint16_t>(v));
    }
    if (!in.eof()) throw parse_error("reliability sequence file: non-integer content");
    const std::size_t n = seq.ordering.size();
    if (n == 0 || !std::has_single_bit(n))
        throw parse_error("reliability sequence length must be a power of two");
    std::vector<bool> seen(n, false);
    for (auto x : seq.ordering) {
        if (x >= n || seen[x]) throw parse_error("reliability sequence is not a permutation");
        seen[x] = true;
    }
    return seq;
}

const ReliabilitySequence& reliability_sequence_5g() {
    static const ReliabilitySequence seq = [] {
        static const std::uint16_t table[] = {
#include "polar_reliability_5g.inc"
        };
        ReliabilitySequence s;
        s.ordering.assign(std::begin(table), std::end(table));
        return s;
    }();
    return seq;
}

unsigned PolarCodeSpec::stages() const {
    return static_cast<unsigned>(std::countr_zero(N));
}

BitBlock polar_transform(const BitBlock& u) {
    const std::size_t N = u.size();
    if (N == 0 || !std::has_single_bit(N))
        throw dimension_error("polar_transform: length must be a power of two");
    BitBlock x = u;
    for (std::size_t len = 1; len < N; len <<= 1)
        for (std::size_t i = 0; i < N; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j)
                if (x.get(j + len)) x.flip(j);
    return x;
}

PolarCodeSpec construct_frozen_set(const ReliabilitySequence& seq, std::size_t N, std::size_t K) {
    if (K > N) throw parameter_error("construct_frozen_set: K > N");
    if (N == 0 || !std::has_single_bit(N) || N > seq.max_length())
        throw parameter_error("construct_frozen_set: N must be a power of two within the sequence");
    PolarCodeSpec spec;
    spec.N = N;
    spec.K = K;
    std::vector<std::uint16_t> restricted;
    restricted.reserve(N);
    for (auto x : seq.ordering)
        if (x < N) restricted.push_back(x);
    spec.unfrozen.assign(restricted.end() - static_cast<std::ptrdiff_t>(K), restricted.end());
    std::sort(spec.unfrozen.begin(), spec.unfrozen.end());
    spec.frozen_mask.assign(N, 1);
    for (auto i : spec.unfrozen) spec.frozen_mask[i] = 0;
    return spec;
}

BitBlock polar_encode(const BitBlock& data, const PolarCodeSpec& spec) {
    if (data.size() != spec.K) throw dimension_error("polar_encode: data length != K");
    BitBlock u(spec.N);
    for (std::size_t j = 0; j < spec.K; ++j)
        if (data.get(j)) u.set(spec.unfrozen[j], true);
    return polar_transform(u);
}

} // namespace listcode
