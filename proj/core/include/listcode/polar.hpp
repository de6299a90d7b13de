// Polar transform and frozen-set construction from a reliability sequence.
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "listcode/gf2.hpp"

namespace listcode {

// Permutation of {0..N_max-1}, least reliable synthetic channel first.
struct ReliabilitySequence {
    std::vector<std::uint16_t> ordering;

    std::size_t max_length() const { return ordering.size(); }
};

// Plain text, one integer per line, least reliable first.
ReliabilitySequence load_reliability_sequence(const std::filesystem::path& file);

// The 1024-entry sequence from the 5G NR standard, compiled in from
// core/data/polar_reliability_5g.txt.
const ReliabilitySequence& reliability_sequence_5g();

struct PolarCodeSpec {
    std::size_t N = 0;                     // block length, power of two
    std::size_t K = 0;                     // number of unfrozen channels
    std::vector<std::uint16_t> unfrozen;   // sorted ascending
    std::vector<std::uint8_t> frozen_mask; // frozen_mask[i] = 1 iff channel i frozen

    unsigned stages() const;               // log2(N)
};

// x = u * F^{(x) s} with F = [[1,0],[1,1]], natural (non-bit-reversed)
// order.  Self-inverse over GF(2).
BitBlock polar_transform(const BitBlock& u);

// Restricts the sequence to indices < N and unfreezes the K most reliable.
PolarCodeSpec construct_frozen_set(const ReliabilitySequence& seq, std::size_t N, std::size_t K);

// Places data bits at the unfrozen indices in ascending order, zeros
// elsewhere, then transforms.
BitBlock polar_encode(const BitBlock& data, const PolarCodeSpec& spec);

} // namespace listcode
