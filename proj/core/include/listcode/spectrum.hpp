// Distance-spectrum machinery: exact enumeration by a Gray-order
// incremental walk, bounded-weight tail-biting trellis search, and the
// high-SNR list-decoding probe.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "listcode/convolutional.hpp"
#include "listcode/gf2.hpp"
#include "listcode/polar.hpp"

namespace listcode {

struct WeightSpectrum {
    std::vector<std::uint64_t> counts;  // counts[d] = A(d), d in [0, n]
    std::size_t n = 0;
    std::size_t k = 0;

    WeightSpectrum() = default;
    WeightSpectrum(std::size_t block_len, std::size_t dim)
        : counts(block_len + 1, 0), n(block_len), k(dim) {}

    std::uint64_t A(std::size_t d) const { return d < counts.size() ? counts[d] : 0; }
    // Smallest d > 0 with A(d) > 0; 0 if none.
    std::size_t d_min() const;
    std::uint64_t total() const;
};

struct CodewordSet {
    struct Entry {
        BitBlock codeword;
        BitBlock data;
        std::size_t weight = 0;
    };
    std::vector<Entry> entries;
    std::size_t weight_bound = 0;
};

// Exact counts over all 2^k codewords.  Walks messages in Gray order,
// one row-XOR + popcount per step; partitionable across workers.
// Refuses k > 34 unless `force` (guard_error).
WeightSpectrum full_spectrum_gray(const GeneratorMatrix& G, unsigned workers = 0,
                                  bool force = false);

struct TbSearchResult {
    WeightSpectrum spectrum;  // exact for d <= weight_cap
    CodewordSet words;        // populated when collect_words
};

// Exact A(d) for all d <= weight_cap of the tail-biting code, by
// depth-first trellis traversal with a per-start-state min-weight-to-close
// lower bound for pruning.
TbSearchResult bounded_weight_tb_search(const ConvCodeSpec& spec, std::size_t k,
                                        std::size_t weight_cap, bool collect_words = true,
                                        unsigned workers = 0);

// Decodes the all-zero codeword at saturated LLRs (+magnitude each bit)
// with list size L, re-encodes every final path and returns the distinct
// nonzero codewords.  Deterministic: no noise is involved.
CodewordSet polar_low_weight_probe(const PolarCodeSpec& spec, unsigned L,
                                   double llr_magnitude = 1000.0);

// Running prefix sums: result[d] = sum of A(d') for d' <= d.
std::vector<std::uint64_t> cumulative_spectrum(const WeightSpectrum& ws);

// CSV with header "d,A", nonzero entries sorted by d.
void write_spectrum_csv(const WeightSpectrum& ws, const std::filesystem::path& path);
WeightSpectrum read_spectrum_csv(const std::filesystem::path& path);

// One hex codeword + weight per line.
void write_codeword_set(const CodewordSet& set, const std::filesystem::path& path);

} // namespace listcode
