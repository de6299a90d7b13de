// Code-design searches: distance-spectrum-optimal CRC selection, puncture
// optimization, and randomized convolutional polynomial search.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "listcode/crc.hpp"
#include "listcode/spectrum.hpp"

namespace listcode {

struct CrcCandidateReport {
    CrcPoly poly;
    std::size_t d_min = 0;
    std::uint64_t A_dmin = 0;
    bool survived_filter = true;
    bool winner = false;
};

struct ConvSearchRecord {
    ConvCodeSpec spec;
    std::size_t d_free = 0;
    // A(d_free), A(d_free+1), ..., length horizon+1
    std::vector<std::uint64_t> initial_counts;
};

// A candidate survives iff no data vector in `low_weight` passes its CRC
// check, i.e. the CRC expurgates every listed low-weight codeword.
std::vector<CrcPoly> crc_survivor_filter(const CodewordSet& low_weight,
                                         const std::vector<CrcPoly>& candidates,
                                         std::size_t data_len);

struct DsoSelection {
    CrcCandidateReport best;
    std::vector<CrcCandidateReport> reports;  // one per candidate, input order
};

// Builds the concatenated generator for each candidate, enumerates its full
// spectrum, and picks max d_min, then min A(d_min), then lexicographically
// smaller counts at successive weights, then smallest hex value.
using SystemGeneratorFn = std::function<GeneratorMatrix(const CrcPoly&)>;
DsoSelection dso_crc_select(const SystemGeneratorFn& build_generator,
                            const std::vector<CrcPoly>& candidates,
                            unsigned workers = 0);

// Greedy: the `count` columns with the most zeros across all listed
// codewords, ties broken by lowest index.
PuncturePattern optimize_puncture(const CodewordSet& min_weight_words, std::size_t count);

// Samples tap sets with g_0 = g_v = 1 and no repeated polynomial, scores
// each by its tail-biting weight spectrum up to d_free + horizon, and
// ranks by (max d_free, then min A(d_free), A(d_free+1), ...).
std::vector<ConvSearchRecord> random_conv_search(unsigned memory, unsigned n_out,
                                                 std::size_t k, std::size_t trials,
                                                 unsigned horizon, std::uint64_t seed,
                                                 unsigned workers = 0);

// Partial spectrum of one tap set up to d_free + horizon (the scoring
// primitive used by random_conv_search).
ConvSearchRecord evaluate_conv_code(const ConvCodeSpec& spec, std::size_t k, unsigned horizon);

} // namespace listcode
