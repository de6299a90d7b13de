// The three list decoders: successive cancellation list for polar codes,
// parallel list Viterbi with wrap-around metric initialization for
// tail-biting convolutional codes, and the adaptive doubling wrapper.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "listcode/system.hpp"

namespace listcode {

struct ListConfig {
    unsigned L_min = 1;
    unsigned L_max = 1;
};

bool is_power_of_two(unsigned x);

struct CandidatePath {
    BitBlock data_bits;     // decoded data word (message + CRC bits)
    double metric = 0.0;    // higher = more likely
    int rank = 0;           // 1-based position in metric order
    unsigned start_state = 0;  // LVA only
    unsigned end_state = 0;    // LVA only

    bool tail_biting() const { return start_state == end_state; }
};

struct RankedList {
    std::vector<CandidatePath> entries;  // metric non-increasing
    unsigned L_used = 0;
};

enum class OutcomeKind { correct, undetected, erasure };

struct DecodeOutcome {
    OutcomeKind kind = OutcomeKind::erasure;
    std::optional<BitBlock> selected;  // data word; absent iff erasure
    int rank_selected = 0;
    unsigned final_L = 0;
};

// Best-ranked entry passing (tail-biting when required) and the CRC check;
// erasure when none passes.
DecodeOutcome crc_select(const RankedList& list, const CrcPoly& g, bool tb_required);

// LLR-domain SCL with the min-sum check-node update; the path metric adds
// |llr| whenever a decision contradicts the LLR sign, so for a complete
// path it equals the correlation discrepancy and full-size lists rank
// exactly like maximum likelihood.  Positive LLR favors bit 0.  Returned
// metric is the negated penalty (higher = more likely).
class SclDecoder {
public:
    explicit SclDecoder(const PolarCodeSpec& spec);
    ~SclDecoder();
    SclDecoder(SclDecoder&&) noexcept;
    SclDecoder& operator=(SclDecoder&&) noexcept;

    RankedList decode(std::span<const double> llrs, unsigned L);

    const PolarCodeSpec& spec() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One plain Viterbi pass from all-equal state metrics; returns the final
// metric per state normalized so the maximum is exactly 0.
std::vector<double> wava_init_metrics(std::span<const double> llrs, const Trellis& trellis);

// Parallel list Viterbi over all start states at once.  Keeps the L best
// paths per state at every stage (metric = sum of (1-2c_i)*llr_i), then
// merges the per-end-state survivor lists into one metric-ordered list.
// Each entry retains its start and end state so the tail-biting condition
// can be checked at selection time.
class LvaDecoder {
public:
    explicit LvaDecoder(const Trellis& trellis);
    ~LvaDecoder();
    LvaDecoder(LvaDecoder&&) noexcept;
    LvaDecoder& operator=(LvaDecoder&&) noexcept;

    // init_metrics empty = uniform zero initialization.
    RankedList decode(std::span<const double> llrs, unsigned L,
                      std::span<const double> init_metrics = {});

    // Doubling schedule over unpunctured LLRs with wrap-around metric
    // initialization computed once; branch metrics are shared across the
    // rounds, and candidates are traced back lazily.  A round's selection is
    // accepted once no full per-state list could hide a better-ranked path
    // at a larger L, so the result is always identical to
    // crc_select(decode(llrs, L_max, wava), g, true).
    DecodeOutcome adaptive(std::span<const double> llrs, const ListConfig& cfg,
                           const CrcPoly& g);

    const Trellis& trellis() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Owns whichever decoder the system needs and applies the adaptive
// doubling schedule: run at L = L_min, L_min*2, ... until a candidate
// passes crc_select or L exceeds L_max.  For LVA the wrap-around
// initialization metrics are computed once and reused across rounds.
// A returned selection is classified `undetected` until compared with the
// transmitted word (see classify_outcome in simulation.hpp).
class AdaptiveDecoder {
public:
    explicit AdaptiveDecoder(const CodeSystem& system);
    ~AdaptiveDecoder();
    AdaptiveDecoder(AdaptiveDecoder&&) noexcept;
    AdaptiveDecoder& operator=(AdaptiveDecoder&&) noexcept;

    // llrs over the transmitted block (length system.block_length()).
    DecodeOutcome decode(std::span<const double> llrs, const ListConfig& cfg);

    const CodeSystem& system() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

DecodeOutcome adaptive_decode(std::span<const double> llrs, const CodeSystem& system,
                              const ListConfig& cfg);

} // namespace listcode
