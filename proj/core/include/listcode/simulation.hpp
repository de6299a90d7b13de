// BPSK/AWGN Monte Carlo: total-failure-rate measurement and decoder
// throughput.  Every trial owns an RNG stream derived from (master seed,
// SNR index, trial index), so reports are identical for any worker count.
#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <vector>

#include "listcode/listdec.hpp"
#include "listcode/system.hpp"

namespace listcode {

struct ChannelParams {
    double ebno_db = 0.0;
    double sigma = 1.0;  // noise std deviation per dimension
    double rate = 1.0;   // information rate used in the conversion
};

double ebno_to_sigma(double ebno_db, double rate);

ChannelParams make_channel(double ebno_db, double rate);

// splitmix64-seeded mt19937_64 stream for one (seed, snr, trial) triple.
std::mt19937_64 trial_rng(std::uint64_t master_seed, std::size_t snr_index,
                          std::uint64_t trial_index);

// BPSK map s = 1-2c, Gaussian noise, llr = 2y/sigma^2 (positive favors 0).
std::vector<double> transmit(const BitBlock& cw, const ChannelParams& ch,
                             std::mt19937_64& rng);

OutcomeKind classify_outcome(const std::optional<BitBlock>& selected,
                             const BitBlock& transmitted);

struct StopRule {
    std::uint64_t min_errors = 100;
    std::uint64_t max_trials = 100'000'000;
};

struct SnrPointReport {
    double ebno_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t n_correct = 0;
    std::uint64_t n_undetected = 0;
    std::uint64_t n_erasure = 0;
    double tfr = 0.0;
    double uer = 0.0;
    double erasure_rate = 0.0;
    double tfr_radius95 = 0.0;
    double uer_radius95 = 0.0;
    double erasure_radius95 = 0.0;
    double mean_final_L = 0.0;
    double wall_time_s = 0.0;
    double cw_per_sec = 0.0;
};

struct SimReport {
    std::string system_name;
    std::string decoder_name;
    ListConfig list;
    std::uint64_t seed = 0;
    std::vector<SnrPointReport> points;
};

// Per SNR point: random messages through the full pipeline, adaptive
// decoding, outcome classification.  Trials run in fixed-size blocks; the
// stop rule is evaluated at block boundaries so the processed trial set is
// independent of the worker count.
SimReport run_montecarlo(const CodeSystem& system, const ListConfig& cfg,
                         std::span<const double> ebno_list, const StopRule& stop,
                         std::uint64_t master_seed, unsigned workers = 0,
                         bool noiseless = false);

// Decodes freshly generated noisy codewords for at least `seconds`;
// returns decoded codewords per second.  Informational.
double benchmark_throughput(const CodeSystem& system, const ListConfig& cfg,
                            double ebno_db, double seconds,
                            std::uint64_t master_seed = 1);

// CSV: ebno_db,trials,correct,undetected,erasure,tfr,uer,erasure_rate,
// mean_final_L,cw_per_sec.  Timing columns are left empty unless
// with_timing is set, keeping equal-seed reruns byte-identical.
void write_sim_csv(const SimReport& report, const std::filesystem::path& path,
                   bool with_timing = false);
void write_sim_json(const SimReport& report, const std::filesystem::path& path,
                    bool with_timing = true);

} // namespace listcode
