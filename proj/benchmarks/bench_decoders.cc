#include <benchmark/benchmark.h>

#include <random>

#include "listcode/listdec.hpp"
#include "listcode/simulation.hpp"
#include "listcode/spectrum.hpp"

using namespace listcode;

namespace {

std::vector<double> noisy_llrs(const CodeSystem& sys, double ebno_db, std::uint64_t trial) {
    auto rng = trial_rng(42, 0, trial);
    BitBlock msg(sys.message_length);
    for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, rng() & 1);
    return transmit(sys.encode(msg), make_channel(ebno_db, sys.message_rate()), rng);
}

void BM_scl_decode(benchmark::State& state) {
    const CodeSystem sys = presets::polar_5g_512_43_crc0xD41();
    SclDecoder dec(sys.polar);
    const auto llrs = noisy_llrs(sys, 3.0, 0);
    const unsigned L = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dec.decode(llrs, L));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_scl_decode)->Arg(1)->Arg(8)->Arg(32)->Arg(256);

void BM_lva_adaptive(benchmark::State& state) {
    const CodeSystem sys = presets::tbcc_512_43_crc0xF69();
    AdaptiveDecoder dec(sys);
    const unsigned Lmax = static_cast<unsigned>(state.range(0));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        state.PauseTiming();
        const auto llrs = noisy_llrs(sys, 3.0, trial++);
        state.ResumeTiming();
        benchmark::DoNotOptimize(dec.decode(llrs, ListConfig{1, Lmax}));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_lva_adaptive)->Arg(1)->Arg(64)->Arg(1024);

void BM_wava_init(benchmark::State& state) {
    const CodeSystem sys = presets::tbcc_512_43_crc0xF69();
    const Trellis tr = build_trellis(sys.conv, sys.data_length());
    const auto llrs = depuncture_llr(noisy_llrs(sys, 3.0, 0), sys.puncture);
    for (auto _ : state) benchmark::DoNotOptimize(wava_init_metrics(llrs, tr));
}
BENCHMARK(BM_wava_init);

void BM_crc_append(benchmark::State& state) {
    const CrcPoly g = parse_hex_poly("0xF69", 11);
    BitBlock msg(32);
    msg.set(7, true);
    for (auto _ : state) benchmark::DoNotOptimize(crc_append(msg, g));
}
BENCHMARK(BM_crc_append);

void BM_gray_enumeration(benchmark::State& state) {
    // rate of the Gray walk itself, measured on a k=24 slice of the
    // punctured CRC-TBCC generator
    const CodeSystem sys = presets::tbcc_512_43_crc0xF69();
    GeneratorMatrix full = derive_generator(
        [&sys](const BitBlock& m) { return sys.encode(m); }, sys.message_length,
        sys.block_length());
    GeneratorMatrix G(std::vector<BitBlock>(full.rows.begin(), full.rows.begin() + 24));
    for (auto _ : state) benchmark::DoNotOptimize(full_spectrum_gray(G, 1));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << 24));
}
BENCHMARK(BM_gray_enumeration);

void BM_tb_search_w92(benchmark::State& state) {
    const ConvCodeSpec spec = presets::rate112_memory8();
    for (auto _ : state)
        benchmark::DoNotOptimize(bounded_weight_tb_search(spec, 43, 92, false, 1));
}
BENCHMARK(BM_tb_search_w92);

} // namespace

BENCHMARK_MAIN();
