#include "listcode/simulation.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace listcode {

double ebno_to_sigma(double ebno_db, double rate) {
    if (rate <= 0) throw parameter_error("ebno_to_sigma: rate must be positive");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0)));
}

ChannelParams make_channel(double ebno_db, double rate) {
    return ChannelParams{ebno_db, ebno_to_sigma(ebno_db, rate), rate};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::mt19937_64 trial_rng(std::uint64_t master_seed, std::size_t snr_index,
                          std::uint64_t trial_index) {
    std::uint64_t h = splitmix64(master_seed ^ 0x6c697374636f6465ULL);
    h = splitmix64(h ^ snr_index);
    h = splitmix64(h ^ trial_index);
    return std::mt19937_64(h);
}

std::vector<double> transmit(const BitBlock& cw, const ChannelParams& ch, std::mt19937_64& rng) {
    std::normal_distribution<double> noise(0.0, 1.0);
    const double scale = 2.0 / (ch.sigma * ch.sigma);
    std::vector<double> llrs(cw.size());
    for (std::size_t i = 0; i < cw.size(); ++i) {
        const double s = cw.get(i) ? -1.0 : 1.0;
        const double y = s + ch.sigma * noise(rng);
        llrs[i] = scale * y;
    }
    return llrs;
}

OutcomeKind classify_outcome(const std::optional<BitBlock>& selected,
                             const BitBlock& transmitted) {
    if (!selected) return OutcomeKind::erasure;
    return *selected == transmitted ? OutcomeKind::correct : OutcomeKind::undetected;
}

namespace {

struct Tally {
    std::uint64_t correct = 0;
    std::uint64_t undetected = 0;
    std::uint64_t erasure = 0;
    std::uint64_t final_L_sum = 0;

    void operator+=(const Tally& o) {
        correct += o.correct;
        undetected += o.undetected;
        erasure += o.erasure;
        final_L_sum += o.final_L_sum;
    }
    std::uint64_t failures() const { return undetected + erasure; }
    std::uint64_t trials() const { return correct + undetected + erasure; }
};

double radius95(double p, std::uint64_t n) {
    if (n == 0) return 0.0;
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

constexpr std::uint64_t kBlock = 256;

} // namespace

SimReport run_montecarlo(const CodeSystem& system, const ListConfig& cfg,
                         std::span<const double> ebno_list, const StopRule& stop,
                         std::uint64_t master_seed, unsigned workers, bool noiseless) {
    if (stop.min_errors < 1) throw parameter_error("run_montecarlo: min_errors must be >= 1");
    unsigned nworkers = workers;
    if (nworkers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        nworkers = hw > 0 ? hw : 1;
    }

    SimReport report;
    report.system_name = system.name;
    report.decoder_name = system.kind == InnerCode::polar ? "scl" : "lva";
    report.list = cfg;
    report.seed = master_seed;

    std::vector<std::unique_ptr<AdaptiveDecoder>> decoders;
    for (unsigned w = 0; w < nworkers; ++w)
        decoders.push_back(std::make_unique<AdaptiveDecoder>(system));

    for (std::size_t si = 0; si < ebno_list.size(); ++si) {
        const ChannelParams ch = make_channel(ebno_list[si], system.message_rate());
        const auto t0 = std::chrono::steady_clock::now();

        Tally total;
        std::uint64_t next_trial = 0;
        while (total.failures() < stop.min_errors && total.trials() < stop.max_trials) {
            const std::uint64_t block =
                std::min<std::uint64_t>(kBlock, stop.max_trials - total.trials());
            std::vector<Tally> parts(nworkers);
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < nworkers; ++w) {
                pool.emplace_back([&, w] {
                    AdaptiveDecoder& dec = *decoders[w];
                    Tally& tally = parts[w];
                    for (std::uint64_t i = w; i < block; i += nworkers) {
                        const std::uint64_t trial = next_trial + i;
                        auto rng = trial_rng(master_seed, si, trial);
                        BitBlock msg(system.message_length);
                        for (std::size_t b = 0; b < msg.size(); ++b) msg.set(b, rng() & 1);
                        const BitBlock data = system.attach_crc(msg);
                        const BitBlock cw = system.encode_data(data);
                        std::vector<double> llrs;
                        if (noiseless) {
                            llrs.resize(cw.size());
                            for (std::size_t b = 0; b < cw.size(); ++b)
                                llrs[b] = cw.get(b) ? -1.0e6 : 1.0e6;
                        } else {
                            llrs = transmit(cw, ch, rng);
                        }
                        DecodeOutcome out = dec.decode(llrs, cfg);
                        switch (classify_outcome(out.selected, data)) {
                            case OutcomeKind::correct: ++tally.correct; break;
                            case OutcomeKind::undetected: ++tally.undetected; break;
                            case OutcomeKind::erasure: ++tally.erasure; break;
                        }
                        tally.final_L_sum += out.final_L;
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const Tally& p : parts) total += p;
            next_trial += block;
        }

        const auto t1 = std::chrono::steady_clock::now();
        const double wall = std::chrono::duration<double>(t1 - t0).count();

        SnrPointReport pt;
        pt.ebno_db = ebno_list[si];
        pt.trials = total.trials();
        pt.n_correct = total.correct;
        pt.n_undetected = total.undetected;
        pt.n_erasure = total.erasure;
        const double n = static_cast<double>(pt.trials);
        pt.tfr = static_cast<double>(total.failures()) / n;
        pt.uer = static_cast<double>(total.undetected) / n;
        pt.erasure_rate = static_cast<double>(total.erasure) / n;
        pt.tfr_radius95 = radius95(pt.tfr, pt.trials);
        pt.uer_radius95 = radius95(pt.uer, pt.trials);
        pt.erasure_radius95 = radius95(pt.erasure_rate, pt.trials);
        pt.mean_final_L = static_cast<double>(total.final_L_sum) / n;
        pt.wall_time_s = wall;
        pt.cw_per_sec = wall > 0 ? n / wall : 0.0;
        report.points.push_back(pt);
    }
    return report;
}

double benchmark_throughput(const CodeSystem& system, const ListConfig& cfg, double ebno_db,
                            double seconds, std::uint64_t master_seed) {
    if (seconds <= 0) throw parameter_error("benchmark_throughput: duration must be positive");
    AdaptiveDecoder dec(system);
    const ChannelParams ch = make_channel(ebno_db, system.message_rate());
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t count = 0;
    double elapsed = 0.0;
    for (;;) {
        auto rng = trial_rng(master_seed, 0, count);
        BitBlock msg(system.message_length);
        for (std::size_t b = 0; b < msg.size(); ++b) msg.set(b, rng() & 1);
        const BitBlock cw = system.encode(msg);
        const std::vector<double> llrs = transmit(cw, ch, rng);
        (void)dec.decode(llrs, cfg);
        ++count;
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed >= seconds) break;
    }
    return static_cast<double>(count) / elapsed;
}

void write_sim_csv(const SimReport& report, const std::filesystem::path& path, bool with_timing) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open for writing: " + path.string());
    out << "ebno_db,trials,correct,undetected,erasure,tfr,uer,erasure_rate,mean_final_L,"
           "cw_per_sec\n";
    out.precision(10);
    for (const auto& p : report.points) {
        out << p.ebno_db << "," << p.trials << "," << p.n_correct << "," << p.n_undetected << ","
            << p.n_erasure << "," << p.tfr << "," << p.uer << "," << p.erasure_rate << ","
            << p.mean_final_L << ",";
        if (with_timing) out << p.cw_per_sec;
        out << "\n";
    }
}

void write_sim_json(const SimReport& report, const std::filesystem::path& path,
                    bool with_timing) {
    nlohmann::json j;
    j["system"] = report.system_name;
    j["decoder"] = report.decoder_name;
    j["list"] = {{"min", report.list.L_min}, {"max", report.list.L_max}};
    j["seed"] = report.seed;
    j["points"] = nlohmann::json::array();
    for (const auto& p : report.points) {
        nlohmann::json pj{{"ebno_db", p.ebno_db},
                          {"trials", p.trials},
                          {"correct", p.n_correct},
                          {"undetected", p.n_undetected},
                          {"erasure", p.n_erasure},
                          {"tfr", p.tfr},
                          {"uer", p.uer},
                          {"erasure_rate", p.erasure_rate},
                          {"tfr_radius95", p.tfr_radius95},
                          {"uer_radius95", p.uer_radius95},
                          {"erasure_radius95", p.erasure_radius95},
                          {"mean_final_L", p.mean_final_L}};
        if (with_timing) {
            pj["wall_time_s"] = p.wall_time_s;
            pj["cw_per_sec"] = p.cw_per_sec;
        }
        j["points"].push_back(pj);
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open for writing: " + path.string());
    out << j.dump(2) << "\n";
}

} // namespace listcode
