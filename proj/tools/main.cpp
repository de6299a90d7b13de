// Batch front end: encode/decode one-shots, spectrum computation, design
// searches, union-bound sweeps, Monte Carlo simulation, and throughput
// benchmarks.  Every command is deterministic given its config and seed.
//
// Exit codes: 0 success, 2 config/usage error, 3 tractability guard, 1
// internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <sys/utsname.h>

#include <CLI11.hpp>

#include "listcode/analysis.hpp"
#include "listcode/config.hpp"
#include "listcode/design.hpp"
#include "listcode/simulation.hpp"
#include "listcode/spectrum.hpp"

using namespace listcode;

namespace {

struct CommonOpts {
    std::string config_file;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> list_min, list_max;
    unsigned workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    auto* cfg = cmd->add_option("--config", o.config_file, "JSON system config file");
    auto* pre = cmd->add_option("--preset", o.preset,
                                "bundled config name (see `listcode presets`)");
    cfg->excludes(pre);
    cmd->add_option("--seed", o.seed, "override the config seed");
    cmd->add_option("--list-min", o.list_min, "override adaptive L_min");
    cmd->add_option("--list-max", o.list_max, "override adaptive L_max");
    cmd->add_option("--workers", o.workers, "worker threads (default: all cores)");
}

SystemConfig resolve_config(const CommonOpts& o) {
    SystemConfig cfg;
    if (!o.preset.empty()) cfg = preset_config(o.preset);
    else if (!o.config_file.empty()) cfg = load_system_config(o.config_file);
    else throw parse_error("one of --config or --preset is required");
    if (o.seed) cfg.seed = *o.seed;
    if (o.list_min) cfg.list.L_min = *o.list_min;
    if (o.list_max) cfg.list.L_max = *o.list_max;
    if (!is_power_of_two(cfg.list.L_min) || !is_power_of_two(cfg.list.L_max) ||
        cfg.list.L_min > cfg.list.L_max)
        throw parse_error("list sizes must be powers of two with min <= max");
    return cfg;
}

std::vector<double> parse_ebno_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw parse_error("bad Eb/N0 value: " + tok);
        }
    }
    if (out.empty()) throw parse_error("empty Eb/N0 list");
    return out;
}

GeneratorMatrix system_generator(const CodeSystem& sys) {
    return derive_generator([&sys](const BitBlock& m) { return sys.encode(m); },
                            sys.message_length, sys.block_length());
}

std::string machine_descriptor() {
    utsname u{};
    uname(&u);
    std::string model = "unknown-cpu";
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line)) {
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) model = line.substr(colon + 2);
            break;
        }
    }
    return std::string(u.sysname) + " " + u.machine + ", " + model + ", " +
           std::to_string(std::thread::hardware_concurrency()) + " threads";
}

// ---------------------------------------------------------------------- //

int cmd_presets() {
    for (const auto& n : preset_names()) std::cout << n << "\n";
    return 0;
}

int cmd_encode(const CommonOpts& o, const std::string& message_hex) {
    SystemConfig cfg = resolve_config(o);
    const BitBlock msg = BitBlock::from_hex(message_hex, cfg.system.message_length);
    const BitBlock data = cfg.system.attach_crc(msg);
    const BitBlock cw = cfg.system.encode_data(data);
    std::cout << "message " << msg.to_hex() << "\n";
    std::cout << "data " << data.to_hex() << "\n";
    std::cout << "codeword " << cw.to_hex() << "\n";
    return 0;
}

int cmd_decode(const CommonOpts& o, const std::string& llr_file) {
    SystemConfig cfg = resolve_config(o);
    std::ifstream in(llr_file);
    if (!in) throw parse_error("cannot open LLR file: " + llr_file);
    std::vector<double> llrs;
    double v;
    while (in >> v) llrs.push_back(v);
    if (!in.eof()) throw parse_error("LLR file contains non-numeric content");
    if (llrs.size() != cfg.system.block_length())
        throw parse_error("LLR count " + std::to_string(llrs.size()) + " != block length " +
                          std::to_string(cfg.system.block_length()));

    AdaptiveDecoder dec(cfg.system);
    DecodeOutcome out = dec.decode(llrs, cfg.list);
    if (out.kind == OutcomeKind::erasure) {
        std::cout << "outcome erasure\nfinal_L " << out.final_L << "\n";
    } else {
        BitBlock msg(cfg.system.message_length);
        for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, out.selected->get(i));
        std::cout << "outcome selected\n";
        std::cout << "message " << msg.to_hex() << "\n";
        std::cout << "data " << out.selected->to_hex() << "\n";
        std::cout << "rank " << out.rank_selected << "\n";
        std::cout << "final_L " << out.final_L << "\n";
    }
    return 0;
}

int cmd_spectrum(const CommonOpts& o, const std::string& mode, std::size_t weight_cap,
                 unsigned probe_list, bool force, bool expurgate, const std::string& out,
                 const std::string& words_out) {
    SystemConfig cfg = resolve_config(o);
    const CodeSystem& sys = cfg.system;
    WeightSpectrum ws;
    std::optional<CodewordSet> words;

    if (mode == "full") {
        if (sys.message_length > 34 && !force)
            throw guard_error("full enumeration needs k <= 34 (use --force to override)");
        ws = full_spectrum_gray(system_generator(sys), o.workers, force);
    } else if (mode == "partial") {
        if (sys.kind != InnerCode::tbcc)
            throw parse_error("partial mode runs on the tail-biting trellis; use probe for polar");
        TbSearchResult res =
            bounded_weight_tb_search(sys.conv, sys.data_length(), weight_cap, true, o.workers);
        if (expurgate) {
            ws = WeightSpectrum(res.spectrum.n, sys.message_length);
            CodewordSet kept;
            kept.weight_bound = res.words.weight_bound;
            for (auto& e : res.words.entries) {
                if (e.weight > 0 && !crc_check(e.data, sys.crc)) continue;
                ws.counts[e.weight]++;
                kept.entries.push_back(std::move(e));
            }
            words = std::move(kept);
        } else {
            ws = std::move(res.spectrum);
            words = std::move(res.words);
        }
    } else if (mode == "probe") {
        if (sys.kind != InnerCode::polar)
            throw parse_error("probe mode needs a polar system");
        CodewordSet set = polar_low_weight_probe(sys.polar, probe_list);
        ws = WeightSpectrum(sys.polar.N, sys.data_length());
        ws.counts[0] = 1;
        for (const auto& e : set.entries) ws.counts[e.weight]++;
        words = std::move(set);
    } else {
        throw parse_error("unknown spectrum mode: " + mode);
    }

    if (!out.empty()) write_spectrum_csv(ws, out);
    if (!words_out.empty()) {
        if (!words) throw parse_error("--words applies to partial and probe modes only");
        write_codeword_set(*words, words_out);
    }
    const std::size_t dm = ws.d_min();
    std::cout << "n " << ws.n << "\nd_min " << dm << "\nA_dmin " << (dm ? ws.A(dm) : 0) << "\n";
    return 0;
}

int cmd_design_crc(const CommonOpts& o, unsigned crc_width, unsigned probe_list,
                   std::size_t filter_weight, const std::string& out) {
    SystemConfig cfg = resolve_config(o);
    const CodeSystem& base = cfg.system;
    if (base.message_length > 34)
        throw guard_error("crc-search enumerates 2^k codewords per survivor; needs k <= 34");
    if (base.kind == InnerCode::tbcc && base.puncture.pre_length > 0)
        throw parse_error(
            "crc-search runs on the unpunctured code (the CRC is designed before the "
            "puncture pattern); drop the puncture positions from the config");
    const std::size_t data_len = base.message_length + crc_width;
    const std::vector<CrcPoly> candidates = enumerate_crc_polys(crc_width);

    // Step analog of the probe/filter design flow: gather low-weight inner
    // codewords, keep the CRCs that expurgate all of them, then enumerate
    // the concatenated spectrum of each survivor.
    CodewordSet low;
    if (base.kind == InnerCode::polar) {
        PolarCodeSpec inner = construct_frozen_set(reliability_sequence_5g(), base.polar.N,
                                                   data_len);
        low = polar_low_weight_probe(inner, probe_list);
    } else {
        TbSearchResult res =
            bounded_weight_tb_search(base.conv, data_len, filter_weight, true, o.workers);
        for (auto& e : res.words.entries)
            if (e.weight > 0) low.entries.push_back(std::move(e));
    }
    std::vector<CrcPoly> survivors = crc_survivor_filter(low, candidates, data_len);
    std::cout << "low_weight_words " << low.entries.size() << "\n";
    std::cout << "survivors " << survivors.size() << "\n";
    if (survivors.empty())
        throw parse_error(base.kind == InnerCode::polar
                              ? "no CRC survives the filter; lower --probe-list"
                              : "no CRC survives the filter; lower --filter-weight");

    auto build = [&](const CrcPoly& g) {
        CodeSystem s = base;
        s.crc = g;
        if (s.kind == InnerCode::polar)
            s.polar = construct_frozen_set(reliability_sequence_5g(), base.polar.N, data_len);
        return derive_generator([s](const BitBlock& m) { return s.encode(m); }, s.message_length,
                                s.block_length());
    };
    DsoSelection sel = dso_crc_select(build, survivors, o.workers);

    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw parse_error("cannot open for writing: " + out);
        f << "poly_hex,dmin,A_dmin,survived,winner\n";
        std::size_t si = 0;
        for (const auto& g : candidates) {
            const bool surv = si < survivors.size() && survivors[si].coeffs == g.coeffs;
            if (surv) {
                const auto& r = sel.reports[si];
                f << g.to_hex() << "," << r.d_min << "," << r.A_dmin << ",1," << (r.winner ? 1 : 0)
                  << "\n";
                ++si;
            } else {
                f << g.to_hex() << ",,,0,0\n";
            }
        }
    }
    std::cout << "winner " << sel.best.poly.to_hex() << "\n";
    std::cout << "d_min " << sel.best.d_min << "\nA_dmin " << sel.best.A_dmin << "\n";
    return 0;
}

int cmd_design_puncture(const CommonOpts& o, std::size_t count, std::size_t margin,
                        const std::string& out) {
    SystemConfig cfg = resolve_config(o);
    const CodeSystem& sys = cfg.system;
    if (sys.kind != InnerCode::tbcc) throw parse_error("puncture design needs a tbcc system");

    // find the concatenated minimum distance, then collect every CRC-passing
    // word within `margin` of it
    std::uint32_t tap_weight = 0;
    for (std::uint32_t t : sys.conv.taps) tap_weight += std::popcount(t);
    std::size_t cap = tap_weight;
    CodewordSet expurgated;
    std::size_t d_min = 0;
    for (;;) {
        TbSearchResult res =
            bounded_weight_tb_search(sys.conv, sys.data_length(), cap, true, o.workers);
        expurgated.entries.clear();
        d_min = 0;
        for (auto& e : res.words.entries) {
            if (e.weight == 0 || !crc_check(e.data, sys.crc)) continue;
            if (d_min == 0 || e.weight < d_min) d_min = e.weight;
            expurgated.entries.push_back(std::move(e));
        }
        if (d_min > 0 && d_min + margin <= cap) break;
        cap = d_min > 0 ? d_min + margin : cap + 3 * margin;
    }
    std::erase_if(expurgated.entries,
                  [&](const CodewordSet::Entry& e) { return e.weight > d_min + margin; });
    std::cout << "d_min " << d_min << "\nwords " << expurgated.entries.size() << "\n";

    PuncturePattern p = optimize_puncture(expurgated, count);
    std::cout << "puncture";
    for (auto pos : p.positions) std::cout << " " << pos;
    std::cout << "\n";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw parse_error("cannot open for writing: " + out);
        f << "position\n";
        for (auto pos : p.positions) f << pos << "\n";
    }
    return 0;
}

int cmd_design_conv(unsigned memory, unsigned n_out, std::size_t stages, std::size_t trials,
                    unsigned horizon, std::uint64_t seed, unsigned workers,
                    const std::string& out) {
    auto records = random_conv_search(memory, n_out, stages, trials, horizon, seed, workers);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw parse_error("cannot open for writing: " + out);
        f << "rank,taps_octal,d_free";
        for (unsigned i = 0; i <= horizon; ++i) f << ",A_dfree_plus_" << i;
        f << "\n";
        for (std::size_t r = 0; r < records.size(); ++r) {
            f << r + 1 << ",";
            const auto octal = records[r].spec.taps_octal();
            for (std::size_t i = 0; i < octal.size(); ++i) f << (i ? ";" : "") << octal[i];
            f << "," << records[r].d_free;
            for (auto c : records[r].initial_counts) f << "," << c;
            f << "\n";
        }
    }
    const auto& top = records.front();
    std::cout << "best";
    for (const auto& t : top.spec.taps_octal()) std::cout << " " << t;
    std::cout << "\nd_free " << top.d_free << "\nA_dfree " << top.initial_counts[0] << "\n";
    return 0;
}

int cmd_bounds(const CommonOpts& o, const std::string& spectrum_file, double rate_flag,
               const std::string& ebno_text, bool sweep, const std::string& out) {
    WeightSpectrum ws = read_spectrum_csv(spectrum_file);
    double rate = rate_flag;
    if (rate <= 0) {
        SystemConfig cfg = resolve_config(o);
        rate = cfg.system.message_rate();
    }
    const std::vector<double> ebnos = parse_ebno_list(ebno_text);

    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out.empty()) {
        f.open(out);
        if (!f) throw parse_error("cannot open for writing: " + out);
        os = &f;
    }
    (*os) << "ebno_db,d_max,bound\n";
    os->precision(12);
    for (double e : ebnos) {
        if (sweep)
            for (std::size_t d = 1; d < ws.counts.size(); ++d)
                (*os) << e << "," << d << "," << truncated_union_bound(ws, rate, e, d) << "\n";
        (*os) << e << ",," << union_bound(ws, rate, e) << "\n";
    }
    return 0;
}

int cmd_simulate(const CommonOpts& o, const std::string& ebno_text, std::uint64_t min_errors,
                 std::uint64_t max_trials, const std::string& out_base, bool noiseless,
                 bool timing) {
    SystemConfig cfg = resolve_config(o);
    const std::vector<double> ebnos = parse_ebno_list(ebno_text);
    SimReport rep = run_montecarlo(cfg.system, cfg.list, ebnos, StopRule{min_errors, max_trials},
                                   cfg.seed, o.workers, noiseless);
    write_sim_csv(rep, out_base + ".csv", timing);
    write_sim_json(rep, out_base + ".json", true);
    for (const auto& p : rep.points)
        std::printf("ebno %.3f trials %llu tfr %.6g uer %.6g erasure %.6g mean_L %.2f\n",
                    p.ebno_db, static_cast<unsigned long long>(p.trials), p.tfr, p.uer,
                    p.erasure_rate, p.mean_final_L);
    std::cout << "wrote " << out_base << ".csv and " << out_base << ".json\n";
    return 0;
}

int cmd_bench(const CommonOpts& o, double ebno_db, double duration) {
    SystemConfig cfg = resolve_config(o);
    const double rate = benchmark_throughput(cfg.system, cfg.list, ebno_db, duration, cfg.seed);
    std::cout << "machine " << machine_descriptor() << "\n";
    std::cout << "system " << cfg.system.name << " list (" << cfg.list.L_min << ","
              << cfg.list.L_max << ") ebno " << ebno_db << "\n";
    std::cout << "cw_per_sec " << rate << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CRC-aided list decoding toolkit for short block codes"};
    app.require_subcommand(1);

    CommonOpts enc_o, dec_o, spec_o, sim_o, bench_o, crc_o, punc_o, bounds_o;

    auto* presets_cmd = app.add_subcommand("presets", "list bundled configuration names");

    auto* encode = app.add_subcommand("encode", "message -> CRC -> inner code -> puncture");
    add_common(encode, enc_o);
    std::string message_hex;
    encode->add_option("--message", message_hex, "message bits as hex (bit 0 = first hex MSB)")
        ->required();

    auto* decode = app.add_subcommand("decode", "adaptive list decode of one LLR block");
    add_common(decode, dec_o);
    std::string llr_file;
    decode->add_option("--llrs", llr_file, "file of whitespace-separated channel LLRs")
        ->required();

    auto* spectrum = app.add_subcommand("spectrum", "weight spectra: full, partial, or probe");
    add_common(spectrum, spec_o);
    std::string mode = "full", spec_out, words_out;
    std::size_t weight_cap = 92;
    unsigned probe_list = 32768;
    bool force = false, expurgate = false;
    spectrum->add_option("--mode", mode, "full | partial | probe")->required();
    spectrum->add_option("--weight-cap", weight_cap, "partial mode: max weight (default 92)");
    spectrum->add_option("--probe-list", probe_list, "probe mode: SCL list size (default 32768)");
    spectrum->add_flag("--force", force, "override the k <= 34 full-enumeration guard");
    spectrum->add_flag("--expurgate", expurgate, "partial mode: keep only CRC-passing words");
    spectrum->add_option("--out", spec_out, "spectrum CSV path");
    spectrum->add_option("--words", words_out, "codeword set output (hex + weight per line)");

    auto* design = app.add_subcommand("design", "code design searches");
    design->require_subcommand(1);

    auto* crc_search = design->add_subcommand("crc-search", "distance-spectrum-optimal CRC");
    add_common(crc_search, crc_o);
    unsigned crc_width = 11, crc_probe = 32768;
    std::size_t filter_weight = 131;
    std::string crc_out;
    crc_search->add_option("--crc-width", crc_width, "CRC width m (default 11)");
    crc_search->add_option("--probe-list", crc_probe, "polar probe list size (default 32768)");
    crc_search->add_option("--filter-weight", filter_weight,
                           "tbcc: filter CRCs using inner words up to this weight (default 131)");
    crc_search->add_option("--out", crc_out, "candidate report CSV");

    auto* puncture = design->add_subcommand("puncture", "best puncture positions");
    add_common(puncture, punc_o);
    std::size_t punc_count = 4, punc_margin = 4;
    std::string punc_out;
    puncture->add_option("--count", punc_count, "positions to puncture (default 4)");
    puncture->add_option("--margin", punc_margin,
                         "enumerate words up to d_min + margin (default 4)");
    puncture->add_option("--out", punc_out, "positions CSV");

    auto* conv = design->add_subcommand("conv-search", "randomized tap-set search");
    unsigned conv_mem = 8, conv_nout = 12, conv_horizon = 3, conv_workers = 0;
    std::size_t conv_stages = 43, conv_trials = 100;
    std::uint64_t conv_seed = 1;
    std::string conv_out;
    conv->add_option("--memory", conv_mem, "shift register length v (default 8)");
    conv->add_option("--n-out", conv_nout, "output bits per input bit (default 12)");
    conv->add_option("--stages", conv_stages, "tail-biting message length (default 43)");
    conv->add_option("--trials", conv_trials, "random tap sets to score (default 100)");
    conv->add_option("--horizon", conv_horizon, "count weights d_free..d_free+h (default 3)");
    conv->add_option("--seed", conv_seed, "sampling seed");
    conv->add_option("--workers", conv_workers, "worker threads");
    conv->add_option("--out", conv_out, "ranked records CSV");

    auto* bounds = app.add_subcommand("bounds", "union bound sweeps from a spectrum CSV");
    add_common(bounds, bounds_o);
    std::string bounds_spectrum, bounds_ebno = "3,5", bounds_out;
    double bounds_rate = 0.0;
    bool bounds_sweep = false;
    bounds->add_option("--spectrum", bounds_spectrum, "spectrum CSV (d,A)")->required();
    bounds->add_option("--rate", bounds_rate,
                       "information rate; taken from --config/--preset when omitted");
    bounds->add_option("--ebno", bounds_ebno, "comma-separated Eb/N0 dB list (default 3,5)");
    bounds->add_flag("--sweep", bounds_sweep, "emit the full truncated-bound sweep over d_max");
    bounds->add_option("--out", bounds_out, "output CSV (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo TFR/UER/erasure measurement");
    add_common(simulate, sim_o);
    std::string sim_ebno, sim_out = "simreport";
    std::uint64_t sim_min_errors = 100, sim_max_trials = 100'000'000;
    bool sim_noiseless = false, sim_timing = false;
    simulate->add_option("--ebno", sim_ebno, "comma-separated Eb/N0 dB list")->required();
    simulate->add_option("--min-errors", sim_min_errors, "stop after this many failures");
    simulate->add_option("--max-trials", sim_max_trials, "hard trial cap per point");
    simulate->add_option("--out", sim_out, "output base name (default simreport)");
    simulate->add_flag("--noiseless", sim_noiseless, "saturated LLRs, no noise (smoke runs)");
    simulate->add_flag("--timing", sim_timing, "fill the cw_per_sec CSV column");

    auto* bench = app.add_subcommand("bench", "decoder throughput on this machine");
    add_common(bench, bench_o);
    double bench_ebno = 3.0, bench_duration = 10.0;
    bench->add_option("--ebno", bench_ebno, "operating point (default 3 dB)");
    bench->add_option("--duration", bench_duration, "seconds to run (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (presets_cmd->parsed()) return cmd_presets();
        if (encode->parsed()) return cmd_encode(enc_o, message_hex);
        if (decode->parsed()) return cmd_decode(dec_o, llr_file);
        if (spectrum->parsed())
            return cmd_spectrum(spec_o, mode, weight_cap, probe_list, force, expurgate, spec_out,
                                words_out);
        if (design->parsed()) {
            if (crc_search->parsed())
                return cmd_design_crc(crc_o, crc_width, crc_probe, filter_weight, crc_out);
            if (puncture->parsed())
                return cmd_design_puncture(punc_o, punc_count, punc_margin, punc_out);
            if (conv->parsed())
                return cmd_design_conv(conv_mem, conv_nout, conv_stages, conv_trials,
                                       conv_horizon, conv_seed, conv_workers, conv_out);
        }
        if (bounds->parsed())
            return cmd_bounds(bounds_o, bounds_spectrum, bounds_rate, bounds_ebno, bounds_sweep,
                              bounds_out);
        if (simulate->parsed())
            return cmd_simulate(sim_o, sim_ebno, sim_min_errors, sim_max_trials, sim_out,
                                sim_noiseless, sim_timing);
        if (bench->parsed()) return cmd_bench(bench_o, bench_ebno, bench_duration);
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
