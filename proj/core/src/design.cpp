#include "listcode/design.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace listcode {

namespace {

unsigned resolve_workers(unsigned workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace

std::vector<CrcPoly> crc_survivor_filter(const CodewordSet& low_weight,
                                         const std::vector<CrcPoly>& candidates,
                                         std::size_t data_len) {
    std::vector<std::uint64_t> packed;
    packed.reserve(low_weight.entries.size());
    for (const auto& e : low_weight.entries) {
        if (e.data.size() != data_len)
            throw dimension_error("crc_survivor_filter: data vector length mismatch");
        packed.push_back(pack_msb_first(e.data));
    }
    std::vector<CrcPoly> survivors;
    for (const CrcPoly& g : candidates) {
        bool eliminated = false;
        for (std::uint64_t word : packed) {
            if (crc_check_packed(word, static_cast<unsigned>(data_len), g)) {
                eliminated = true;
                break;
            }
        }
        if (!eliminated) survivors.push_back(g);
    }
    return survivors;
}

DsoSelection dso_crc_select(const SystemGeneratorFn& build_generator,
                            const std::vector<CrcPoly>& candidates, unsigned workers) {
    if (candidates.empty()) throw parameter_error("dso_crc_select: no candidates");

    struct Scored {
        std::vector<std::uint64_t> counts;
        std::size_t d_min = 0;
    };
    std::vector<Scored> scored(candidates.size());

    const unsigned nthreads =
        std::min<std::size_t>(resolve_workers(workers), candidates.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= candidates.size()) return;
                GeneratorMatrix G = build_generator(candidates[i]);
                WeightSpectrum ws = full_spectrum_gray(G, 1);
                scored[i].d_min = ws.d_min();
                scored[i].counts = std::move(ws.counts);
            }
        });
    }
    for (auto& th : pool) th.join();

    // max d_min, then lexicographically smaller counts from d_min upward,
    // then smaller hex value
    auto better = [&](std::size_t a, std::size_t b) {
        if (scored[a].d_min != scored[b].d_min) return scored[a].d_min > scored[b].d_min;
        const auto& ca = scored[a].counts;
        const auto& cb = scored[b].counts;
        for (std::size_t d = scored[a].d_min; d < ca.size(); ++d) {
            if (ca[d] != cb[d]) return ca[d] < cb[d];
        }
        return candidates[a].coeffs < candidates[b].coeffs;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (better(i, best)) best = i;

    DsoSelection sel;
    sel.reports.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        CrcCandidateReport r;
        r.poly = candidates[i];
        r.d_min = scored[i].d_min;
        r.A_dmin = scored[i].d_min ? scored[i].counts[scored[i].d_min] : 0;
        r.winner = (i == best);
        sel.reports.push_back(r);
    }
    sel.best = sel.reports[best];
    return sel;
}

PuncturePattern optimize_puncture(const CodewordSet& min_weight_words, std::size_t count) {
    if (min_weight_words.entries.empty())
        throw parameter_error("optimize_puncture: empty codeword set");
    const std::size_t n = min_weight_words.entries.front().codeword.size();
    if (count >= n) throw parameter_error("optimize_puncture: count >= block length");

    // Zero counts over the minimum-weight words rank the candidate columns;
    // the full tie tier of the top `count` goes into an exact subset search.
    std::size_t min_w = SIZE_MAX;
    for (const auto& e : min_weight_words.entries) {
        if (e.codeword.size() != n)
            throw dimension_error("optimize_puncture: ragged codeword set");
        min_w = std::min(min_w, e.weight);
    }
    std::vector<std::size_t> zeros(n, 0);
    for (const auto& e : min_weight_words.entries) {
        if (e.weight != min_w) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (!e.codeword.get(c)) ++zeros[c];
    }
    std::vector<std::size_t> by_zeros(n);
    for (std::size_t c = 0; c < n; ++c) by_zeros[c] = c;
    std::stable_sort(by_zeros.begin(), by_zeros.end(), [&](std::size_t a, std::size_t b) {
        return zeros[a] != zeros[b] ? zeros[a] > zeros[b] : a < b;
    });
    const std::size_t tier = zeros[by_zeros[count - 1]];
    std::vector<std::size_t> shortlist;
    for (std::size_t c : by_zeros) {
        if (zeros[c] < tier) break;
        shortlist.push_back(c);
    }
    // keep the subset search bounded for degenerate tie structures
    auto n_choose = [](std::size_t m, std::size_t r) {
        double v = 1;
        for (std::size_t i = 0; i < r; ++i) v *= static_cast<double>(m - i) / (i + 1);
        return v;
    };
    while (shortlist.size() > count && n_choose(shortlist.size(), count) > 5e6)
        shortlist.pop_back();
    std::sort(shortlist.begin(), shortlist.end());

    // Among the shortlisted columns, pick the subset whose punctured weight
    // histogram over the given words is lexicographically smallest from low
    // weights up (max punctured d_min, then min multiplicities); remaining
    // ties go to the smallest column set.  Words a few weights above the
    // minimum sharpen the comparison when the caller provides them.
    std::vector<std::size_t> current(count), best_cols;
    std::vector<std::uint32_t> best_hist, hist;
    const std::size_t max_w = [&] {
        std::size_t m = 0;
        for (const auto& e : min_weight_words.entries) m = std::max(m, e.weight);
        return m;
    }();

    // counts above max_w - count would miss words outside the given set
    const std::size_t exact_top = max_w - count;
    auto evaluate = [&](const std::vector<std::size_t>& cols) {
        hist.assign(exact_top + 1, 0);
        for (const auto& e : min_weight_words.entries) {
            std::size_t ones = 0;
            for (std::size_t c : cols) ones += e.codeword.get(c);
            const std::size_t pw = e.weight - ones;
            if (pw <= exact_top) hist[pw]++;
        }
        if (best_cols.empty() || hist < best_hist ||
            (hist == best_hist && cols < best_cols)) {
            best_hist = hist;
            best_cols = cols;
        }
    };
    // iterative enumeration of count-subsets of the shortlist
    std::vector<std::size_t> pick(count);
    for (std::size_t i = 0; i < count; ++i) pick[i] = i;
    for (;;) {
        for (std::size_t i = 0; i < count; ++i) current[i] = shortlist[pick[i]];
        evaluate(current);
        std::size_t i = count;
        while (i > 0 && pick[i - 1] == shortlist.size() - count + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < count; ++j) pick[j] = pick[j - 1] + 1;
    }
    return PuncturePattern(std::move(best_cols), n);
}

ConvSearchRecord evaluate_conv_code(const ConvCodeSpec& spec, std::size_t k, unsigned horizon) {
    if (k <= spec.memory)
        throw parameter_error("evaluate_conv_code: message length must exceed the memory");
    // The single-1 message closes the register through zeros, so its
    // codeword weight (the total tap weight) upper-bounds d_free.
    std::uint32_t tap_weight = 0;
    for (std::uint32_t t : spec.taps) tap_weight += static_cast<std::uint32_t>(std::popcount(t));

    TbSearchResult res = bounded_weight_tb_search(spec, k, tap_weight, false, 1);
    std::size_t d_free = res.spectrum.d_min();
    if (d_free + horizon > tap_weight)
        res = bounded_weight_tb_search(spec, k, d_free + horizon, false, 1);

    ConvSearchRecord rec;
    rec.spec = spec;
    rec.d_free = d_free;
    rec.initial_counts.resize(horizon + 1, 0);
    for (unsigned i = 0; i <= horizon; ++i) rec.initial_counts[i] = res.spectrum.A(d_free + i);
    return rec;
}

std::vector<ConvSearchRecord> random_conv_search(unsigned memory, unsigned n_out, std::size_t k,
                                                 std::size_t trials, unsigned horizon,
                                                 std::uint64_t seed, unsigned workers) {
    if (trials < 1) throw parameter_error("random_conv_search: trials must be >= 1");

    // Tap sets are drawn serially so the sample depends only on the seed.
    std::mt19937_64 rng(seed);
    const std::uint32_t mid_count = std::uint32_t{1} << (memory - 1);
    std::vector<ConvCodeSpec> specs;
    specs.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> taps;
        while (taps.size() < n_out) {
            const std::uint32_t mid = static_cast<std::uint32_t>(rng() % mid_count);
            const std::uint32_t mask = (std::uint32_t{1} << memory) | (mid << 1) | 1u;
            if (std::find(taps.begin(), taps.end(), mask) == taps.end()) taps.push_back(mask);
        }
        specs.emplace_back(memory, std::move(taps));
    }

    std::vector<ConvSearchRecord> records(trials);
    const unsigned nthreads = std::min<std::size_t>(resolve_workers(workers), trials);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= trials) return;
                records[i] = evaluate_conv_code(specs[i], k, horizon);
            }
        });
    }
    for (auto& th : pool) th.join();

    std::stable_sort(records.begin(), records.end(),
                     [](const ConvSearchRecord& a, const ConvSearchRecord& b) {
                         if (a.d_free != b.d_free) return a.d_free > b.d_free;
                         return a.initial_counts < b.initial_counts;
                     });
    return records;
}

} // namespace listcode
