#include "listcode/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <thread>
#include <unordered_set>

#include "listcode/listdec.hpp"

namespace listcode {

std::size_t WeightSpectrum::d_min() const {
    for (std::size_t d = 1; d < counts.size(); ++d)
        if (counts[d]) return d;
    return 0;
}

std::uint64_t WeightSpectrum::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

namespace {

unsigned resolve_workers(unsigned workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Gray walk over message indices [begin, end): message(i) = i ^ (i >> 1),
// consecutive messages differ in bit ctz(i+1), so each step is one
// row-XOR and a popcount.
template <int NW>
void gray_range_fixed(const std::uint64_t* rows, std::uint64_t begin, std::uint64_t end,
                      std::uint64_t seed_cw[], std::uint64_t* counts) {
    std::uint64_t cw[NW];
    for (int w = 0; w < NW; ++w) cw[w] = seed_cw[w];
    for (std::uint64_t i = begin; i < end; ++i) {
        unsigned wt = 0;
        for (int w = 0; w < NW; ++w) wt += std::popcount(cw[w]);
        ++counts[wt];
        if (i + 1 == end) break;
        const unsigned flip = std::countr_zero(i + 1);
        const std::uint64_t* row = rows + static_cast<std::size_t>(flip) * NW;
        for (int w = 0; w < NW; ++w) cw[w] ^= row[w];
    }
}

void gray_range_generic(const std::uint64_t* rows, std::size_t nw, std::uint64_t begin,
                        std::uint64_t end, std::uint64_t seed_cw[], std::uint64_t* counts) {
    std::vector<std::uint64_t> cw(seed_cw, seed_cw + nw);
    for (std::uint64_t i = begin; i < end; ++i) {
        unsigned wt = 0;
        for (std::size_t w = 0; w < nw; ++w) wt += std::popcount(cw[w]);
        ++counts[wt];
        if (i + 1 == end) break;
        const unsigned flip = std::countr_zero(i + 1);
        const std::uint64_t* row = rows + static_cast<std::size_t>(flip) * nw;
        for (std::size_t w = 0; w < nw; ++w) cw[w] ^= row[w];
    }
}

void gray_range(const std::uint64_t* rows, std::size_t nw, std::uint64_t begin, std::uint64_t end,
                std::uint64_t seed_cw[], std::uint64_t* counts) {
    switch (nw) {
        case 1: gray_range_fixed<1>(rows, begin, end, seed_cw, counts); break;
        case 2: gray_range_fixed<2>(rows, begin, end, seed_cw, counts); break;
        case 4: gray_range_fixed<4>(rows, begin, end, seed_cw, counts); break;
        case 8: gray_range_fixed<8>(rows, begin, end, seed_cw, counts); break;
        case 9: gray_range_fixed<9>(rows, begin, end, seed_cw, counts); break;
        default: gray_range_generic(rows, nw, begin, end, seed_cw, counts); break;
    }
}

} // namespace

WeightSpectrum full_spectrum_gray(const GeneratorMatrix& G, unsigned workers, bool force) {
    if (G.k > 34 && !force)
        throw guard_error("full_spectrum_gray: k > 34 needs the explicit override");
    if (G.k >= 63) throw parameter_error("full_spectrum_gray: k too large to index");

    const std::size_t nw = (G.n + 63) / 64;
    std::vector<std::uint64_t> rows(G.k * nw);
    for (std::size_t r = 0; r < G.k; ++r)
        std::copy(G.rows[r].words().begin(), G.rows[r].words().end(), rows.begin() + r * nw);

    const std::uint64_t total = std::uint64_t{1} << G.k;
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), total));

    auto seed_codeword = [&](std::uint64_t index) {
        // codeword of the Gray message at this walk position
        const std::uint64_t g = index ^ (index >> 1);
        std::vector<std::uint64_t> cw(nw, 0);
        for (std::size_t b = 0; b < G.k; ++b)
            if ((g >> b) & 1)
                for (std::size_t w = 0; w < nw; ++w) cw[w] ^= rows[b * nw + w];
        return cw;
    };

    std::vector<std::vector<std::uint64_t>> counts(nthreads,
                                                   std::vector<std::uint64_t>(G.n + 1, 0));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
        const std::uint64_t begin = t * chunk;
        const std::uint64_t end = (t + 1 == nthreads) ? total : begin + chunk;
        pool.emplace_back([&, t, begin, end] {
            auto cw = seed_codeword(begin);
            gray_range(rows.data(), nw, begin, end, cw.data(), counts[t].data());
        });
    }
    for (auto& th : pool) th.join();

    WeightSpectrum ws(G.n, G.k);
    for (const auto& c : counts)
        for (std::size_t d = 0; d <= G.n; ++d) ws.counts[d] += c[d];
    return ws;
}

// ---------------------------------------------------------------------------
// Bounded-weight tail-biting search.
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint16_t kInf = 0xffff;

// bound[t * S + s] = least output weight of any t-step path from state s
// that ends in the search's start state.
struct CloseBound {
    std::size_t S = 0;
    std::vector<std::uint16_t> table;  // [(t * S + s)] for one start state

    const std::uint16_t* stage(std::size_t t) const { return table.data() + t * S; }
};

CloseBound build_close_bound(const Trellis& tr, std::size_t k, unsigned start) {
    const std::size_t S = tr.num_states;
    const unsigned v = tr.memory;
    CloseBound b;
    b.S = S;
    b.table.assign((k + 1) * S, kInf);
    for (std::size_t s = 0; s < S; ++s) b.table[s] = (s == start) ? 0 : kInf;
    for (std::size_t t = 1; t <= k; ++t) {
        const std::uint16_t* prev = b.table.data() + (t - 1) * S;
        std::uint16_t* curt = b.table.data() + t * S;
        for (std::size_t s = 0; s < S; ++s) {
            std::uint16_t best = kInf;
            for (unsigned u = 0; u < 2; ++u) {
                const std::size_t r = (static_cast<std::size_t>(u) << v) | s;
                const unsigned ns = (u << (v - 1)) | (static_cast<unsigned>(s) >> 1);
                if (prev[ns] != kInf) {
                    const std::uint16_t cand =
                        static_cast<std::uint16_t>(prev[ns] + tr.branch_weight[r]);
                    best = std::min(best, cand);
                }
            }
            curt[s] = best;
        }
    }
    return b;
}

struct FoundWord {
    std::uint64_t msg;
    std::uint32_t weight;
};

void dfs_from_state(const Trellis& tr, std::size_t k, std::size_t cap, unsigned start,
                    const CloseBound& bound, std::vector<FoundWord>& out) {
    const unsigned v = tr.memory;

    struct Frame {
        unsigned state;
        std::uint32_t acc;
        std::uint64_t msg;
        std::size_t t;
        unsigned next_u;
    };
    std::vector<Frame> stack;
    stack.push_back({start, 0, 0, 0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.t == k) {
            out.push_back({f.msg, f.acc});
            stack.pop_back();
            continue;
        }
        if (f.next_u > 1) {
            stack.pop_back();
            continue;
        }
        const unsigned u = f.next_u++;
        const std::size_t r = (static_cast<std::size_t>(u) << v) | f.state;
        const std::uint32_t w2 = f.acc + tr.branch_weight[r];
        const unsigned ns = (u << (v - 1)) | (f.state >> 1);
        const std::uint16_t rest = bound.stage(k - f.t - 1)[ns];
        if (rest == kInf || w2 + rest > cap) continue;
        const std::uint64_t msg2 = f.msg | (static_cast<std::uint64_t>(u) << f.t);
        stack.push_back({ns, w2, msg2, f.t + 1, 0});
    }
}

} // namespace

TbSearchResult bounded_weight_tb_search(const ConvCodeSpec& spec, std::size_t k,
                                        std::size_t weight_cap, bool collect_words,
                                        unsigned workers) {
    if (k < spec.memory || k > 62)
        throw parameter_error("bounded_weight_tb_search: message length out of range");
    const Trellis tr = build_trellis(spec, k);
    const unsigned S = tr.num_states;
    const unsigned nthreads = std::min(resolve_workers(workers), S);

    std::vector<std::vector<FoundWord>> found(S);
    std::vector<std::thread> pool;
    std::atomic<unsigned> next_start{0};
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const unsigned start = next_start.fetch_add(1);
                if (start >= S) return;
                const CloseBound bound = build_close_bound(tr, k, start);
                dfs_from_state(tr, k, weight_cap, start, bound, found[start]);
            }
        });
    }
    for (auto& th : pool) th.join();

    // Merge in start-state order; duplicate codewords (possible only for a
    // non-injective encoder) are counted once.
    TbSearchResult res;
    res.spectrum = WeightSpectrum(k * spec.n_out, k);
    res.words.weight_bound = weight_cap;
    std::unordered_set<BitBlock, BitBlockHash> seen;
    for (unsigned start = 0; start < S; ++start) {
        for (const FoundWord& fw : found[start]) {
            BitBlock msg(k);
            for (std::size_t i = 0; i < k; ++i)
                if ((fw.msg >> i) & 1) msg.set(i, true);
            BitBlock cw = tb_encode(msg, spec);
            if (!seen.insert(cw).second) continue;
            res.spectrum.counts[fw.weight]++;
            if (collect_words)
                res.words.entries.push_back({std::move(cw), std::move(msg), fw.weight});
        }
    }
    return res;
}

CodewordSet polar_low_weight_probe(const PolarCodeSpec& spec, unsigned L, double llr_magnitude) {
    if (!is_power_of_two(L)) throw parameter_error("polar_low_weight_probe: L must be a power of two");
    std::vector<double> llrs(spec.N, llr_magnitude);
    SclDecoder dec(spec);
    RankedList list = dec.decode(llrs, L);

    CodewordSet set;
    std::unordered_set<BitBlock, BitBlockHash> seen;
    for (const auto& e : list.entries) {
        BitBlock cw = polar_encode(e.data_bits, spec);
        const std::size_t w = cw.weight();
        if (w == 0) continue;
        if (!seen.insert(cw).second) continue;
        set.weight_bound = std::max(set.weight_bound, w);
        set.entries.push_back({std::move(cw), e.data_bits, w});
    }
    std::sort(set.entries.begin(), set.entries.end(),
              [](const CodewordSet::Entry& a, const CodewordSet::Entry& b) {
                  if (a.weight != b.weight) return a.weight < b.weight;
                  return a.data.to_hex() < b.data.to_hex();
              });
    return set;
}

std::vector<std::uint64_t> cumulative_spectrum(const WeightSpectrum& ws) {
    std::vector<std::uint64_t> cum(ws.counts.size(), 0);
    std::uint64_t run = 0;
    for (std::size_t d = 0; d < ws.counts.size(); ++d) {
        run += ws.counts[d];
        cum[d] = run;
    }
    return cum;
}

void write_spectrum_csv(const WeightSpectrum& ws, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open for writing: " + path.string());
    out << "d,A\n";
    for (std::size_t d = 0; d < ws.counts.size(); ++d)
        if (ws.counts[d]) out << d << "," << ws.counts[d] << "\n";
}

WeightSpectrum read_spectrum_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open spectrum file: " + path.string());
    std::string header;
    std::getline(in, header);
    if (header != "d,A") throw parse_error("spectrum CSV must start with 'd,A'");
    std::vector<std::pair<std::size_t, std::uint64_t>> rows;
    std::size_t max_d = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw parse_error("bad spectrum CSV row: " + line);
        const std::size_t d = std::stoull(line.substr(0, comma));
        const std::uint64_t a = std::stoull(line.substr(comma + 1));
        rows.emplace_back(d, a);
        max_d = std::max(max_d, d);
    }
    WeightSpectrum ws(max_d, 0);
    for (auto [d, a] : rows) ws.counts[d] = a;
    return ws;
}

void write_codeword_set(const CodewordSet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open for writing: " + path.string());
    for (const auto& e : set.entries) out << e.codeword.to_hex() << " " << e.weight << "\n";
}

} // namespace listcode
