#include "listcode/listdec.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstring>
#include <limits>

namespace listcode {

bool is_power_of_two(unsigned x) { return x != 0 && std::has_single_bit(x); }

DecodeOutcome crc_select(const RankedList& list, const CrcPoly& g, bool tb_required) {
    DecodeOutcome out;
    out.final_L = list.L_used;
    for (const auto& e : list.entries) {
        if (tb_required && !e.tail_biting()) continue;
        if (!crc_check(e.data_bits, g)) continue;
        out.kind = OutcomeKind::undetected;  // finalized by classify_outcome
        out.selected = e.data_bits;
        out.rank_selected = e.rank;
        return out;
    }
    out.kind = OutcomeKind::erasure;
    return out;
}

// ---------------------------------------------------------------------------
// Successive cancellation list decoding.
//
// Per-path storage, levels 1..s (level 0 is the shared channel LLR array):
//   P[l]     llr array of the active node at level l, length N >> l
//   C[l][r]  hard decisions of the level-l node with index parity r
// Leaf phi recomputes level s-ctz(phi) via the g update and deeper levels
// via the f update; completed odd nodes fold their decisions upward.
// ---------------------------------------------------------------------------

struct SclDecoder::Impl {
    PolarCodeSpec spec;
    unsigned s;
    std::size_t N;

    std::size_t llr_off[32] = {};  // offset of P[l] within a path's llr block
    std::size_t bit_off[32] = {};  // offset of C[l][0]; C[l][1] follows
    std::size_t llr_stride = 0;
    std::size_t bit_stride = 0;

    unsigned cap = 0;  // allocated path slots
    std::vector<double> llr_mem;
    std::vector<std::uint8_t> bit_mem;
    std::vector<std::uint8_t> data_mem;  // K data bits per slot
    std::vector<double> metric;          // path penalty, lower = better


    std::vector<unsigned> active;      // slots in running order
    std::vector<unsigned> free_slots;

    struct Cand {
        double cost;
        std::uint32_t index;  // 2*position + bit
    };
    std::vector<Cand> cands;
    std::vector<unsigned> new_active;
    std::vector<std::uint8_t> bit_of;
    std::vector<signed char> used;

    explicit Impl(const PolarCodeSpec& sp) : spec(sp) {
        N = spec.N;
        s = spec.stages();
        std::size_t loff = 0, boff = 0;
        for (unsigned l = 1; l <= s; ++l) {
            llr_off[l] = loff;
            bit_off[l] = boff;
            loff += N >> l;
            boff += 2 * (N >> l);
        }
        llr_stride = loff;
        bit_stride = boff;
    }

    double* P(unsigned slot, unsigned l) { return llr_mem.data() + slot * llr_stride + llr_off[l]; }
    std::uint8_t* C(unsigned slot, unsigned l, unsigned row) {
        return bit_mem.data() + slot * bit_stride + bit_off[l] + row * (N >> l);
    }
    std::uint8_t* data(unsigned slot) { return data_mem.data() + slot * spec.K; }

    void ensure_capacity(unsigned L) {
        if (L <= cap) return;
        llr_mem.resize(static_cast<std::size_t>(L) * llr_stride);
        bit_mem.resize(static_cast<std::size_t>(L) * bit_stride);
        data_mem.resize(static_cast<std::size_t>(L) * std::max<std::size_t>(spec.K, 1));
        metric.resize(L);
        cap = L;
    }

    static double f_minsum(double a, double b) {
        const double m = std::min(std::fabs(a), std::fabs(b));
        return ((a < 0) != (b < 0)) ? -m : m;
    }

    double leaf_llr(unsigned slot, std::span<const double> chan_llrs) {
        return s == 0 ? chan_llrs[0] : P(slot, s)[0];
    }

    void compute_llrs(unsigned slot, std::size_t phi, std::span<const double> chan_llrs) {
        unsigned l_start;
        if (phi == 0) {
            l_start = 1;
        } else {
            const unsigned z = static_cast<unsigned>(std::countr_zero(phi));
            const unsigned l0 = s - z;
            // g update at level l0
            const std::size_t M = N >> l0;
            const double* par = (l0 == 1) ? chan_llrs.data() : P(slot, l0 - 1);
            const std::uint8_t* left = C(slot, l0, 0);
            double* dst = P(slot, l0);
            for (std::size_t i = 0; i < M; ++i)
                dst[i] = left[i] ? par[i + M] - par[i] : par[i + M] + par[i];
            l_start = l0 + 1;
        }
        for (unsigned l = l_start; l <= s; ++l) {
            const std::size_t M = N >> l;
            const double* par = (l == 1) ? chan_llrs.data() : P(slot, l - 1);
            double* dst = P(slot, l);
            for (std::size_t i = 0; i < M; ++i)
                dst[i] = f_minsum(par[i], par[i + M]);
        }
    }

    void store_decision(unsigned slot, std::size_t phi, std::uint8_t u) {
        C(slot, s, phi & 1)[0] = u;
        std::size_t idx = phi;
        unsigned l = s;
        while ((idx & 1) && l > 1) {
            const std::size_t M = N >> l;
            const std::uint8_t* c0 = C(slot, l, 0);
            const std::uint8_t* c1 = C(slot, l, 1);
            std::uint8_t* up = C(slot, l - 1, (idx >> 1) & 1);
            for (std::size_t i = 0; i < M; ++i) {
                up[i] = c0[i] ^ c1[i];
                up[i + M] = c1[i];
            }
            idx >>= 1;
            --l;
        }
    }

    void clone_path(unsigned from, unsigned to) {
        if (s > 0) {
            std::memcpy(P(to, 1), P(from, 1), llr_stride * sizeof(double));
            std::memcpy(C(to, 1, 0), C(from, 1, 0), bit_stride);
        }
        std::memcpy(data(to), data(from), spec.K);
        metric[to] = metric[from];
    }

    RankedList decode(std::span<const double> llrs, unsigned L) {
        if (!is_power_of_two(L)) throw parameter_error("scl_decode: L must be a power of two");
        if (llrs.size() != N) throw dimension_error("scl_decode: LLR length != N");
        ensure_capacity(2 * L);

        active.clear();
        free_slots.clear();
        for (unsigned i = 2 * L; i-- > 1;) free_slots.push_back(i);
        active.push_back(0);
        metric[0] = 0.0;

        std::size_t data_count = 0;
        for (std::size_t phi = 0; phi < N; ++phi) {
            if (s > 0)
                for (unsigned slot : active) compute_llrs(slot, phi, llrs);

            if (spec.frozen_mask[phi]) {
                for (unsigned slot : active) {
                    const double llr = leaf_llr(slot, llrs);
                    if (llr < 0) metric[slot] -= llr;
                    if (s > 0) store_decision(slot, phi, 0);
                }
            } else {
                cands.clear();
                for (std::uint32_t pos = 0; pos < active.size(); ++pos) {
                    const double llr = leaf_llr(active[pos], llrs);
                    const double pm = metric[active[pos]];
                    cands.push_back({pm + (llr < 0 ? -llr : 0.0), 2 * pos});
                    cands.push_back({pm + (llr > 0 ? llr : 0.0), 2 * pos + 1});
                }
                auto better = [](const Cand& a, const Cand& b) {
                    return a.cost < b.cost || (a.cost == b.cost && a.index < b.index);
                };
                if (cands.size() > L) {
                    std::nth_element(cands.begin(), cands.begin() + L, cands.end(), better);
                    cands.resize(L);
                }
                std::sort(cands.begin(), cands.end(), better);

                // First selected child of a parent inherits the slot, the
                // second gets a copy.  All copies happen before any
                // decision is applied.
                new_active.clear();
                bit_of.resize(cands.size());
                used.assign(active.size(), -1);
                for (std::size_t c = 0; c < cands.size(); ++c) {
                    const std::uint32_t pos = cands[c].index >> 1;
                    bit_of[c] = cands[c].index & 1;
                    unsigned slot;
                    if (used[pos] < 0) {
                        slot = active[pos];
                        used[pos] = 1;
                    } else {
                        slot = free_slots.back();
                        free_slots.pop_back();
                        clone_path(active[pos], slot);
                    }
                    new_active.push_back(slot);
                    metric[slot] = cands[c].cost;  // safe: cost already captured
                }
                for (std::uint32_t pos = 0; pos < active.size(); ++pos)
                    if (used[pos] < 0) free_slots.push_back(active[pos]);

                for (std::size_t c = 0; c < cands.size(); ++c) {
                    const unsigned slot = new_active[c];
                    if (s > 0) store_decision(slot, phi, bit_of[c]);
                    data(slot)[data_count] = bit_of[c];
                }
                active.swap(new_active);
                ++data_count;
            }
        }
        assert(data_count == spec.K);

        std::vector<std::uint32_t> order(active.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return metric[active[a]] < metric[active[b]];
        });

        RankedList list;
        list.L_used = L;
        list.entries.reserve(order.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) {
            const unsigned slot = active[order[i]];
            CandidatePath p;
            p.data_bits = BitBlock(spec.K);
            for (std::size_t j = 0; j < spec.K; ++j)
                if (data(slot)[j]) p.data_bits.set(j, true);
            p.metric = -metric[slot];
            p.rank = static_cast<int>(i) + 1;
            list.entries.push_back(std::move(p));
        }
        return list;
    }
};

SclDecoder::SclDecoder(const PolarCodeSpec& spec) : impl_(std::make_unique<Impl>(spec)) {}
SclDecoder::~SclDecoder() = default;
SclDecoder::SclDecoder(SclDecoder&&) noexcept = default;
SclDecoder& SclDecoder::operator=(SclDecoder&&) noexcept = default;

RankedList SclDecoder::decode(std::span<const double> llrs, unsigned L) {
    return impl_->decode(llrs, L);
}

const PolarCodeSpec& SclDecoder::spec() const { return impl_->spec; }

// ---------------------------------------------------------------------------
// Wrap-around initialization and parallel list Viterbi.
// ---------------------------------------------------------------------------

namespace {

// Correlation metrics of every branch at every stage, bm[t][(u << v) | s],
// via sum tables over 6-bit output chunks.  The wrap-around initialization
// pass folds into the same stage sweep when `wava` is given: one plain
// Viterbi update per stage starting from all-equal metrics, the result
// normalized so its maximum is exactly 0.
void branch_metrics_into(const Trellis& tr, std::span<const double> llrs,
                         std::vector<double>& bm, std::vector<double>* wava) {
    const unsigned S = tr.num_states;
    const unsigned v = tr.memory;
    const unsigned half = S >> 1;
    const std::size_t branches = std::size_t{2} << v;
    const unsigned chunks = (tr.n_out + 5) / 6;
    bm.resize(tr.num_stages * branches);
    std::vector<double> table(chunks * 64);
    std::vector<double> nxt;
    if (wava) {
        wava->assign(S, 0.0);
        nxt.resize(S);
    }
    for (std::size_t t = 0; t < tr.num_stages; ++t) {
        const double* l = llrs.data() + t * tr.n_out;
        double base = 0;
        for (unsigned j = 0; j < tr.n_out; ++j) base += l[j];
        for (unsigned c = 0; c < chunks; ++c) {
            double* tab = table.data() + c * 64;
            const unsigned lo = 6 * c;
            const unsigned width = std::min(6u, tr.n_out - lo);
            tab[0] = 0;
            for (unsigned h = 1; h < (1u << width); ++h)
                tab[h] = tab[h & (h - 1)] + l[lo + std::countr_zero(h)];
        }
        double* out = bm.data() + t * branches;
        for (std::size_t r = 0; r < branches; ++r) {
            std::uint32_t bits = tr.branch_out[r];
            double ones = 0;
            for (unsigned c = 0; c < chunks; ++c) ones += table[c * 64 + ((bits >> (6 * c)) & 63)];
            out[r] = base - 2 * ones;
        }
        if (wava) {
            double* curw = wava->data();
            for (unsigned ns = 0; ns < S; ++ns) {
                const unsigned u = ns >> (v - 1);
                const unsigned ps0 = (ns & (half - 1)) << 1;
                const double m0 = curw[ps0] + out[(u << v) | ps0];
                const double m1 = curw[ps0 | 1] + out[(u << v) | ps0 | 1];
                nxt[ns] = std::max(m0, m1);
            }
            wava->swap(nxt);
        }
    }
    if (wava) {
        const double top = *std::max_element(wava->begin(), wava->end());
        for (double& m : *wava) m -= top;
    }
}

std::vector<double> all_branch_metrics(const Trellis& tr, std::span<const double> llrs) {
    std::vector<double> bm;
    branch_metrics_into(tr, llrs, bm, nullptr);
    return bm;
}

} // namespace

std::vector<double> wava_init_metrics(std::span<const double> llrs, const Trellis& trellis) {
    if (llrs.size() != trellis.num_stages * trellis.n_out)
        throw dimension_error("wava_init_metrics: LLR length != n_out * num_stages");
    std::vector<double> bm, out;
    branch_metrics_into(trellis, llrs, bm, &out);
    return out;
}

struct LvaDecoder::Impl {
    Trellis tr;
    unsigned cap = 0;  // allocated list size

    // metrics[state * cap + rank], valid ranks per state in counts[]
    std::vector<double> cur, nxt;
    std::vector<std::uint16_t> cnt_cur, cnt_nxt;
    // traceback[t][state][rank] packed as (prev_rank << 1) | branch_bit
    std::vector<std::uint32_t> back;

    // adaptive-path scratch, reused across decodes
    std::vector<double> bm_buf, wava_buf;
    struct Key {
        double metric;
        std::uint16_t rank;
        std::uint16_t end;
    };
    std::vector<Key> keys_buf;

    explicit Impl(const Trellis& trellis) : tr(trellis) {}

    void ensure_capacity(unsigned L) {
        if (L <= cap) return;
        const unsigned S = tr.num_states;
        cur.resize(static_cast<std::size_t>(S) * L);
        nxt.resize(static_cast<std::size_t>(S) * L);
        cnt_cur.assign(S, 0);
        cnt_nxt.assign(S, 0);
        back.resize(tr.num_stages * static_cast<std::size_t>(S) * L);
        cap = L;
    }

    std::uint32_t* back_at(std::size_t t, unsigned state) {
        return back.data() + (t * tr.num_states + state) * cap;
    }

    void run_forward(std::span<const double> bm_all, unsigned L,
                     std::span<const double> init_metrics) {
        const unsigned S = tr.num_states;
        const unsigned v = tr.memory;
        if (!init_metrics.empty() && init_metrics.size() != S)
            throw dimension_error("lva_decode: init metric count != num_states");
        ensure_capacity(L);

        for (unsigned s2 = 0; s2 < S; ++s2) {
            cur[static_cast<std::size_t>(s2) * cap] = init_metrics.empty() ? 0.0 : init_metrics[s2];
            cnt_cur[s2] = 1;
        }

        const unsigned half = S >> 1;
        const std::size_t branches = std::size_t{2} << v;

        if (L == 1) {  // plain Viterbi pass, the common adaptive first round
            for (std::size_t t = 0; t < tr.num_stages; ++t) {
                const double* bm = bm_all.data() + t * branches;
                std::uint32_t* bk = back.data() + t * S * cap;
                for (unsigned ns = 0; ns < S; ++ns) {
                    const unsigned u = ns >> (v - 1);
                    const unsigned ps0 = (ns & (half - 1)) << 1;
                    const double m0 = cur[static_cast<std::size_t>(ps0) * cap] + bm[(u << v) | ps0];
                    const double m1 =
                        cur[(static_cast<std::size_t>(ps0) | 1) * cap] + bm[(u << v) | ps0 | 1];
                    const bool take1 = m1 > m0;
                    nxt[static_cast<std::size_t>(ns) * cap] = take1 ? m1 : m0;
                    bk[static_cast<std::size_t>(ns) * cap] = take1 ? 1u : 0u;
                }
                cur.swap(nxt);
            }
            return;
        }

        for (std::size_t t = 0; t < tr.num_stages; ++t) {
            const double* bm = bm_all.data() + t * branches;
            for (unsigned ns = 0; ns < S; ++ns) {
                const unsigned u = ns >> (v - 1);
                const unsigned ps[2] = {(ns & (half - 1)) << 1, ((ns & (half - 1)) << 1) | 1u};
                const double badd[2] = {bm[(u << v) | ps[0]], bm[(u << v) | ps[1]]};
                const double* src[2] = {cur.data() + static_cast<std::size_t>(ps[0]) * cap,
                                        cur.data() + static_cast<std::size_t>(ps[1]) * cap};
                const unsigned n0 = cnt_cur[ps[0]], n1 = cnt_cur[ps[1]];
                double* dst = nxt.data() + static_cast<std::size_t>(ns) * cap;
                std::uint32_t* bk = back_at(t, ns);

                // two-way merge of the rank-ordered predecessor lists;
                // ties prefer the lower rank, then branch bit 0
                unsigned i0 = 0, i1 = 0, o = 0;
                while (o < L && (i0 < n0 || i1 < n1)) {
                    bool take1;
                    if (i0 >= n0) take1 = true;
                    else if (i1 >= n1) take1 = false;
                    else {
                        const double m0 = src[0][i0] + badd[0];
                        const double m1 = src[1][i1] + badd[1];
                        take1 = m1 > m0 || (m1 == m0 && i1 < i0);
                    }
                    if (take1) {
                        dst[o] = src[1][i1] + badd[1];
                        bk[o] = (static_cast<std::uint32_t>(i1) << 1) | 1u;
                        ++i1;
                    } else {
                        dst[o] = src[0][i0] + badd[0];
                        bk[o] = static_cast<std::uint32_t>(i0) << 1;
                        ++i0;
                    }
                    ++o;
                }
                cnt_nxt[ns] = static_cast<std::uint16_t>(o);
            }
            cur.swap(nxt);
            cnt_cur.swap(cnt_nxt);
        }
    }

    // data bits and start state of one survivor (end state, per-state rank)
    CandidatePath traceback(unsigned end, unsigned rk) const {
        const unsigned v = tr.memory;
        const unsigned half = tr.num_states >> 1;
        const std::size_t T = tr.num_stages;
        CandidatePath p;
        p.metric = cur[static_cast<std::size_t>(end) * cap + rk];
        p.end_state = end;
        p.data_bits = BitBlock(T);
        unsigned st = end, r = rk;
        for (std::size_t t = T; t-- > 0;) {
            p.data_bits.set(t, st >> (v - 1));
            const std::uint32_t b =
                back.data()[(t * tr.num_states + st) * cap + r];
            st = ((st & (half - 1)) << 1) | (b & 1u);
            r = b >> 1;
        }
        p.start_state = st;
        return p;
    }

    // merged candidate order: metric desc, per-state rank asc, end state asc
    void merged_order(std::vector<Key>& keys) const {
        keys.clear();
        for (unsigned end = 0; end < tr.num_states; ++end)
            for (unsigned rk = 0; rk < cnt_cur[end]; ++rk)
                keys.push_back({cur[static_cast<std::size_t>(end) * cap + rk],
                                static_cast<std::uint16_t>(rk), static_cast<std::uint16_t>(end)});
        std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
            if (a.metric != b.metric) return a.metric > b.metric;
            if (a.rank != b.rank) return a.rank < b.rank;
            return a.end < b.end;
        });
    }

    RankedList build_list(unsigned L) {
        RankedList list;
        list.L_used = L;
        std::vector<Key>& keys = keys_buf;
        merged_order(keys);
        list.entries.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            CandidatePath p = traceback(keys[i].end, keys[i].rank);
            p.rank = static_cast<int>(i) + 1;
            list.entries.push_back(std::move(p));
        }
        return list;
    }

    RankedList decode(std::span<const double> llrs, unsigned L,
                      std::span<const double> init_metrics) {
        if (L < 1) throw parameter_error("lva_decode: L must be >= 1");
        if (llrs.size() != tr.num_stages * tr.n_out)
            throw dimension_error("lva_decode: LLR length != n_out * num_stages");
        run_forward(all_branch_metrics(tr, llrs), L, init_metrics);
        return build_list(L);
    }

    // Equivalent to crc_select(build_list(L), g, tb_required) but traces
    // candidates back only until the first one passes.  `final` reports the
    // certification bound: no state hides a path that could outrank the
    // selection at a larger L.
    DecodeOutcome select_lazy(unsigned L, const CrcPoly& g, bool tb_required, bool& final) {
        DecodeOutcome out;
        out.final_L = L;
        std::vector<Key>& keys = keys_buf;
        merged_order(keys);

        double hidden_bound = -std::numeric_limits<double>::infinity();
        bool any_full = false;
        for (unsigned end = 0; end < tr.num_states; ++end) {
            if (cnt_cur[end] == L) {
                any_full = true;
                hidden_bound = std::max(hidden_bound,
                                        cur[static_cast<std::size_t>(end) * cap + (L - 1)]);
            }
        }

        for (std::size_t i = 0; i < keys.size(); ++i) {
            CandidatePath p = traceback(keys[i].end, keys[i].rank);
            if (tb_required && !p.tail_biting()) continue;
            if (!crc_check(p.data_bits, g)) continue;
            out.kind = OutcomeKind::undetected;  // finalized by classify_outcome
            out.rank_selected = static_cast<int>(i) + 1;
            out.selected = std::move(p.data_bits);
            final = !any_full || keys[i].metric >= hidden_bound;
            return out;
        }
        out.kind = OutcomeKind::erasure;
        final = false;
        return out;
    }
};

LvaDecoder::LvaDecoder(const Trellis& trellis) : impl_(std::make_unique<Impl>(trellis)) {}
LvaDecoder::~LvaDecoder() = default;
LvaDecoder::LvaDecoder(LvaDecoder&&) noexcept = default;
LvaDecoder& LvaDecoder::operator=(LvaDecoder&&) noexcept = default;

RankedList LvaDecoder::decode(std::span<const double> llrs, unsigned L,
                              std::span<const double> init_metrics) {
    return impl_->decode(llrs, L, init_metrics);
}

DecodeOutcome LvaDecoder::adaptive(std::span<const double> llrs, const ListConfig& cfg,
                                   const CrcPoly& g) {
    if (!is_power_of_two(cfg.L_min) || !is_power_of_two(cfg.L_max) || cfg.L_min > cfg.L_max)
        throw parameter_error("adaptive: L_min/L_max must be powers of two, L_min <= L_max");
    if (llrs.size() != impl_->tr.num_stages * impl_->tr.n_out)
        throw dimension_error("adaptive: LLR length != n_out * num_stages");

    branch_metrics_into(impl_->tr, llrs, impl_->bm_buf, &impl_->wava_buf);

    DecodeOutcome out;
    for (unsigned L = cfg.L_min;; L <<= 1) {
        impl_->run_forward(impl_->bm_buf, L, impl_->wava_buf);
        bool final = false;
        out = impl_->select_lazy(L, g, true, final);
        if (L >= cfg.L_max) return out;
        if (out.kind != OutcomeKind::erasure && final) return out;
    }
}

const Trellis& LvaDecoder::trellis() const { return impl_->tr; }

// ---------------------------------------------------------------------------
// Adaptive doubling wrapper.
// ---------------------------------------------------------------------------

struct AdaptiveDecoder::Impl {
    CodeSystem system;
    std::optional<SclDecoder> scl;
    std::optional<LvaDecoder> lva;
    std::vector<double> depunctured;

    explicit Impl(const CodeSystem& sys) : system(sys) {
        if (system.kind == InnerCode::polar) {
            scl.emplace(system.polar);
        } else {
            lva.emplace(build_trellis(system.conv, system.data_length()));
        }
    }

    DecodeOutcome decode(std::span<const double> llrs, const ListConfig& cfg) {
        if (!is_power_of_two(cfg.L_min) || !is_power_of_two(cfg.L_max) || cfg.L_min > cfg.L_max)
            throw parameter_error("adaptive_decode: L_min/L_max must be powers of two, L_min <= L_max");
        if (llrs.size() != system.block_length())
            throw dimension_error("adaptive_decode: LLR length != block length");

        if (system.kind == InnerCode::polar) {
            DecodeOutcome out;
            for (unsigned L = cfg.L_min;; L <<= 1) {
                out = crc_select(scl->decode(llrs, L), system.crc, false);
                out.final_L = L;
                if (out.kind != OutcomeKind::erasure || L >= cfg.L_max) return out;
            }
        }

        std::span<const double> inner = llrs;
        if (system.puncture.pre_length > 0) {
            depunctured = depuncture_llr(llrs, system.puncture);
            inner = depunctured;
        }
        return lva->adaptive(inner, cfg, system.crc);
    }
};

AdaptiveDecoder::AdaptiveDecoder(const CodeSystem& system)
    : impl_(std::make_unique<Impl>(system)) {}
AdaptiveDecoder::~AdaptiveDecoder() = default;
AdaptiveDecoder::AdaptiveDecoder(AdaptiveDecoder&&) noexcept = default;
AdaptiveDecoder& AdaptiveDecoder::operator=(AdaptiveDecoder&&) noexcept = default;

DecodeOutcome AdaptiveDecoder::decode(std::span<const double> llrs, const ListConfig& cfg) {
    return impl_->decode(llrs, cfg);
}

const CodeSystem& AdaptiveDecoder::system() const { return impl_->system; }

DecodeOutcome adaptive_decode(std::span<const double> llrs, const CodeSystem& system,
                              const ListConfig& cfg) {
    AdaptiveDecoder dec(system);
    return dec.decode(llrs, cfg);
}

} // namespace listcode
