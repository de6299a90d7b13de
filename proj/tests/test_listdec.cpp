#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "listcode/listdec.hpp"
#include "listcode/simulation.hpp"

using namespace listcode;

namespace {

double correlation(const BitBlock& cw, std::span<const double> llrs) {
    double m = 0;
    for (std::size_t i = 0; i < cw.size(); ++i) m += (cw.get(i) ? -1.0 : 1.0) * llrs[i];
    return m;
}

// Ranks must agree with the oracle ordering up to permutations within
// groups of equal metric.
template <typename Metric>
void check_rank_groups(const std::vector<std::pair<double, BitBlock>>& oracle,
                       const std::vector<CandidatePath>& got, Metric metric_of) {
    REQUIRE(oracle.size() == got.size());
    std::size_t i = 0;
    while (i < oracle.size()) {
        std::size_t j = i;
        while (j < oracle.size() && std::abs(oracle[j].first - oracle[i].first) < 1e-9) ++j;
        std::vector<std::string> a, b;
        for (std::size_t t = i; t < j; ++t) {
            a.push_back(oracle[t].second.to_string());
            b.push_back(got[t].data_bits.to_string());
            CHECK(std::abs(metric_of(got[t]) - oracle[i].first) < 1e-6);
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        i = j;
    }
}

} // namespace

TEST_CASE("scl noiseless decode recovers the data word") {
    PolarCodeSpec spec = construct_frozen_set(reliability_sequence_5g(), 16, 5);
    std::mt19937_64 rng(21);
    SclDecoder dec(spec);
    for (int t = 0; t < 50; ++t) {
        BitBlock data(5);
        for (int i = 0; i < 5; ++i) data.set(i, rng() & 1);
        BitBlock cw = polar_encode(data, spec);
        std::vector<double> llrs(16);
        for (int i = 0; i < 16; ++i) llrs[i] = cw.get(i) ? -4.0 : 4.0;
        RankedList list = dec.decode(llrs, 1);
        REQUIRE(list.entries.size() == 1);
        CHECK(list.entries[0].data_bits == data);
    }
}

TEST_CASE("scl full list equals exhaustive ML ordering (N=8, K=3, L=8)") {
    PolarCodeSpec spec = construct_frozen_set(reliability_sequence_5g(), 8, 3);
    SclDecoder dec(spec);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> noise(0.0, 1.0);

    for (int trial = 0; trial < 400; ++trial) {
        std::vector<double> llrs(8);
        for (auto& l : llrs) l = 1.0 + 1.5 * noise(rng);

        double abs_sum = 0;
        for (double l : llrs) abs_sum += std::abs(l);

        std::vector<std::pair<double, BitBlock>> oracle;
        for (unsigned m = 0; m < 8; ++m) {
            BitBlock data(3);
            for (int i = 0; i < 3; ++i) data.set(i, (m >> i) & 1);
            oracle.emplace_back(correlation(polar_encode(data, spec), llrs), data);
        }
        std::stable_sort(oracle.begin(), oracle.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        RankedList list = dec.decode(llrs, 8);
        REQUIRE(list.entries.size() == 8);
        // min-sum path metric of a complete path is exactly the correlation
        // discrepancy: corr = sum|llr| + 2 * metric
        check_rank_groups(oracle, list.entries, [&](const CandidatePath& p) {
            return abs_sum + 2.0 * p.metric;
        });
    }
}

TEST_CASE("scl handles degenerate all-zero LLRs deterministically") {
    PolarCodeSpec spec = construct_frozen_set(reliability_sequence_5g(), 16, 6);
    SclDecoder dec(spec);
    std::vector<double> llrs(16, 0.0);
    RankedList a = dec.decode(llrs, 16);
    RankedList b = dec.decode(llrs, 16);
    REQUIRE(a.entries.size() == 16);
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].data_bits == b.entries[i].data_bits);
        CHECK(a.entries[i].metric == b.entries[i].metric);
    }
}

TEST_CASE("scl metric is non-increasing with rank and lists differ by L") {
    PolarCodeSpec spec = construct_frozen_set(reliability_sequence_5g(), 32, 12);
    SclDecoder dec(spec);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> llrs(32);
        for (auto& l : llrs) l = 0.7 + noise(rng);
        for (unsigned L : {2u, 8u, 32u}) {
            RankedList list = dec.decode(llrs, L);
            CHECK(list.entries.size() <= L);
            for (std::size_t i = 1; i < list.entries.size(); ++i)
                CHECK(list.entries[i - 1].metric >= list.entries[i].metric);
        }
    }
}

TEST_CASE("wava metrics") {
    ConvCodeSpec spec = ConvCodeSpec::from_octal(2, {"7", "5"});
    Trellis tr = build_trellis(spec, 8);

    SUBCASE("all-zero LLRs give all-zero metrics") {
        std::vector<double> llrs(16, 0.0);
        auto m = wava_init_metrics(llrs, tr);
        for (double x : m) CHECK(x == 0.0);
    }
    SUBCASE("noiseless codeword puts its start state at the top") {
        std::mt19937_64 rng(13);
        for (int t = 0; t < 50; ++t) {
            BitBlock msg(8);
            for (int i = 0; i < 8; ++i) msg.set(i, rng() & 1);
            BitBlock cw = tb_encode(msg, spec);
            std::vector<double> llrs(cw.size());
            for (std::size_t i = 0; i < cw.size(); ++i) llrs[i] = cw.get(i) ? -3.0 : 3.0;
            auto m = wava_init_metrics(llrs, tr);
            unsigned start = (static_cast<unsigned>(msg.get(7)) << 1) | msg.get(6);
            CHECK(m[start] == 0.0);  // max is normalized to exactly 0
            double top = *std::max_element(m.begin(), m.end());
            CHECK(top == 0.0);
        }
    }
}

TEST_CASE("lva noiseless decode, L=1, uniform init") {
    ConvCodeSpec spec = ConvCodeSpec::from_octal(2, {"7", "5"});
    Trellis tr = build_trellis(spec, 9);
    LvaDecoder dec(tr);
    std::mt19937_64 rng(29);
    for (int t = 0; t < 50; ++t) {
        BitBlock msg(9);
        for (int i = 0; i < 9; ++i) msg.set(i, rng() & 1);
        BitBlock cw = tb_encode(msg, spec);
        std::vector<double> llrs(cw.size());
        for (std::size_t i = 0; i < cw.size(); ++i) llrs[i] = cw.get(i) ? -2.0 : 2.0;
        RankedList list = dec.decode(llrs, 1);
        REQUIRE(!list.entries.empty());
        const CandidatePath& topc = list.entries.front();
        CHECK(topc.tail_biting());
        CHECK(topc.data_bits == msg);
    }
}

TEST_CASE("lva tail-biting ranking equals exhaustive ML (v=2, k=6, L=64)") {
    ConvCodeSpec spec = ConvCodeSpec::from_octal(2, {"7", "5"});
    Trellis tr = build_trellis(spec, 6);
    LvaDecoder dec(tr);
    std::mt19937_64 rng(101);
    std::normal_distribution<double> noise(0.0, 1.0);

    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> llrs(12);
        for (auto& l : llrs) l = 0.8 + 1.2 * noise(rng);

        std::vector<std::pair<double, BitBlock>> oracle;
        for (unsigned m = 0; m < 64; ++m) {
            BitBlock msg(6);
            for (int i = 0; i < 6; ++i) msg.set(i, (m >> i) & 1);
            oracle.emplace_back(correlation(tb_encode(msg, spec), llrs), msg);
        }
        std::stable_sort(oracle.begin(), oracle.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        RankedList list = dec.decode(llrs, 64);
        std::vector<CandidatePath> tb;
        for (const auto& e : list.entries)
            if (e.tail_biting()) tb.push_back(e);
        check_rank_groups(oracle, tb, [](const CandidatePath& p) { return p.metric; });
    }
}

TEST_CASE("lva per-end-state nesting: survivors at L are a prefix at 2L") {
    ConvCodeSpec spec = ConvCodeSpec::from_octal(3, {"13", "17"});
    Trellis tr = build_trellis(spec, 10);
    LvaDecoder dec(tr);
    std::mt19937_64 rng(303);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> llrs(20);
        for (auto& l : llrs) l = 0.5 + noise(rng);
        for (unsigned L : {1u, 2u, 4u, 8u}) {
            RankedList small = dec.decode(llrs, L);
            RankedList big = dec.decode(llrs, 2 * L);
            for (unsigned state = 0; state < tr.num_states; ++state) {
                std::vector<const CandidatePath*> s1, s2;
                for (const auto& e : small.entries)
                    if (e.end_state == state) s1.push_back(&e);
                for (const auto& e : big.entries)
                    if (e.end_state == state) s2.push_back(&e);
                REQUIRE(s1.size() <= s2.size());
                for (std::size_t i = 0; i < s1.size(); ++i) {
                    CHECK(s1[i]->data_bits == s2[i]->data_bits);
                    CHECK(s1[i]->metric == doctest::Approx(s2[i]->metric));
                }
            }
        }
    }
}

TEST_CASE("crc_select behavior on constructed lists") {
    CrcPoly g = parse_hex_poly("0xB", 3);  // x^3+x+1
    auto passing = [&](int fill) {
        BitBlock msg(5);
        for (int i = 0; i < 5; ++i) msg.set(i, (fill >> i) & 1);
        return crc_append(msg, g);
    };
    auto failing = [&](int fill) {
        BitBlock d = passing(fill);
        d.flip(0);
        return d;
    };

    RankedList list;
    list.L_used = 4;
    auto add = [&](BitBlock data, double metric, unsigned start, unsigned end) {
        CandidatePath p;
        p.data_bits = std::move(data);
        p.metric = metric;
        p.rank = static_cast<int>(list.entries.size()) + 1;
        p.start_state = start;
        p.end_state = end;
        list.entries.push_back(std::move(p));
    };

    SUBCASE("only rank 3 passes") {
        add(failing(1), 5.0, 0, 0);
        add(failing(2), 4.0, 0, 0);
        add(passing(3), 3.0, 0, 0);
        DecodeOutcome out = crc_select(list, g, false);
        CHECK(out.kind != OutcomeKind::erasure);
        CHECK(out.rank_selected == 3);
        CHECK(*out.selected == passing(3));
    }
    SUBCASE("no entry passes -> erasure") {
        add(failing(1), 5.0, 0, 0);
        add(failing(2), 4.0, 0, 0);
        DecodeOutcome out = crc_select(list, g, false);
        CHECK(out.kind == OutcomeKind::erasure);
        CHECK(!out.selected.has_value());
    }
    SUBCASE("two passing entries: lower rank wins") {
        add(passing(6), 5.0, 0, 0);
        add(passing(3), 4.0, 0, 0);
        DecodeOutcome out = crc_select(list, g, false);
        CHECK(out.rank_selected == 1);
        CHECK(*out.selected == passing(6));
    }
    SUBCASE("tail-biting filter applies before CRC") {
        add(passing(6), 5.0, 1, 2);  // not tail-biting
        add(passing(3), 4.0, 3, 3);
        DecodeOutcome out = crc_select(list, g, true);
        CHECK(out.rank_selected == 2);
        CHECK(*out.selected == passing(3));
        DecodeOutcome no_tb = crc_select(list, g, false);
        CHECK(no_tb.rank_selected == 1);
    }
}

TEST_CASE("punctured pipeline round-trip: noiseless codeword decodes at rank 1") {
    CodeSystem sys = presets::tbcc_512_43_crc0xF69();
    AdaptiveDecoder dec(sys);
    std::mt19937_64 rng(61);
    for (int t = 0; t < 20; ++t) {
        BitBlock msg(32);
        for (int i = 0; i < 32; ++i) msg.set(i, rng() & 1);
        const BitBlock data = sys.attach_crc(msg);
        const BitBlock cw = sys.encode_data(data);
        std::vector<double> llrs(cw.size());
        for (std::size_t i = 0; i < cw.size(); ++i) llrs[i] = cw.get(i) ? -8.0 : 8.0;
        DecodeOutcome out = dec.decode(llrs, ListConfig{1, 4});
        REQUIRE(out.selected.has_value());
        CHECK(*out.selected == data);
        CHECK(out.rank_selected == 1);
        CHECK(out.final_L == 1);
    }
}

TEST_CASE("adaptive decoder basics") {
    CodeSystem sys = make_tbcc_system(8, parse_hex_poly("0xB", 3),
                                      ConvCodeSpec::from_octal(2, {"7", "5"}));
    AdaptiveDecoder dec(sys);
    std::mt19937_64 rng(55);

    SUBCASE("noiseless success at the first round, final_L = L_min") {
        BitBlock msg(8);
        for (int i = 0; i < 8; ++i) msg.set(i, rng() & 1);
        BitBlock cw = sys.encode(msg);
        std::vector<double> llrs(cw.size());
        for (std::size_t i = 0; i < cw.size(); ++i) llrs[i] = cw.get(i) ? -5.0 : 5.0;
        DecodeOutcome out = dec.decode(llrs, ListConfig{1, 8});
        CHECK(out.final_L == 1);
        REQUIRE(out.selected.has_value());
        CHECK(classify_outcome(out.selected, sys.attach_crc(msg)) == OutcomeKind::correct);
    }
    SUBCASE("L_min = L_max matches the nonadaptive decode") {
        ChannelParams ch = make_channel(1.0, sys.message_rate());
        for (int t = 0; t < 200; ++t) {
            auto trng = trial_rng(7, 0, t);
            BitBlock msg(8);
            for (int i = 0; i < 8; ++i) msg.set(i, trng() & 1);
            BitBlock cw = sys.encode(msg);
            auto llrs = transmit(cw, ch, trng);
            DecodeOutcome a = dec.decode(llrs, ListConfig{8, 8});
            DecodeOutcome b = dec.decode(llrs, ListConfig{8, 8});
            CHECK(a.kind == b.kind);
            CHECK(a.selected == b.selected);
            CHECK(a.final_L == 8);
        }
    }
    SUBCASE("list config validation") {
        std::vector<double> llrs(sys.block_length(), 0.0);
        CHECK_THROWS_AS(dec.decode(llrs, ListConfig{4, 2}), parameter_error);
        CHECK_THROWS_AS(dec.decode(llrs, ListConfig{3, 8}), parameter_error);
    }
}
