#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "listcode/spectrum.hpp"
#include "listcode/system.hpp"

using namespace listcode;

namespace {

// Naive per-message enumeration, the oracle for the Gray walk.
WeightSpectrum naive_spectrum(const GeneratorMatrix& G) {
    WeightSpectrum ws(G.n, G.k);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << G.k); ++m) {
        BitBlock msg(G.k);
        for (std::size_t i = 0; i < G.k; ++i)
            if ((m >> i) & 1) msg.set(i, true);
        ws.counts[gf2_matvec(G, msg).weight()]++;
    }
    return ws;
}

GeneratorMatrix random_matrix(std::size_t k, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BitBlock> rows;
    for (std::size_t r = 0; r < k; ++r) {
        BitBlock row(n);
        for (std::size_t i = 0; i < n; ++i) row.set(i, rng() & 1);
        rows.push_back(std::move(row));
    }
    return GeneratorMatrix(std::move(rows));
}

} // namespace

TEST_CASE("full_spectrum_gray basics") {
    SUBCASE("3-fold repetition") {
        GeneratorMatrix G({BitBlock::from_string("111")});
        WeightSpectrum ws = full_spectrum_gray(G);
        CHECK(ws.A(0) == 1);
        CHECK(ws.A(3) == 1);
        CHECK(ws.total() == 2);
        CHECK(ws.d_min() == 3);
    }
    SUBCASE("two-row example") {
        GeneratorMatrix G({BitBlock::from_string("110"), BitBlock::from_string("011")});
        WeightSpectrum ws = full_spectrum_gray(G);
        CHECK(ws.A(0) == 1);
        CHECK(ws.A(2) == 3);
        CHECK(ws.total() == 4);
    }
    SUBCASE("tractability guard") {
        GeneratorMatrix G = random_matrix(35, 8, 1);
        CHECK_THROWS_AS(full_spectrum_gray(G), guard_error);
    }
}

TEST_CASE("gray walk equals naive enumeration, any worker count") {
    for (std::uint64_t seed : {2u, 3u, 4u}) {
        const std::size_t k = 10 + seed;
        GeneratorMatrix G = random_matrix(k, 70 + 7 * seed, seed);
        WeightSpectrum oracle = naive_spectrum(G);
        for (unsigned workers : {1u, 2u, 3u}) {
            WeightSpectrum ws = full_spectrum_gray(G, workers);
            CHECK(ws.counts == oracle.counts);
        }
        CHECK(oracle.total() == (std::uint64_t{1} << k));
    }
}

TEST_CASE("bounded_weight_tb_search") {
    ConvCodeSpec spec = ConvCodeSpec::from_octal(2, {"7", "5"});

    SUBCASE("weight cap below the tail-biting minimum leaves only the zero word") {
        // the k=8 tail-biting code has d_min 4 (wrap-around period-2 word),
        // below the convolutional d_free of 5
        TbSearchResult res = bounded_weight_tb_search(spec, 8, 3);
        CHECK(res.spectrum.A(0) == 1);
        CHECK(res.spectrum.total() == 1);
        CHECK(bounded_weight_tb_search(spec, 8, 4).spectrum.A(4) == 2);
    }
    SUBCASE("cap = n equals full enumeration via the derived generator") {
        for (std::size_t k : {6u, 9u, 12u}) {
            GeneratorMatrix G = derive_generator(
                [&](const BitBlock& m) { return tb_encode(m, spec); }, k, 2 * k);
            WeightSpectrum full = full_spectrum_gray(G);
            TbSearchResult res = bounded_weight_tb_search(spec, k, 2 * k);
            CHECK(res.spectrum.counts == full.counts);
            CHECK(res.words.entries.size() == (std::uint64_t{1} << k));
        }
    }
    SUBCASE("collected words carry consistent data and weights") {
        TbSearchResult res = bounded_weight_tb_search(spec, 10, 8);
        for (const auto& e : res.words.entries) {
            CHECK(tb_encode(e.data, spec) == e.codeword);
            CHECK(e.codeword.weight() == e.weight);
            CHECK(e.weight <= 8);
        }
    }
    SUBCASE("worker invariance") {
        TbSearchResult a = bounded_weight_tb_search(spec, 12, 10, true, 1);
        TbSearchResult b = bounded_weight_tb_search(spec, 12, 10, true, 3);
        CHECK(a.spectrum.counts == b.spectrum.counts);
        REQUIRE(a.words.entries.size() == b.words.entries.size());
        for (std::size_t i = 0; i < a.words.entries.size(); ++i)
            CHECK(a.words.entries[i].codeword == b.words.entries[i].codeword);
    }
}

TEST_CASE("polar_low_weight_probe") {
    PolarCodeSpec spec = construct_frozen_set(reliability_sequence_5g(), 16, 5);

    SUBCASE("L=1 finds nothing") {
        CHECK(polar_low_weight_probe(spec, 1).entries.empty());
    }
    SUBCASE("toy code, L = 2^K recovers every nonzero codeword") {
        CodewordSet probe = polar_low_weight_probe(spec, 32);
        std::set<std::string> got;
        for (const auto& e : probe.entries) got.insert(e.codeword.to_string());
        std::set<std::string> expect;
        for (unsigned m = 1; m < 32; ++m) {
            BitBlock data(5);
            for (int i = 0; i < 5; ++i) data.set(i, (m >> i) & 1);
            expect.insert(polar_encode(data, spec).to_string());
        }
        CHECK(got == expect);
        for (const auto& e : probe.entries) {
            CHECK(polar_encode(e.data, spec) == e.codeword);
            CHECK(e.weight == e.codeword.weight());
        }
    }
    SUBCASE("deterministic") {
        CodewordSet a = polar_low_weight_probe(spec, 8);
        CodewordSet b = polar_low_weight_probe(spec, 8);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            CHECK(a.entries[i].codeword == b.entries[i].codeword);
    }
}

TEST_CASE("expurgation monotonicity on a small system") {
    // inner (k=7) spectrum must dominate the CRC-expurgated (k=4) spectrum
    CodeSystem sys = make_tbcc_system(4, parse_hex_poly("0xB", 3),
                                      ConvCodeSpec::from_octal(2, {"7", "5"}));
    GeneratorMatrix inner = derive_generator(
        [&](const BitBlock& d) { return sys.inner_encode(d); }, 7, sys.inner_block_length());
    GeneratorMatrix concat = derive_generator(
        [&](const BitBlock& m) { return sys.encode(m); }, 4, sys.block_length());
    WeightSpectrum wi = full_spectrum_gray(inner);
    WeightSpectrum wc = full_spectrum_gray(concat);
    for (std::size_t d = 0; d < wc.counts.size(); ++d) CHECK(wc.A(d) <= wi.A(d));
}

TEST_CASE("cumulative_spectrum") {
    WeightSpectrum ws(3, 1);
    ws.counts[0] = 1;
    ws.counts[3] = 1;
    auto cum = cumulative_spectrum(ws);
    CHECK(cum[2] == 1);
    CHECK(cum[3] == 2);

    GeneratorMatrix G = random_matrix(9, 30, 12);
    WeightSpectrum full = full_spectrum_gray(G);
    CHECK(cumulative_spectrum(full).back() == (1u << 9));
}

TEST_CASE("spectrum CSV round-trip") {
    GeneratorMatrix G = random_matrix(8, 24, 5);
    WeightSpectrum ws = full_spectrum_gray(G);
    const auto path = std::filesystem::temp_directory_path() / "listcode_test_spectrum.csv";
    write_spectrum_csv(ws, path);
    WeightSpectrum back = read_spectrum_csv(path);
    for (std::size_t d = 0; d < ws.counts.size(); ++d) CHECK(back.A(d) == ws.A(d));
    std::filesystem::remove(path);
}
