#include <doctest.h>

#include "listcode/config.hpp"

using namespace listcode;

TEST_CASE("bundled presets parse into valid systems") {
    auto names = preset_names();
    CHECK(names.size() == 8);
    for (const auto& name : names) {
        SystemConfig cfg = preset_config(name);
        CHECK(cfg.system.block_length() == 512);
        CHECK(cfg.system.message_length == 32);
    }
    SystemConfig tbcc = preset_config("tbcc_512_43_crc0xF69");
    CHECK(tbcc.decoder == "lva");
    CHECK(tbcc.system.data_length() == 43);
    CHECK(tbcc.system.puncture.positions == std::vector<std::size_t>{47, 60, 129, 504});
    CHECK(tbcc.list.L_min == 1);
    CHECK(tbcc.list.L_max == 1024);

    SystemConfig polar = preset_config("polar_5g_512_43_crc0xD41");
    CHECK(polar.decoder == "scl");
    CHECK(polar.system.polar.N == 512);
    CHECK(polar.system.polar.K == 43);

    SystemConfig crc24 = preset_config("polar_5g_512_crc24c");
    CHECK(crc24.system.data_length() == 56);
    CHECK(crc24.system.crc.coeffs == 0x1B2B117);

    CHECK_THROWS_AS(preset_config("nonexistent"), parameter_error);
}

TEST_CASE("config validation") {
    SUBCASE("unknown top-level key") {
        CHECK_THROWS_WITH_AS(parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "tbcc":{"memory":2,"taps_octal":["7","5"]},
            "bogus": 1})"),
                             doctest::Contains("unknown key 'bogus'"), parse_error);
    }
    SUBCASE("unknown nested key") {
        CHECK_THROWS_WITH_AS(parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "tbcc":{"memory":2,"taps_octal":["7","5"],"extra":[]}})"),
                             doctest::Contains("unknown key 'extra'"), parse_error);
    }
    SUBCASE("decoder must match the code type") {
        CHECK_THROWS_AS(parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "tbcc":{"memory":2,"taps_octal":["7","5"]},
            "decoder":"scl"})"),
                        parse_error);
    }
    SUBCASE("missing required sections") {
        CHECK_THROWS_AS(parse_system_config(R"({"code":"polar","message_length":4,
            "crc":{"hex":"0xB","width":3}})"),
                        parse_error);
        CHECK_THROWS_AS(parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "polar":{"N":64}})"),
                        parse_error);
    }
    SUBCASE("list constraints") {
        CHECK_THROWS_AS(parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "tbcc":{"memory":2,"taps_octal":["7","5"]},
            "list":{"min":4,"max":2}})"),
                        parse_error);
        CHECK_THROWS_AS(parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "tbcc":{"memory":2,"taps_octal":["7","5"]},
            "list":{"min":3,"max":8}})"),
                        parse_error);
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(parse_system_config("not json"), parse_error);
    }
    SUBCASE("valid minimal tbcc config") {
        SystemConfig cfg = parse_system_config(R"({"code":"tbcc","message_length":4,
            "crc":{"hex":"0xB","width":3},
            "tbcc":{"memory":2,"taps_octal":["7","5"]},
            "seed": 99})");
        CHECK(cfg.system.kind == InnerCode::tbcc);
        CHECK(cfg.seed == 99);
        CHECK(cfg.decoder == "lva");
        CHECK(cfg.list.L_min == 1);
        CHECK(cfg.system.name == "tbcc_14_7_crc0xB");
    }
}
