#include <doctest.h>

#include <random>

#include "b23/encoding.hpp"
#include "oracles.hpp"

using namespace b23;

TEST_CASE("bitstream basics") {
    Bitstream bits;
    CHECK(bits.empty());
    bits.append_group(2);
    CHECK(bits.to_string() == "10");

    CHECK(Bitstream::parse("0100000100").to_string() == "0100000100");
    CHECK_THROWS_AS(Bitstream::parse("01x0"), ParseError);
    try {
        Bitstream::parse("012");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }

    CHECK(Bitstream::from_bytes({0x4c}, 6).to_string() == "010011");
    CHECK_THROWS_AS(Bitstream::from_bytes({0x4c}, 20), std::invalid_argument);
    CHECK_THROWS_AS(Bitstream::from_bytes({0x4d}, 6), std::invalid_argument);  // pad bits set
}

TEST_CASE("encode_a23 worked examples") {
    CHECK(encode_a23(parse_trits("10010")).to_string() == "0100000100");
    CHECK(encode_a23(parse_trits("12120")).to_string() == "0110011000");
    CHECK(encode_a23({}).empty());
}

TEST_CASE("decode_a23 inverts encode_a23 and rejects bad input") {
    CHECK(to_string(decode_a23(Bitstream::parse("0100000100"))) == "10010");
    CHECK(decode_a23(Bitstream()).empty());
    CHECK_THROWS_AS(decode_a23(Bitstream::parse("110")), DecodeError);   // odd
    CHECK_THROWS_AS(decode_a23(Bitstream::parse("1100")), DecodeError);  // 11 group
    CHECK_THROWS_AS(decode_a23(Bitstream::parse("001100")), DecodeError);
}

TEST_CASE("encode_b23 worked examples") {
    CHECK(encode_b23(parse_trits("12120")).to_string() == "111100");
    CHECK(encode_b23(parse_trits("10010")).to_string() == "0100000100");

    // greedy scan: lone 1, then fused pair
    CHECK(encode_b23(parse_trits("112")).to_string() == "0111");
    CHECK(to_string(decode_b23(Bitstream::parse("0111"))) == "112");
    // fused pair, then lone 1
    CHECK(encode_b23(parse_trits("121")).to_string() == "1101");
    CHECK(to_string(decode_b23(Bitstream::parse("1101"))) == "121");
}

TEST_CASE("decode_b23 group map") {
    CHECK(to_string(decode_b23(Bitstream::parse("111100"))) == "12120");
    CHECK(to_string(decode_b23(Bitstream::parse("1111"))) == "1212");
    CHECK(to_string(decode_b23(Bitstream::parse("00"))) == "0");
    CHECK(decode_b23(Bitstream()).empty());
    CHECK_THROWS_AS(decode_b23(Bitstream::parse("111")), DecodeError);
}

TEST_CASE("count_12_pairs") {
    CHECK(count_12_pairs(parse_trits("12120")) == 2);
    CHECK(count_12_pairs(parse_trits("000")) == 0);
    CHECK(count_12_pairs(parse_trits("121212")) == 3);
    CHECK(count_12_pairs({}) == 0);
    CHECK(count_12_pairs(parse_trits("122")) == 1);
    CHECK(count_12_pairs(parse_trits("112")) == 1);
}

TEST_CASE("randomized round-trips and length laws") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> length(0, 2000);
    for (int iteration = 0; iteration < 1000; ++iteration) {
        TritString trits = testing::random_trits(rng, length(rng));

        Bitstream a23 = encode_a23(trits);
        REQUIRE(a23.size() == 2 * trits.size());
        REQUIRE(decode_a23(a23) == trits);

        Bitstream b23 = encode_b23(trits);
        std::size_t pairs = count_12_pairs(trits);
        REQUIRE(b23.size() == 2 * (trits.size() - pairs));
        REQUIRE(decode_b23(b23) == trits);

        // shorter than the fixed-width form exactly when a pair was fused
        REQUIRE(b23.size() <= a23.size());
        REQUIRE((b23.size() == a23.size()) == (pairs == 0));

        // the greedy count equals the plain adjacent-pair count
        REQUIRE(pairs == testing::naive_pair_count(trits));

        // deterministic
        REQUIRE(encode_b23(trits) == b23);
    }
}
