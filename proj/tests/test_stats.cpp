#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ppsbreak/error.hpp"
#include "ppsbreak/stats.hpp"
#include "test_helpers.hpp"

using namespace ppsbreak;
using test_helpers::demo_key;

namespace {

BitSequence from_string(const char* text) {
    BitSequence bits;
    for (const char* c = text; *c; ++c) {
        bits.push_back(static_cast<std::uint8_t>(*c - '0'));
    }
    return bits;
}

BitSequence alternating(std::size_t n) {
    BitSequence bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = i % 2 == 0;
    return bits;
}

// Published worked-example p-values of NIST SP 800-22, reproduced with an
// independent 50-digit evaluation of the test formulas before freezing.
constexpr double kFrequencyExample = 0.527089256866;
constexpr double kBlockFrequencyExample = 0.801251956901;
constexpr double kRunsExample = 0.147232255364;
constexpr double kCusumExample = 0.411658619154;
constexpr double kApenExample = 0.261961104882;

} // namespace

TEST_CASE("bit serialization is MSB-first") {
    const std::uint8_t bytes[] = {0b10110010};
    const BitSequence bits = bits_msb_first(bytes);
    CHECK(bits == BitSequence{1, 0, 1, 1, 0, 0, 1, 0});
}

TEST_CASE("blue-channel extraction length and determinism") {
    const SecretKey key = demo_key();
    const BitSequence a = extract_blue_bits(key, 2, 2);
    CHECK(a.size() == 32);
    CHECK(a == extract_blue_bits(key, 2, 2));

    // Bit i*8+t carries bit (7-t) of the i-th blue byte in raster order.
    const RgbImage stream = cks_image(key, 2, 2);
    for (std::size_t i = 0; i < stream.pixel_count(); ++i) {
        for (int t = 0; t < 8; ++t) {
            CHECK(a[i * 8 + static_cast<std::size_t>(t)] ==
                  ((stream[i].b >> (7 - t)) & 1));
        }
    }
}

TEST_CASE("frequency test") {
    CHECK(frequency_test(alternating(1000)) == 1.0);
    CHECK(frequency_test(BitSequence(100, 1)) < 1e-20);
    CHECK(std::fabs(frequency_test(from_string("1011010101")) - kFrequencyExample) < 1e-9);
    CHECK_THROWS_AS(frequency_test(BitSequence{}), InsufficientDataError);
}

TEST_CASE("frequency p-value strictly decreases with the ones excess") {
    const std::size_t n = 1000;
    double previous = 2.0;
    for (std::size_t excess = 0; excess <= 20; excess += 2) {
        BitSequence bits(n, 0);
        for (std::size_t i = 0; i < n / 2 + excess; ++i) bits[i] = 1;
        const double p = frequency_test(bits);
        CHECK(p < previous);
        previous = p;
    }
}

TEST_CASE("block frequency test") {
    CHECK(block_frequency_test(alternating(1000), 2) == 1.0);
    CHECK(block_frequency_test(BitSequence(1000, 1), 10) < 1e-100);
    CHECK(std::fabs(block_frequency_test(from_string("0110011010"), 3) -
                    kBlockFrequencyExample) < 1e-9);
    CHECK_THROWS_AS(block_frequency_test(from_string("101"), 4), InsufficientDataError);
}

TEST_CASE("runs test") {
    CHECK(runs_test(alternating(1000)) < 1e-100);
    CHECK(std::fabs(runs_test(from_string("1001101011")) - kRunsExample) < 1e-9);
    // Degenerate proportion fails the prerequisite frequency check.
    CHECK(runs_test(BitSequence(100, 1)) == 0.0);
    CHECK(runs_test(BitSequence(4, 0)) == 0.0);
}

TEST_CASE("cumulative sums forward test") {
    // Minimal excursion: the walk never strays past 1.
    CHECK(cusum_forward_test(alternating(1000)) > 0.99);
    CHECK(cusum_forward_test(BitSequence(100, 1)) < 1e-20);
    CHECK(std::fabs(cusum_forward_test(from_string("1011010111")) - kCusumExample) < 1e-9);
}

TEST_CASE("approximate entropy test") {
    CHECK(std::fabs(approximate_entropy_test(from_string("0100110101"), 3) -
                    kApenExample) < 1e-9);
    // Constant and perfectly periodic sequences carry no conditional surprise.
    CHECK(approximate_entropy_test(BitSequence(512, 1), 2) < 1e-100);
    CHECK(approximate_entropy_test(alternating(512), 1) < 1e-100);
    CHECK_THROWS_AS(approximate_entropy_test(from_string("1011"), 10), InsufficientDataError);
    CHECK_THROWS_AS(approximate_entropy_test(from_string("1011"), 0), Error);
}

TEST_CASE("all five tests return probabilities on keystream data") {
    const SecretKey key = demo_key();
    const BitSequence bits = extract_blue_bits(key, 32, 32);
    for (double p : {frequency_test(bits), block_frequency_test(bits, 100), runs_test(bits),
                     cusum_forward_test(bits), approximate_entropy_test(bits, 10)}) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("battery report shape and determinism") {
    const RandomnessReport a = run_randomness_battery(3, 8, 8, 77);
    CHECK(a.key_count == 3);
    CHECK(a.sequence_bits == 512);
    REQUIRE(a.p_values.size() == 3);
    for (const auto& row : a.p_values) {
        for (double p : row) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
    }

    // Same seed, different worker counts: identical report.
    const RandomnessReport b = run_randomness_battery(3, 8, 8, 77, 1);
    const RandomnessReport c = run_randomness_battery(3, 8, 8, 77, 3);
    CHECK(a.p_values == b.p_values);
    CHECK(a.p_values == c.p_values);
    CHECK(a.pass_counts == c.pass_counts);
}

TEST_CASE("csv layout") {
    const RandomnessReport report = run_randomness_battery(2, 8, 8, 5);
    std::ostringstream out;
    write_randomness_csv(report, out);
    const std::string text = out.str();

    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    CHECK(line.substr(0, 1) == "#");
    std::getline(lines, line);
    CHECK(line == "key_index,test_name,p_value,pass");

    std::size_t data_rows = 0, summary_rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("summary,", 0) == 0) {
            ++summary_rows;
        } else if (!line.empty()) {
            ++data_rows;
        }
    }
    CHECK(data_rows == 2 * 5);
    CHECK(summary_rows == 5);
    CHECK(text.find("summary,frequency,") != std::string::npos);
}
